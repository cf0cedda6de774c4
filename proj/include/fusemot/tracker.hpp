// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "fusemot/boxes.hpp"
#include "fusemot/kalman.hpp"
#include "fusemot/occupancy.hpp"

// Frame-to-frame tracking of occupancy clusters: Kalman-filtered
// constant-velocity states, Hungarian association on plane distance, and a
// hits/misses track lifecycle. One tracker instance per sequence.

namespace fusemot::track {

struct TrackerConfig {
    double gate_m = 1.0;           ///< max association distance
    int confirm_hits = 3;
    int delete_misses = 5;
    double accel_noise = 2.0;      ///< process noise, m/s^2
    double meas_noise_m = 0.1;
    double init_pos_std = 0.3;
    double init_vel_std = 1.0;
    double frame_rate = 10.0;      ///< used when frames carry no timestamps
};

/// One tracking step: predict all tracks by dt, associate clusters
/// (Euclidean plane distance, gated), update matched tracks, spawn
/// tentative tracks from unmatched clusters, and apply the lifecycle rules
/// (confirm after `confirm_hits` hits, delete after `delete_misses`
/// consecutive misses). Deleted tracks are removed from `tracks`.
///
/// Returns one BBox3D per confirmed track (source_id "occupancy3d");
/// tentative tracks are suppressed. `next_track_id` increases monotonically
/// so ids are never reused within a sequence.
std::vector<BBox3D> step_tracker(std::vector<TrackState>& tracks,
                                 const std::vector<occupancy::Cluster>& clusters,
                                 double dt, const TrackerConfig& cfg,
                                 std::int64_t& next_track_id, int frame_index);

/// Convenience wrapper owning per-sequence state for the depth -> occupancy
/// -> cluster -> track chain.
class OccupancyTracker {
public:
    struct Config {
        occupancy::GridConfig grid;
        occupancy::ClusterConfig cluster;
        TrackerConfig tracker;
    };

    explicit OccupancyTracker(Config cfg = {}) : cfg_(cfg) {}

    /// Processes one depth frame; dt derives from the configured frame rate.
    std::vector<BBox3D> process(const DepthMap& depth,
                                const geom::CameraIntrinsics& intr,
                                const geom::GroundPlane& plane, int frame_index);

    std::vector<BBox3D> step(const std::vector<occupancy::Cluster>& clusters,
                             double dt, int frame_index);

    const std::vector<TrackState>& tracks() const { return tracks_; }

private:
    Config cfg_;
    std::vector<TrackState> tracks_;
    std::int64_t next_track_id_ = 1;
};

}  // namespace fusemot::track
