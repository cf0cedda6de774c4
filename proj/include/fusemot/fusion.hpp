// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <list>
#include <optional>
#include <set>
#include <vector>

#include "fusemot/boxes.hpp"

// Track-id-consistent fusion of 3D tracking results from an arbitrary set
// of sources. Incoming per-source tracks are treated as tracklets: a new
// observation joins the tracklet that already contains its
// (tracker id, track id) pair, else the tracklet it overlaps most -- when
// the overlap passes the IoU threshold or the enclosure (IoE) threshold --
// else it starts a fresh tracklet with a new consistent id.

namespace fusemot::fusion {

struct UnsupportedYaw : Error {
    using Error::Error;
};

/// Intersection over union of two plane-frame axis-aligned boxes.
/// Rotated boxes (yaw != 0) throw UnsupportedYaw.
double iou_3d(const BBox3D& a, const BBox3D& b);

/// Intersection over the smaller box's volume; 1 exactly when one box
/// encloses the other.
double ioe_3d(const BBox3D& a, const BBox3D& b);

/// Identity of one source's track: which tracker produced it and that
/// tracker's own track id.
struct SourceTrack {
    std::string tracker_id;
    std::int64_t track_id = 0;
    auto operator<=>(const SourceTrack&) const = default;
};

struct Tracklet {
    std::int64_t fused_id = 0;
    std::set<SourceTrack> members;
    std::vector<BBox3D> history;  ///< one fused box per frame with observations
    int last_update_frame = -1;
    BBox3D current;               ///< most recent box (observation or fused)
    std::vector<BBox3D> pending;  ///< raw observations of the frame in flight
};

class TrackletManager {
public:
    struct Config {
        double iou_threshold = 0.3;
        double ioe_threshold = 0.7;
        int staleness_frames = 15;  ///< frames without update before retirement
    };

    explicit TrackletManager(Config cfg = {});

    /// The membership test: returns the fused id of the live tracklet whose
    /// member set contains (det.source_id, det.track_id), if any.
    std::optional<std::int64_t> already_in_history(const BBox3D& det) const;

    /// Routes one observation. The detection must carry a track id and must
    /// not precede the manager's current frame. Returns the fused id it was
    /// assigned to (existing member tracklet, best-overlap tracklet, or a
    /// freshly created one). Ties on overlap break toward the lower fused id.
    std::int64_t fuse_observation(const BBox3D& det);

    /// Processes one frame's detections from all sources in canonical order
    /// (sorted by tracker id, then track id, so the result is independent of
    /// arrival order), then emits one box per updated tracklet: the
    /// confidence-weighted mean of this frame's member observations.
    /// Tracklets stale beyond the staleness limit are retired and never
    /// accept new members.
    std::vector<BBox3D> fuse_frame(std::vector<BBox3D> detections, int frame);

    const std::list<Tracklet>& live_tracklets() const { return live_; }
    const std::vector<Tracklet>& retired_tracklets() const { return retired_; }
    int current_frame() const { return current_frame_; }

private:
    void finalize_frame(int frame, std::vector<BBox3D>& emitted);

    Config cfg_;
    std::list<Tracklet> live_;
    std::vector<Tracklet> retired_;
    std::int64_t next_fused_id_ = 1;
    int current_frame_ = -1;
};

struct SafetyViolation {
    std::int64_t fused_id = 0;
    int start_frame = 0;
    int end_frame = 0;
    /// Smallest clearance of the box footprint to the safety line over the
    /// span; negative values measure how far the footprint reached beyond it.
    double min_distance_m = 0.0;
};

/// Reports every span of consecutive frames in [frame_begin, frame_end] in
/// which a fused track's footprint intersects the to-be-cleared region. The
/// polyline is oriented: the region to be cleared lies to the LEFT of its
/// direction of travel.
std::vector<SafetyViolation> safety_report(const std::vector<BBox3D>& fused_tracks,
                                           const std::vector<Eigen::Vector2d>& safety_line,
                                           int frame_begin, int frame_end);

/// Signed clearance of a plane-frame point to the safety polyline: negative
/// inside the to-be-cleared (left) region, positive on the platform side.
double safety_clearance(const Eigen::Vector2d& point,
                        const std::vector<Eigen::Vector2d>& safety_line);

}  // namespace fusemot::fusion
