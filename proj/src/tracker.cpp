// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/tracker.hpp"

#include <algorithm>

#include "fusemot/hungarian.hpp"

namespace fusemot::track {

namespace {

TrackState spawn_track(const occupancy::Cluster& cluster, const TrackerConfig& cfg,
                       std::int64_t id) {
    TrackState t;
    t.state << cluster.centroid.x(), cluster.centroid.y(), 0.0, 0.0;
    t.cov = Eigen::Matrix4d::Zero();
    t.cov(0, 0) = t.cov(1, 1) = cfg.init_pos_std * cfg.init_pos_std;
    t.cov(2, 2) = t.cov(3, 3) = cfg.init_vel_std * cfg.init_vel_std;
    t.track_id = id;
    t.hits = 1;
    t.extent_x = cluster.extent_x;
    t.extent_y = cluster.extent_y;
    t.body_height = cluster.height;
    return t;
}

BBox3D emit_box(const TrackState& t, int frame_index) {
    BBox3D box;
    box.center = {t.state(0), t.state(1), t.body_height / 2.0};
    box.width = std::max(t.extent_x, 0.1);
    box.depth = std::max(t.extent_y, 0.1);
    box.height = std::max(t.body_height, 0.1);
    box.confidence = 1.0;
    box.source_id = "occupancy3d";
    box.track_id = t.track_id;
    box.frame_index = frame_index;
    return box;
}

}  // namespace

std::vector<BBox3D> step_tracker(std::vector<TrackState>& tracks,
                                 const std::vector<occupancy::Cluster>& clusters,
                                 double dt, const TrackerConfig& cfg,
                                 std::int64_t& next_track_id, int frame_index) {
    for (auto& t : tracks) {
        t = kalman_predict(t, dt, cfg.accel_noise);
        ++t.age_frames;
    }

    Eigen::MatrixXd cost(static_cast<int>(tracks.size()),
                         static_cast<int>(clusters.size()));
    for (int i = 0; i < cost.rows(); ++i)
        for (int j = 0; j < cost.cols(); ++j)
            cost(i, j) = (tracks[i].position() - clusters[j].centroid).norm();

    const auto assignment = assign::associate_hungarian(cost, cfg.gate_m);

    std::vector<char> cluster_used(clusters.size(), 0);
    std::vector<char> track_hit(tracks.size(), 0);
    for (const auto& [ti, cj] : assignment.pairs) {
        auto& t = tracks[ti];
        t = kalman_update(t, clusters[cj].centroid, cfg.meas_noise_m);
        t.hits += 1;
        t.misses = 0;
        t.extent_x = clusters[cj].extent_x;
        t.extent_y = clusters[cj].extent_y;
        t.body_height = clusters[cj].height;
        if (t.status == TrackStatus::Tentative && t.hits >= cfg.confirm_hits)
            t.status = TrackStatus::Confirmed;
        track_hit[ti] = 1;
        cluster_used[cj] = 1;
    }

    for (std::size_t i = 0; i < tracks.size(); ++i) {
        if (track_hit[i]) continue;
        auto& t = tracks[i];
        t.misses += 1;
        if (t.misses >= cfg.delete_misses) t.status = TrackStatus::Deleted;
    }

    for (std::size_t j = 0; j < clusters.size(); ++j)
        if (!cluster_used[j])
            tracks.push_back(spawn_track(clusters[j], cfg, next_track_id++));

    std::vector<BBox3D> emitted;
    for (const auto& t : tracks)
        if (t.status == TrackStatus::Confirmed) emitted.push_back(emit_box(t, frame_index));

    std::erase_if(tracks, [](const TrackState& t) {
        return t.status == TrackStatus::Deleted;
    });
    return emitted;
}

std::vector<BBox3D> OccupancyTracker::process(const DepthMap& depth,
                                              const geom::CameraIntrinsics& intr,
                                              const geom::GroundPlane& plane,
                                              int frame_index) {
    const auto grid = occupancy::build_occupancy(depth, intr, plane, cfg_.grid);
    const auto clusters = occupancy::cluster_occupancy(grid, cfg_.cluster);
    return step(clusters, 1.0 / cfg_.tracker.frame_rate, frame_index);
}

std::vector<BBox3D> OccupancyTracker::step(const std::vector<occupancy::Cluster>& clusters,
                                           double dt, int frame_index) {
    return step_tracker(tracks_, clusters, dt, cfg_.tracker, next_track_id_, frame_index);
}

}  // namespace fusemot::track
