// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace fusemot::track {

enum class TrackStatus { Tentative, Confirmed, Deleted };

/// Constant-velocity planar track: state (x, y, vx, vy) in the plane frame,
/// meters and meters/second. Valid transitions are
/// tentative -> confirmed -> deleted and tentative -> deleted.
struct TrackState {
    Eigen::Vector4d state = Eigen::Vector4d::Zero();
    Eigen::Matrix4d cov = Eigen::Matrix4d::Identity();
    std::int64_t track_id = -1;
    int age_frames = 0;
    int hits = 0;
    int misses = 0;
    TrackStatus status = TrackStatus::Tentative;

    // Last observed body extents, carried for emitted boxes while coasting.
    double extent_x = 0.5;
    double extent_y = 0.5;
    double body_height = 1.7;

    Eigen::Vector2d position() const { return state.head<2>(); }
    Eigen::Vector2d velocity() const { return state.tail<2>(); }
};

/// Constant-velocity predict with discrete white-noise acceleration of
/// standard deviation `accel_noise` (m/s^2). dt must be positive.
/// The returned covariance is re-symmetrized.
TrackState kalman_predict(const TrackState& track, double dt, double accel_noise);

/// Position-only linear update (Joseph-form covariance) with isotropic
/// measurement noise of standard deviation `meas_noise_std`.
TrackState kalman_update(const TrackState& track, const Eigen::Vector2d& measurement,
                         double meas_noise_std);

}  // namespace fusemot::track
