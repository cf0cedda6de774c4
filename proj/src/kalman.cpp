// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/kalman.hpp"

#include <cmath>
#include <stdexcept>

namespace fusemot::track {

TrackState kalman_predict(const TrackState& track, double dt, double accel_noise) {
    if (!(dt > 0.0)) throw std::invalid_argument("kalman_predict: dt must be positive");

    Eigen::Matrix4d f = Eigen::Matrix4d::Identity();
    f(0, 2) = dt;
    f(1, 3) = dt;

    const double q = accel_noise * accel_noise;
    const double dt2 = dt * dt;
    Eigen::Matrix4d noise = Eigen::Matrix4d::Zero();
    noise(0, 0) = noise(1, 1) = q * dt2 * dt2 / 4.0;
    noise(2, 2) = noise(3, 3) = q * dt2;
    noise(0, 2) = noise(2, 0) = q * dt2 * dt / 2.0;
    noise(1, 3) = noise(3, 1) = q * dt2 * dt / 2.0;

    TrackState out = track;
    out.state = f * track.state;
    out.cov = f * track.cov * f.transpose() + noise;
    out.cov = ((out.cov + out.cov.transpose()) / 2.0).eval();
    return out;
}

TrackState kalman_update(const TrackState& track, const Eigen::Vector2d& measurement,
                         double meas_noise_std) {
    if (!measurement.allFinite())
        throw std::invalid_argument("kalman_update: non-finite measurement");

    Eigen::Matrix<double, 2, 4> h = Eigen::Matrix<double, 2, 4>::Zero();
    h(0, 0) = 1.0;
    h(1, 1) = 1.0;
    const Eigen::Matrix2d r =
        meas_noise_std * meas_noise_std * Eigen::Matrix2d::Identity();

    const Eigen::Matrix2d s = h * track.cov * h.transpose() + r;
    const Eigen::Matrix<double, 4, 2> k = track.cov * h.transpose() * s.inverse();

    TrackState out = track;
    out.state = track.state + k * (measurement - h * track.state);
    const Eigen::Matrix4d ikh = Eigen::Matrix4d::Identity() - k * h;
    out.cov = ikh * track.cov * ikh.transpose() + k * r * k.transpose();
    out.cov = ((out.cov + out.cov.transpose()) / 2.0).eval();
    return out;
}

}  // namespace fusemot::track
