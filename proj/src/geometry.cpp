// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fusemot::geom {

void CameraIntrinsics::validate() const {
    if (fx <= 0.0 || fy <= 0.0)
        throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("CameraIntrinsics: image size must be positive");
    if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
        throw std::invalid_argument("CameraIntrinsics: principal point outside image");
}

void StereoRig::validate() const {
    intrinsics.validate();
    if (baseline_m <= 0.0)
        throw std::invalid_argument("StereoRig: baseline must be positive");
}

double disparity_to_depth(const StereoRig& rig, double disparity_px) {
    if (!(disparity_px > 0.0))
        throw NonPositiveDisparity("disparity must be positive, got " +
                                   std::to_string(disparity_px));
    return rig.intrinsics.fx * rig.baseline_m / disparity_px;
}

Eigen::Vector3d backproject(const CameraIntrinsics& intr, double u, double v,
                            double depth_m) {
    if (!(depth_m > 0.0))
        throw NonPositiveDepth("depth must be positive, got " + std::to_string(depth_m));
    return {(u - intr.cx) / intr.fx * depth_m, (v - intr.cy) / intr.fy * depth_m,
            depth_m};
}

Eigen::Vector2d project(const CameraIntrinsics& intr, const Eigen::Vector3d& point) {
    if (!(point.z() > 0.0))
        throw NonPositiveDepth("cannot project point with z <= 0");
    return {intr.fx * point.x() / point.z() + intr.cx,
            intr.fy * point.y() / point.z() + intr.cy};
}

namespace {

// In-plane x axis: take the camera axis least aligned with the normal and
// remove its normal component. Deterministic so serialized planes reproduce.
Eigen::Vector3d plane_x_axis(const Eigen::Vector3d& n) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(n[i]) < std::abs(n[k])) k = i;
    Eigen::Vector3d axis = Eigen::Vector3d::Unit(k);
    return (axis - n.dot(axis) * n).normalized();
}

}  // namespace

GroundPlane::GroundPlane(const Eigen::Vector3d& normal, double offset_m) {
    const double len = normal.norm();
    if (!(len > 0.0)) throw std::invalid_argument("GroundPlane: zero normal");
    normal_ = normal / len;
    offset_ = offset_m;

    const Eigen::Vector3d ex = plane_x_axis(normal_);
    const Eigen::Vector3d ey = normal_.cross(ex);
    rotation_.row(0) = ex;
    rotation_.row(1) = ey;
    rotation_.row(2) = normal_;
    // Plane-frame origin is the camera's foot point offset*normal, so the
    // translation reduces to (0, 0, -offset).
    translation_ = Eigen::Vector3d(0.0, 0.0, -offset_);
}

GroundPlane::GroundPlane(const Eigen::Vector3d& normal, double offset_m,
                         const Eigen::Matrix3d& rotation,
                         const Eigen::Vector3d& translation) {
    const double len = normal.norm();
    if (!(len > 0.0)) throw std::invalid_argument("GroundPlane: zero normal");
    normal_ = normal / len;
    offset_ = offset_m;
    rotation_ = rotation;
    translation_ = translation;

    if ((rotation_ * rotation_.transpose() - Eigen::Matrix3d::Identity()).norm() > 1e-6)
        throw Error("GroundPlane: stored rotation is not orthonormal");
    if ((rotation_.row(2).transpose() - normal_).norm() > 1e-6)
        throw Error("GroundPlane: stored rotation inconsistent with normal");
    if (std::abs(translation_.z() + offset_) > 1e-6)
        throw Error("GroundPlane: stored translation inconsistent with offset");
}

GroundPlane GroundPlane::oriented_toward_camera() const {
    // Camera origin height is -offset; flip when it would be negative.
    if (-offset_ < 0.0) return GroundPlane(-normal_, -offset_);
    return *this;
}

}  // namespace fusemot::geom
