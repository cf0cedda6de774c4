// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "fusemot/errors.hpp"

// Camera model and ground-plane coordinate transforms shared by all modules.
//
// Conventions (used everywhere in this codebase):
//   * camera frame: right-handed, z forward, y down, units meters
//   * plane frame:  x/y span the ground plane, z is signed height above it
//   * all public distances are meters; file formats carrying millimeters
//     are converted at ingestion

namespace fusemot::geom {

struct NonPositiveDisparity : Error {
    using Error::Error;
};
struct NonPositiveDepth : Error {
    using Error::Error;
};

struct CameraIntrinsics {
    double fx = 0.0;  ///< focal length, pixels
    double fy = 0.0;
    double cx = 0.0;  ///< principal point, pixels
    double cy = 0.0;
    int width = 0;    ///< image size, pixels
    int height = 0;

    /// Throws std::invalid_argument unless fx,fy > 0 and the principal
    /// point lies inside the image.
    void validate() const;
};

struct StereoRig {
    CameraIntrinsics intrinsics;
    double baseline_m = 0.0;

    void validate() const;
};

/// depth = fx * baseline / disparity. Throws NonPositiveDisparity for
/// disparity <= 0 (invalid stereo match).
double disparity_to_depth(const StereoRig& rig, double disparity_px);

/// Pinhole backprojection of pixel (u,v) at the given depth.
/// Throws NonPositiveDepth for depth <= 0.
Eigen::Vector3d backproject(const CameraIntrinsics& intr, double u, double v,
                            double depth_m);

/// Pinhole projection; point must have z > 0.
Eigen::Vector2d project(const CameraIntrinsics& intr, const Eigen::Vector3d& point);

/// Calibrated ground plane with the rigid camera-to-plane transform.
///
/// Plane equation in the camera frame: normal . X = offset, |normal| = 1.
/// The plane frame's origin is the camera's foot point on the plane and its
/// z axis is the plane normal, so to_plane(X).z() is the signed height of X
/// above the plane. The in-plane x axis is derived deterministically from
/// the camera axis least aligned with the normal.
class GroundPlane {
public:
    GroundPlane() = default;

    /// Builds the plane frame from the plane parameters. The normal is
    /// normalized; a zero normal throws std::invalid_argument.
    GroundPlane(const Eigen::Vector3d& normal, double offset_m);

    /// Reconstructs a plane from serialized parameters. The rotation and
    /// translation must be consistent with (normal, offset) within 1e-6 or
    /// Error is thrown.
    GroundPlane(const Eigen::Vector3d& normal, double offset_m,
                const Eigen::Matrix3d& rotation, const Eigen::Vector3d& translation);

    const Eigen::Vector3d& normal() const { return normal_; }
    double offset() const { return offset_; }

    /// Signed height of a camera-frame point above the plane.
    double height_above(const Eigen::Vector3d& point_cam) const {
        return normal_.dot(point_cam) - offset_;
    }

    Eigen::Vector3d to_plane(const Eigen::Vector3d& point_cam) const {
        return rotation_ * point_cam + translation_;
    }
    Eigen::Vector3d to_camera(const Eigen::Vector3d& point_plane) const {
        return rotation_.transpose() * (point_plane - translation_);
    }

    const Eigen::Matrix3d& rotation() const { return rotation_; }
    const Eigen::Vector3d& translation() const { return translation_; }

    /// Returns the plane with (normal, offset) flipped if needed so that the
    /// camera origin has non-negative height (camera above the ground).
    GroundPlane oriented_toward_camera() const;

private:
    Eigen::Vector3d normal_ = Eigen::Vector3d::UnitZ();
    double offset_ = 0.0;
    Eigen::Matrix3d rotation_ = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation_ = Eigen::Vector3d::Zero();
};

}  // namespace fusemot::geom
