// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>

#include "fusemot/errors.hpp"

namespace fusemot {

/// Thrown when a detection box has no usable overlap with the image.
struct InvalidBox : Error {
    using Error::Error;
};

/// 2D detection box in image pixels. Boxes are clamped to the image bounds
/// at construction and are at least 1x1 px.
struct BBox2D {
    double left = 0.0;
    double top = 0.0;
    double width = 1.0;
    double height = 1.0;
    double confidence = 1.0;
    std::string class_label = "person";
    std::string source_id;
    std::optional<std::int64_t> track_id;

    double right() const { return left + width; }
    double bottom() const { return top + height; }
    double center_u() const { return left + width / 2.0; }
    double center_v() const { return top + height / 2.0; }

    /// Clamps the raw box to [0,image_w] x [0,image_h]. Throws InvalidBox if
    /// the visible part is smaller than 1 px in either dimension.
    static BBox2D clamped(double left, double top, double width, double height,
                          int image_w, int image_h);
};

/// Ground-plane-aligned 3D box. The footprint spans x in [cx±w/2] and
/// y in [cy±d/2] of the plane frame; height h is along the plane normal
/// (z in [cz±h/2]). Lifted 2D boxes always have depth == width.
struct BBox3D {
    Eigen::Vector3d center = Eigen::Vector3d::Zero();  ///< plane frame, meters
    double width = 0.0;   ///< extent along plane x
    double height = 0.0;  ///< extent along plane z (vertical)
    double depth = 0.0;   ///< extent along plane y
    double yaw = 0.0;     ///< about the plane normal; 0 unless a tracker supplies heading
    double confidence = 1.0;
    std::string source_id;
    std::optional<std::int64_t> track_id;
    int frame_index = 0;

    double volume() const { return width * height * depth; }

    /// Throws std::invalid_argument unless all extents are positive.
    void validate() const;
};

}  // namespace fusemot
