// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "fusemot/boxes.hpp"
#include "fusemot/depth_map.hpp"
#include "fusemot/geometry.hpp"

// Gaussian-weighted per-box depth estimation and 2D -> 3D box lifting.
//
// A detection's depth must not be the plain mean over its bounding box:
// background pixels inside the box would pull it away. Objects tend to fill
// the box center, so depth samples are weighted with a 2D Gaussian centered
// in the box (sigma_u = box width, sigma_v = box height) and masked by the
// per-pixel validity of the depth map.

namespace fusemot::depth {

/// Gaussian kernel value at integer pixel (u, v) inside a w_bb x h_bb box:
///
///   w(u,v) = 1/(2*pi*sqrt(w_bb*h_bb))
///            * exp(-((u - w_bb/2)^2/(2*w_bb^2) + (v - h_bb/2)^2/(2*h_bb^2)))
///
/// Coordinates are box-local; out-of-box coordinates throw
/// std::invalid_argument. The normalization constant cancels when the
/// weighted mean is formed, only the exponent shapes the estimate.
double gaussian_weight(double u, double v, double w_bb, double h_bb);

struct DepthEstimate {
    double depth_m = 0.0;
    double weight_sum = 0.0;  ///< normalizing sum W over valid pixels
};

/// Weighted depth over the box's integer pixel grid u in [0, w_bb),
/// v in [0, h_bb). Returns std::nullopt when no pixel inside the box has a
/// valid depth (W == 0); the caller must skip 3D lifting for this box.
std::optional<DepthEstimate> estimate_box_depth(const DepthMap& depth,
                                                const BBox2D& box);

/// Lifts a 2D detection to a ground-plane 3D box.
///
/// The metric width/height follow from pinhole scaling at the estimated
/// depth; the box depth equals its width. d_est measures the distance to the
/// object's camera-facing surface, so the center is pushed half the box
/// depth further along the viewing ray before the plane transform.
/// Requires d_est > 0 (throws geom::NonPositiveDepth).
BBox3D lift_bbox(const BBox2D& box, double d_est,
                 const geom::CameraIntrinsics& intr,
                 const geom::GroundPlane& plane, int frame_index = 0);

}  // namespace fusemot::depth
