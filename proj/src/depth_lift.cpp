// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/depth_lift.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fusemot::depth {

double gaussian_weight(double u, double v, double w_bb, double h_bb) {
    if (!(w_bb >= 1.0 && h_bb >= 1.0))
        throw std::invalid_argument("gaussian_weight: degenerate box");
    if (u < 0.0 || u >= w_bb || v < 0.0 || v >= h_bb)
        throw std::invalid_argument("gaussian_weight: coordinates outside box");
    const double du = u - w_bb / 2.0;
    const double dv = v - h_bb / 2.0;
    const double expo = du * du / (2.0 * w_bb * w_bb) + dv * dv / (2.0 * h_bb * h_bb);
    return std::exp(-expo) / (2.0 * std::numbers::pi * std::sqrt(w_bb * h_bb));
}

std::optional<DepthEstimate> estimate_box_depth(const DepthMap& depth,
                                                const BBox2D& box) {
    const int u0 = static_cast<int>(std::floor(box.left));
    const int v0 = static_cast<int>(std::floor(box.top));
    double weight_sum = 0.0;
    double weighted_depth = 0.0;
    for (int v = 0; static_cast<double>(v) < box.height; ++v) {
        const int iv = v0 + v;
        if (iv < 0 || iv >= depth.height) continue;
        for (int u = 0; static_cast<double>(u) < box.width; ++u) {
            const int iu = u0 + u;
            if (iu < 0 || iu >= depth.width) continue;
            if (!depth.valid(iu, iv)) continue;
            const double w = gaussian_weight(u, v, box.width, box.height);
            weight_sum += w;
            weighted_depth += w * depth.at(iu, iv);
        }
    }
    if (weight_sum <= 0.0) return std::nullopt;
    return DepthEstimate{weighted_depth / weight_sum, weight_sum};
}

BBox3D lift_bbox(const BBox2D& box, double d_est,
                 const geom::CameraIntrinsics& intr,
                 const geom::GroundPlane& plane, int frame_index) {
    BBox3D out;
    out.width = box.width * d_est / intr.fx;
    out.height = box.height * d_est / intr.fy;
    out.depth = out.width;

    // d_est is the distance to the camera-facing surface; the volumetric
    // center sits half the box depth further out along the viewing ray.
    const Eigen::Vector3d surface = geom::backproject(intr, box.center_u(),
                                                      box.center_v(), d_est);
    const Eigen::Vector3d center_cam = surface + surface.normalized() * (out.depth / 2.0);

    out.center = plane.to_plane(center_cam);
    out.yaw = 0.0;
    out.confidence = box.confidence;
    out.source_id = box.source_id;
    out.track_id = box.track_id;
    out.frame_index = frame_index;
    return out;
}

}  // namespace fusemot::depth
