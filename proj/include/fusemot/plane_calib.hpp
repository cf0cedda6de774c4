// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fusemot/boxes.hpp"
#include "fusemot/geometry.hpp"

// Automated ground-plane calibration. During a calibration phase,
// pedestrian-detector footprints are aggregated into a "walkable surface"
// mask; depth points inside the mask are then fit with a RANSAC plane and
// the result is checked against platform priors (camera mounting height,
// maximum platform width).

namespace fusemot::calib {

struct DegenerateInput : Error {
    using Error::Error;
};
struct NoConsensus : Error {
    using Error::Error;
};

/// Per-pixel accumulation of detection footprints. A pixel counts as
/// walkable once at least `threshold` independent detections deposited
/// their foot region on it.
struct WalkableMask {
    int width = 0;
    int height = 0;
    int threshold = 3;
    int frame_count = 0;
    std::vector<std::uint32_t> counts;

    WalkableMask() = default;
    WalkableMask(int w, int h, int thr = 3)
        : width(w), height(h), threshold(thr),
          counts(static_cast<std::size_t>(w) * h, 0) {}

    std::uint32_t count(int u, int v) const {
        return counts[static_cast<std::size_t>(v) * width + u];
    }
    bool walkable(int u, int v) const {
        return count(u, v) >= static_cast<std::uint32_t>(threshold);
    }
};

/// Adds one frame's detections to the mask. Only the bottom strip (lowest
/// 10% of the box height) is deposited; that is where the feet touch the
/// walkable surface.
void accumulate_walkable(WalkableMask& mask, const std::vector<BBox2D>& detections);

struct PlaneFitConfig {
    int ransac_iterations = 1000;
    double inlier_threshold_m = 0.02;
    double min_inlier_fraction = 0.3;
    double prior_mount_height_min_m = 2.0;
    double prior_mount_height_max_m = 4.0;
    double prior_max_platform_width_m = 8.0;
    std::uint64_t rng_seed = 0;
};

struct PlaneFit {
    geom::GroundPlane plane;           ///< oriented so the camera is above
    std::vector<int> inlier_indices;   ///< indices into the input point set
    double inlier_fraction = 0.0;
};

/// RANSAC plane fit over camera-frame points (pre-filtered to the walkable
/// mask by the caller). The winning consensus plane is refit by least
/// squares over its inliers.
///
/// Deterministic: points are canonically sorted before sampling and each
/// iteration draws from its own engine seeded from (rng_seed, iteration),
/// so the result does not depend on input ordering or iteration scheduling.
///
/// Throws DegenerateInput for fewer than 3 points or all-collinear input,
/// NoConsensus when the best inlier fraction stays below
/// min_inlier_fraction.
PlaneFit ransac_plane_fit(const std::vector<Eigen::Vector3d>& points,
                          const PlaneFitConfig& cfg);

enum class PlaneRejectReason { Accepted, MountHeight, PlatformWidth };

struct PlaneValidation {
    bool accepted = false;
    PlaneRejectReason reason = PlaneRejectReason::Accepted;
    double camera_height_m = 0.0;
    double platform_span_m = 0.0;
};

/// Checks a fitted plane against the platform priors: the camera (at the
/// origin) must sit within the prior mounting-height range, and the inlier
/// extent measured across the platform (along the viewing direction
/// projected onto the plane) must not exceed the maximum platform width.
PlaneValidation validate_plane(const geom::GroundPlane& plane,
                               const std::vector<Eigen::Vector3d>& inlier_points,
                               const PlaneFitConfig& cfg);

}  // namespace fusemot::calib
