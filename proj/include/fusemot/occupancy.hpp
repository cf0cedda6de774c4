// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "fusemot/depth_map.hpp"
#include "fusemot/geometry.hpp"

// Ground-plane occupancy map built from depth pixels, and its clustering
// into object candidates. Clusters are delineated by thresholding plus
// 8-connected components with a size-prior saddle split; body-height points
// only (the ground itself and overhead structure are gated out).

namespace fusemot::occupancy {

struct GridConfig {
    double cell_size_m = 0.1;
    double x_min = -10.0;
    double x_max = 10.0;
    double y_min = -10.0;
    double y_max = 10.0;
    double min_height_m = 0.1;  ///< below: ground, ignored
    double max_height_m = 2.2;  ///< above: overhead structure, ignored
};

struct OccupancyGrid {
    double cell_size = 0.1;
    double x0 = 0.0;  ///< plane-frame coordinate of cell (0,0) lower corner
    double y0 = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<double> evidence;    ///< accumulated point weights, nx*ny
    std::vector<float> peak_height;  ///< max contributing point height per cell

    double& at(int ix, int iy) { return evidence[static_cast<std::size_t>(iy) * nx + ix]; }
    double at(int ix, int iy) const {
        return evidence[static_cast<std::size_t>(iy) * nx + ix];
    }
    double cell_center_x(int ix) const { return x0 + (ix + 0.5) * cell_size; }
    double cell_center_y(int iy) const { return y0 + (iy + 0.5) * cell_size; }
    double total_evidence() const;
};

/// Projects every valid depth pixel into the plane frame and accumulates
/// evidence for pixels whose height lies inside the body gate. The per-point
/// weight d^2/(fx*fy)/cell_area compensates the pinhole footprint shrinkage
/// with distance, so a surface contributes evidence proportional to its
/// physical area regardless of range.
OccupancyGrid build_occupancy(const DepthMap& depth, const geom::CameraIntrinsics& intr,
                              const geom::GroundPlane& plane, const GridConfig& cfg);

struct Cluster {
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();  ///< evidence-weighted
    double extent_x = 0.0;  ///< footprint, meters
    double extent_y = 0.0;
    double height = 0.0;    ///< max point height over member cells
    double mass = 0.0;      ///< total evidence
};

struct ClusterConfig {
    double evidence_threshold = 0.5;
    double min_mass = 2.0;
    double person_extent_m = 0.6;  ///< footprint prior for the saddle split
};

/// Thresholds the grid, extracts 8-connected components, drops components
/// below min_mass, and splits components wider than twice the person prior
/// at the evidence saddle along their long axis.
std::vector<Cluster> cluster_occupancy(const OccupancyGrid& grid,
                                       const ClusterConfig& cfg);

}  // namespace fusemot::occupancy
