// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fusemot::occupancy {

double OccupancyGrid::total_evidence() const {
    return std::accumulate(evidence.begin(), evidence.end(), 0.0);
}

OccupancyGrid build_occupancy(const DepthMap& depth, const geom::CameraIntrinsics& intr,
                              const geom::GroundPlane& plane, const GridConfig& cfg) {
    if (!(cfg.cell_size_m > 0.0))
        throw std::invalid_argument("build_occupancy: cell size must be positive");

    OccupancyGrid grid;
    grid.cell_size = cfg.cell_size_m;
    grid.x0 = cfg.x_min;
    grid.y0 = cfg.y_min;
    grid.nx = std::max(1, static_cast<int>(std::ceil((cfg.x_max - cfg.x_min) / cfg.cell_size_m)));
    grid.ny = std::max(1, static_cast<int>(std::ceil((cfg.y_max - cfg.y_min) / cfg.cell_size_m)));
    grid.evidence.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);
    grid.peak_height.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.f);

    const double cell_area = cfg.cell_size_m * cfg.cell_size_m;
    const double weight_scale = 1.0 / (intr.fx * intr.fy * cell_area);

    for (int v = 0; v < depth.height; ++v) {
        for (int u = 0; u < depth.width; ++u) {
            if (!depth.valid(u, v)) continue;
            const double d = depth.at(u, v);
            const Eigen::Vector3d p =
                plane.to_plane(geom::backproject(intr, u, v, d));
            if (p.z() < cfg.min_height_m || p.z() > cfg.max_height_m) continue;
            const int ix = static_cast<int>(std::floor((p.x() - grid.x0) / grid.cell_size));
            const int iy = static_cast<int>(std::floor((p.y() - grid.y0) / grid.cell_size));
            if (ix < 0 || ix >= grid.nx || iy < 0 || iy >= grid.ny) continue;
            grid.at(ix, iy) += d * d * weight_scale;
            auto& peak = grid.peak_height[static_cast<std::size_t>(iy) * grid.nx + ix];
            peak = std::max(peak, static_cast<float>(p.z()));
        }
    }
    return grid;
}

namespace {

struct Component {
    std::vector<int> cells;  // flat indices
};

// Splits a 1D evidence profile at saddle points: any interior minimum that
// dips below 60% of both flanking maxima becomes a cut.
std::vector<int> profile_cuts(const std::vector<double>& profile) {
    std::vector<int> peaks;
    for (int i = 0; i < static_cast<int>(profile.size()); ++i) {
        const double left = i > 0 ? profile[i - 1] : -1.0;
        const double right =
            i + 1 < static_cast<int>(profile.size()) ? profile[i + 1] : -1.0;
        if (profile[i] > left && profile[i] >= right && profile[i] > 0.0)
            peaks.push_back(i);
    }
    std::vector<int> cuts;
    for (std::size_t k = 0; k + 1 < peaks.size(); ++k) {
        int valley = peaks[k];
        for (int i = peaks[k]; i <= peaks[k + 1]; ++i)
            if (profile[i] < profile[valley]) valley = i;
        const double limit = 0.6 * std::min(profile[peaks[k]], profile[peaks[k + 1]]);
        if (profile[valley] < limit) cuts.push_back(valley);
    }
    return cuts;
}

Cluster make_cluster(const OccupancyGrid& grid, const std::vector<int>& cells) {
    Cluster c;
    double wx = 0.0, wy = 0.0;
    int min_ix = grid.nx, max_ix = -1, min_iy = grid.ny, max_iy = -1;
    for (int idx : cells) {
        const int ix = idx % grid.nx;
        const int iy = idx / grid.nx;
        const double e = grid.evidence[idx];
        c.mass += e;
        wx += e * grid.cell_center_x(ix);
        wy += e * grid.cell_center_y(iy);
        min_ix = std::min(min_ix, ix);
        max_ix = std::max(max_ix, ix);
        min_iy = std::min(min_iy, iy);
        max_iy = std::max(max_iy, iy);
        c.height = std::max(c.height, static_cast<double>(grid.peak_height[idx]));
    }
    c.centroid = {wx / c.mass, wy / c.mass};
    c.extent_x = (max_ix - min_ix + 1) * grid.cell_size;
    c.extent_y = (max_iy - min_iy + 1) * grid.cell_size;
    return c;
}

}  // namespace

std::vector<Cluster> cluster_occupancy(const OccupancyGrid& grid,
                                       const ClusterConfig& cfg) {
    const std::size_t n = grid.evidence.size();
    std::vector<int> label(n, -1);
    std::vector<Component> components;

    // 8-connected components over cells at or above the evidence threshold.
    std::vector<int> stack;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (label[seed] >= 0 || grid.evidence[seed] < cfg.evidence_threshold) continue;
        const int comp_id = static_cast<int>(components.size());
        components.emplace_back();
        stack.assign(1, static_cast<int>(seed));
        label[seed] = comp_id;
        while (!stack.empty()) {
            const int idx = stack.back();
            stack.pop_back();
            components[comp_id].cells.push_back(idx);
            const int ix = idx % grid.nx;
            const int iy = idx / grid.nx;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    const int jx = ix + dx;
                    const int jy = iy + dy;
                    if (jx < 0 || jx >= grid.nx || jy < 0 || jy >= grid.ny) continue;
                    const int jdx = jy * grid.nx + jx;
                    if (label[jdx] >= 0 || grid.evidence[jdx] < cfg.evidence_threshold)
                        continue;
                    label[jdx] = comp_id;
                    stack.push_back(jdx);
                }
            }
        }
    }

    std::vector<Cluster> clusters;
    for (const auto& comp : components) {
        Cluster whole = make_cluster(grid, comp.cells);
        if (whole.mass < cfg.min_mass) continue;

        const bool split_x = whole.extent_x > 2.0 * cfg.person_extent_m &&
                             whole.extent_x >= whole.extent_y;
        const bool split_y = whole.extent_y > 2.0 * cfg.person_extent_m && !split_x;
        if (!split_x && !split_y) {
            clusters.push_back(whole);
            continue;
        }

        // Project evidence onto the long axis and cut at the saddles.
        const auto axis_of = [&](int idx) {
            return split_x ? idx % grid.nx : idx / grid.nx;
        };
        int lo = axis_of(comp.cells.front()), hi = lo;
        for (int idx : comp.cells) {
            lo = std::min(lo, axis_of(idx));
            hi = std::max(hi, axis_of(idx));
        }
        std::vector<double> profile(hi - lo + 1, 0.0);
        for (int idx : comp.cells) profile[axis_of(idx) - lo] += grid.evidence[idx];

        const std::vector<int> cuts = profile_cuts(profile);
        if (cuts.empty()) {
            clusters.push_back(whole);
            continue;
        }
        std::vector<std::vector<int>> parts(cuts.size() + 1);
        for (int idx : comp.cells) {
            const int a = axis_of(idx) - lo;
            std::size_t part = 0;
            while (part < cuts.size() && a > cuts[part]) ++part;
            parts[part].push_back(idx);
        }
        for (const auto& cells : parts) {
            if (cells.empty()) continue;
            Cluster c = make_cluster(grid, cells);
            if (c.mass >= cfg.min_mass) clusters.push_back(c);
        }
    }
    return clusters;
}

}  // namespace fusemot::occupancy
