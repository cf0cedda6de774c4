// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/plane_calib.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace fusemot::calib {

void accumulate_walkable(WalkableMask& mask, const std::vector<BBox2D>& detections) {
    for (const auto& det : detections) {
        const int y0 = std::max(0, static_cast<int>(std::floor(det.top + 0.9 * det.height)));
        const int y1 = std::min(mask.height - 1,
                                static_cast<int>(std::ceil(det.bottom())) - 1);
        const int x0 = std::max(0, static_cast<int>(std::floor(det.left)));
        const int x1 = std::min(mask.width - 1,
                                static_cast<int>(std::ceil(det.right())) - 1);
        for (int v = y0; v <= y1; ++v)
            for (int u = x0; u <= x1; ++u)
                ++mask.counts[static_cast<std::size_t>(v) * mask.width + u];
    }
    ++mask.frame_count;
}

namespace {

// splitmix64; decorrelates per-iteration sampling engines.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t iteration) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (iteration + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct PlaneParams {
    Eigen::Vector3d normal;
    double offset;
};

// Least-squares plane through a point subset: centroid + smallest
// eigenvector of the scatter matrix.
std::optional<PlaneParams> fit_plane_lsq(const std::vector<Eigen::Vector3d>& pts,
                                         const std::vector<int>& idx) {
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (int i : idx) centroid += pts[i];
    centroid /= static_cast<double>(idx.size());
    Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
    for (int i : idx) {
        const Eigen::Vector3d d = pts[i] - centroid;
        scatter += d * d.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(scatter);
    // Collinear input: the two smallest eigenvalues vanish together.
    if (eig.eigenvalues()(1) <= 1e-12 * std::max(1.0, eig.eigenvalues()(2)))
        return std::nullopt;
    const Eigen::Vector3d n = eig.eigenvectors().col(0);
    return PlaneParams{n, n.dot(centroid)};
}

}  // namespace

PlaneFit ransac_plane_fit(const std::vector<Eigen::Vector3d>& points,
                          const PlaneFitConfig& cfg) {
    if (points.size() < 3)
        throw DegenerateInput("plane fit needs at least 3 points, got " +
                              std::to_string(points.size()));
    if (cfg.ransac_iterations < 1)
        throw std::invalid_argument("ransac_iterations must be >= 1");
    if (!(cfg.inlier_threshold_m > 0.0))
        throw std::invalid_argument("inlier_threshold_m must be positive");

    // Canonical ordering decouples the seeded sampling from the caller's
    // point order.
    std::vector<int> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& p = points[a];
        const auto& q = points[b];
        if (p.x() != q.x()) return p.x() < q.x();
        if (p.y() != q.y()) return p.y() < q.y();
        return p.z() < q.z();
    });

    const auto count_inliers = [&](const PlaneParams& pl) {
        int n = 0;
        for (const auto& p : points)
            if (std::abs(pl.normal.dot(p) - pl.offset) <= cfg.inlier_threshold_m) ++n;
        return n;
    };

    std::optional<PlaneParams> best;
    int best_count = -1;
    for (int iter = 0; iter < cfg.ransac_iterations; ++iter) {
        std::mt19937_64 rng(mix_seed(cfg.rng_seed, static_cast<std::uint64_t>(iter)));
        std::uniform_int_distribution<int> pick(0, static_cast<int>(points.size()) - 1);
        const int a = order[pick(rng)];
        int b = order[pick(rng)];
        int c = order[pick(rng)];
        if (a == b || a == c || b == c) continue;

        const Eigen::Vector3d n =
            (points[b] - points[a]).cross(points[c] - points[a]);
        const double len = n.norm();
        if (len < 1e-12) continue;  // collinear sample
        PlaneParams candidate{n / len, (n / len).dot(points[a])};
        const int inliers = count_inliers(candidate);
        if (inliers > best_count) {
            best_count = inliers;
            best = candidate;
        }
    }

    if (!best) throw DegenerateInput("all RANSAC samples were collinear");
    if (static_cast<double>(best_count) <
        cfg.min_inlier_fraction * static_cast<double>(points.size()))
        throw NoConsensus("best inlier fraction " +
                          std::to_string(static_cast<double>(best_count) / points.size()) +
                          " below required " + std::to_string(cfg.min_inlier_fraction));

    // Refit over the consensus set (collected in canonical order so the
    // refit is permutation-invariant too).
    std::vector<int> consensus;
    consensus.reserve(best_count);
    for (int i : order)
        if (std::abs(best->normal.dot(points[i]) - best->offset) <=
            cfg.inlier_threshold_m)
            consensus.push_back(i);
    if (auto refit = fit_plane_lsq(points, consensus)) best = *refit;

    geom::GroundPlane plane =
        geom::GroundPlane(best->normal, best->offset).oriented_toward_camera();

    PlaneFit fit;
    fit.plane = plane;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (std::abs(plane.height_above(points[i])) <= cfg.inlier_threshold_m)
            fit.inlier_indices.push_back(static_cast<int>(i));
    fit.inlier_fraction =
        static_cast<double>(fit.inlier_indices.size()) / static_cast<double>(points.size());
    return fit;
}

PlaneValidation validate_plane(const geom::GroundPlane& plane,
                               const std::vector<Eigen::Vector3d>& inlier_points,
                               const PlaneFitConfig& cfg) {
    PlaneValidation result;
    result.camera_height_m = plane.height_above(Eigen::Vector3d::Zero());

    if (result.camera_height_m < cfg.prior_mount_height_min_m ||
        result.camera_height_m > cfg.prior_mount_height_max_m) {
        result.accepted = false;
        result.reason = PlaneRejectReason::MountHeight;
        return result;
    }

    // Platform width: inlier span along the viewing direction projected onto
    // the plane. Falls back to the larger in-plane extent when the camera
    // looks straight down.
    if (!inlier_points.empty()) {
        Eigen::Vector3d view = plane.rotation() * Eigen::Vector3d::UnitZ();
        Eigen::Vector2d axis(view.x(), view.y());
        double lo, hi;
        if (axis.norm() > 1e-6) {
            axis.normalize();
            lo = std::numeric_limits<double>::max();
            hi = std::numeric_limits<double>::lowest();
            for (const auto& p : inlier_points) {
                const Eigen::Vector3d q = plane.to_plane(p);
                const double s = axis.dot(Eigen::Vector2d(q.x(), q.y()));
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        } else {
            Eigen::Vector2d min_xy(std::numeric_limits<double>::max(),
                                   std::numeric_limits<double>::max());
            Eigen::Vector2d max_xy(std::numeric_limits<double>::lowest(),
                                   std::numeric_limits<double>::lowest());
            for (const auto& p : inlier_points) {
                const Eigen::Vector3d q = plane.to_plane(p);
                min_xy = min_xy.cwiseMin(q.head<2>());
                max_xy = max_xy.cwiseMax(q.head<2>());
            }
            lo = 0.0;
            hi = (max_xy - min_xy).maxCoeff();
        }
        result.platform_span_m = hi - lo;
        if (result.platform_span_m > cfg.prior_max_platform_width_m) {
            result.accepted = false;
            result.reason = PlaneRejectReason::PlatformWidth;
            return result;
        }
    }

    result.accepted = true;
    return result;
}

}  // namespace fusemot::calib
