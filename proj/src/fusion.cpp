// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fusemot::fusion {

namespace {

double overlap_1d(double center_a, double extent_a, double center_b, double extent_b) {
    const double lo = std::max(center_a - extent_a / 2.0, center_b - extent_b / 2.0);
    const double hi = std::min(center_a + extent_a / 2.0, center_b + extent_b / 2.0);
    return std::max(0.0, hi - lo);
}

double intersection_volume(const BBox3D& a, const BBox3D& b) {
    if (a.yaw != 0.0 || b.yaw != 0.0)
        throw UnsupportedYaw("overlap of rotated boxes is not supported");
    a.validate();
    b.validate();
    return overlap_1d(a.center.x(), a.width, b.center.x(), b.width) *
           overlap_1d(a.center.y(), a.depth, b.center.y(), b.depth) *
           overlap_1d(a.center.z(), a.height, b.center.z(), b.height);
}

}  // namespace

double iou_3d(const BBox3D& a, const BBox3D& b) {
    const double inter = intersection_volume(a, b);
    return inter / (a.volume() + b.volume() - inter);
}

double ioe_3d(const BBox3D& a, const BBox3D& b) {
    const double inter = intersection_volume(a, b);
    return inter / std::min(a.volume(), b.volume());
}

TrackletManager::TrackletManager(Config cfg) : cfg_(cfg) {
    if (!(cfg_.iou_threshold > 0.0 && cfg_.iou_threshold <= 1.0) ||
        !(cfg_.ioe_threshold > 0.0 && cfg_.ioe_threshold <= 1.0))
        throw std::invalid_argument("fusion thresholds must be in (0, 1]");
}

std::optional<std::int64_t> TrackletManager::already_in_history(const BBox3D& det) const {
    if (!det.track_id) return std::nullopt;
    const SourceTrack key{det.source_id, *det.track_id};
    for (const auto& t : live_)
        if (t.members.count(key)) return t.fused_id;
    return std::nullopt;
}

std::int64_t TrackletManager::fuse_observation(const BBox3D& det) {
    if (!det.track_id)
        throw Error("fusion input must carry a per-source track id");
    if (det.frame_index < current_frame_)
        throw std::invalid_argument("observations must arrive in frame order");

    const auto append = [&](Tracklet& t) {
        t.members.insert({det.source_id, *det.track_id});
        t.pending.push_back(det);
        t.current = det;
        return t.fused_id;
    };

    if (const auto owner = already_in_history(det)) {
        for (auto& t : live_)
            if (t.fused_id == *owner) return append(t);
    }

    Tracklet* best = nullptr;
    double best_overlap = 0.0;
    double best_iou = 0.0, best_ioe = 0.0;
    for (auto& t : live_) {
        const double iou = iou_3d(det, t.current);
        const double ioe = ioe_3d(det, t.current);
        const double overlap = std::max(iou, ioe);
        // Strict > keeps the lowest fused id on ties (list is in id order).
        if (overlap > best_overlap) {
            best_overlap = overlap;
            best_iou = iou;
            best_ioe = ioe;
            best = &t;
        }
    }

    if (best && (best_iou >= cfg_.iou_threshold || best_ioe >= cfg_.ioe_threshold))
        return append(*best);

    Tracklet fresh;
    fresh.fused_id = next_fused_id_++;
    live_.push_back(std::move(fresh));
    return append(live_.back());
}

std::vector<BBox3D> TrackletManager::fuse_frame(std::vector<BBox3D> detections,
                                                int frame) {
    if (frame < current_frame_)
        throw std::invalid_argument("frames must be submitted in nondecreasing order");
    current_frame_ = frame;

    std::sort(detections.begin(), detections.end(),
              [](const BBox3D& a, const BBox3D& b) {
                  if (a.source_id != b.source_id) return a.source_id < b.source_id;
                  return a.track_id.value_or(0) < b.track_id.value_or(0);
              });
    for (auto& det : detections) {
        det.frame_index = frame;
        fuse_observation(det);
    }

    std::vector<BBox3D> emitted;
    finalize_frame(frame, emitted);
    return emitted;
}

void TrackletManager::finalize_frame(int frame, std::vector<BBox3D>& emitted) {
    for (auto it = live_.begin(); it != live_.end();) {
        Tracklet& t = *it;
        if (!t.pending.empty()) {
            double weight_sum = 0.0;
            for (const auto& obs : t.pending) weight_sum += obs.confidence;

            BBox3D fused;
            fused.center.setZero();
            double conf = 0.0;
            for (const auto& obs : t.pending) {
                // Uniform weights when every member reports zero confidence.
                const double w = weight_sum > 0.0
                                     ? obs.confidence / weight_sum
                                     : 1.0 / static_cast<double>(t.pending.size());
                fused.center += w * obs.center;
                fused.width += w * obs.width;
                fused.height += w * obs.height;
                fused.depth += w * obs.depth;
                conf = std::max(conf, obs.confidence);
            }
            fused.confidence = conf;
            fused.source_id = "fused";
            fused.track_id = t.fused_id;
            fused.frame_index = frame;
            t.history.push_back(fused);
            t.current = fused;
            t.last_update_frame = frame;
            t.pending.clear();
            emitted.push_back(fused);
            ++it;
        } else if (t.last_update_frame >= 0 &&
                   frame - t.last_update_frame > cfg_.staleness_frames) {
            retired_.push_back(std::move(t));
            it = live_.erase(it);
        } else {
            ++it;
        }
    }
}

double safety_clearance(const Eigen::Vector2d& point,
                        const std::vector<Eigen::Vector2d>& safety_line) {
    if (safety_line.size() < 2)
        throw std::invalid_argument("safety line needs at least 2 vertices");

    double best_dist = std::numeric_limits<double>::max();
    double best_side = 1.0;
    for (std::size_t i = 0; i + 1 < safety_line.size(); ++i) {
        const Eigen::Vector2d a = safety_line[i];
        const Eigen::Vector2d d = safety_line[i + 1] - a;
        const double len2 = d.squaredNorm();
        if (len2 <= 0.0) continue;
        const double s = std::clamp((point - a).dot(d) / len2, 0.0, 1.0);
        const Eigen::Vector2d closest = a + s * d;
        const double dist = (point - closest).norm();
        if (dist < best_dist) {
            best_dist = dist;
            const double cross = d.x() * (point.y() - a.y()) - d.y() * (point.x() - a.x());
            best_side = cross > 0.0 ? -1.0 : 1.0;  // left of travel: cleared region
        }
    }
    return best_side * best_dist;
}

std::vector<SafetyViolation> safety_report(const std::vector<BBox3D>& fused_tracks,
                                           const std::vector<Eigen::Vector2d>& safety_line,
                                           int frame_begin, int frame_end) {
    struct FrameHit {
        int frame;
        double clearance;
    };
    std::map<std::int64_t, std::vector<FrameHit>> hits_per_track;

    for (const auto& box : fused_tracks) {
        if (box.frame_index < frame_begin || box.frame_index > frame_end) continue;
        const double hw = box.width / 2.0;
        const double hd = box.depth / 2.0;
        double clearance = std::numeric_limits<double>::max();
        for (const double sx : {-hw, hw})
            for (const double sy : {-hd, hd})
                clearance = std::min(
                    clearance, safety_clearance({box.center.x() + sx, box.center.y() + sy},
                                                safety_line));
        if (clearance < 0.0)
            hits_per_track[box.track_id.value_or(-1)].push_back(
                {box.frame_index, clearance});
    }

    std::vector<SafetyViolation> report;
    for (auto& [fused_id, hits] : hits_per_track) {
        std::sort(hits.begin(), hits.end(),
                  [](const FrameHit& a, const FrameHit& b) { return a.frame < b.frame; });
        std::size_t i = 0;
        while (i < hits.size()) {
            SafetyViolation v;
            v.fused_id = fused_id;
            v.start_frame = hits[i].frame;
            v.min_distance_m = hits[i].clearance;
            std::size_t j = i;
            while (j + 1 < hits.size() && hits[j + 1].frame == hits[j].frame + 1) {
                ++j;
                v.min_distance_m = std::min(v.min_distance_m, hits[j].clearance);
            }
            v.end_frame = hits[j].frame;
            report.push_back(v);
            i = j + 1;
        }
    }
    return report;
}

}  // namespace fusemot::fusion
