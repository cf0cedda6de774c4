// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fusemot/errors.hpp"

// Multiple-object-tracking evaluation. Per-frame matching follows the
// CLEAR-MOT convention: matches persist from the previous frame while they
// stay within the threshold, the remainder is matched by the Hungarian
// algorithm, and an identity switch is counted whenever a ground-truth
// object changes its associated hypothesis. Identity-level scores (IDF1,
// IDP, IDR) come from a global min-cost matching between whole
// trajectories.

namespace fusemot::metrics {

struct EmptyGroundTruth : Error {
    using Error::Error;
};
struct NoMatches : Error {
    using Error::Error;
};

enum class MatchMode {
    ImageIoU,       ///< cost = 1 - IoU of image boxes
    PlaneDistance,  ///< cost = Euclidean plane distance in meters
};

enum class TaskSetting { All, Peds };

/// One object in one frame, for either side of the evaluation. Image-mode
/// costs use the box fields, plane-mode costs use (x, y). Occlusion and
/// class only matter for ground truth (task-setting filter).
struct TrackEntry {
    int frame = 0;
    std::int64_t id = 0;
    double left = 0.0, top = 0.0, width = 0.0, height = 0.0;
    double x = 0.0, y = 0.0;
    int occlusion = 0;
    std::string class_label = "person";
};

/// PEDS keeps persons with occlusion below 75% (at least 25% visibility);
/// ALL keeps everything.
std::vector<TrackEntry> filter_setting(const std::vector<TrackEntry>& entries,
                                       TaskSetting setting);

/// Match cost between one gt and one hyp entry under the given mode:
/// 1 - IoU for image mode, plane distance in meters otherwise.
double match_cost(const TrackEntry& gt, const TrackEntry& hyp, MatchMode mode);

struct FrameMatchResult {
    std::vector<std::pair<std::int64_t, std::int64_t>> matches;  ///< (gt, hyp)
    std::vector<double> match_costs;                             ///< parallel to matches
    std::vector<std::int64_t> unmatched_gt;   ///< false negatives
    std::vector<std::int64_t> unmatched_hyp;  ///< false positives
    int id_switches = 0;
};

/// Matches one frame. `threshold` is the maximum admissible cost
/// (0.5 for image mode, i.e. IoU >= 0.5; 1.0 m for plane mode).
/// `prev_gt_to_hyp` carries each gt's last known association; pairs still
/// within threshold are kept before the Hungarian pass, and a gt matched to
/// a different hypothesis than before counts one identity switch.
FrameMatchResult match_frame(const std::vector<TrackEntry>& gt,
                             const std::vector<TrackEntry>& hyp, MatchMode mode,
                             double threshold,
                             const std::map<std::int64_t, std::int64_t>& prev_gt_to_hyp);

struct MetricsReport {
    double idf1 = 0.0, idp = 0.0, idr = 0.0;
    double recall = 0.0, precision = 0.0;
    int gt = 0, mostly_tracked = 0, partially_tracked = 0, mostly_lost = 0;
    std::int64_t fp = 0, fn = 0, id_switches = 0, fragmentations = 0;
    double mota = 0.0;
    double motp = 0.0;  ///< NaN when there were no matches
    MatchMode mode = MatchMode::PlaneDistance;
};

/// Streaming per-sequence accumulator. Frames must be added in strictly
/// increasing order; one instance per (sequence, setting, source) triple.
class Accumulator {
public:
    Accumulator(MatchMode mode, double threshold);

    void add_frame(int frame, const std::vector<TrackEntry>& gt,
                   const std::vector<TrackEntry>& hyp);

    /// MOTA = 1 - (FP + FN + IDs) / total gt object-frames. May be negative.
    /// Throws EmptyGroundTruth when no gt was accumulated.
    double mota() const;

    /// Mean match cost over all correct matches (1 - IoU in image mode,
    /// meters in plane mode). Throws NoMatches without any match.
    double motp() const;

    struct IdScores {
        double idf1 = 0.0, idp = 0.0, idr = 0.0;
        std::int64_t idtp = 0, idfp = 0, idfn = 0;
    };
    /// Global min-cost trajectory matching (maximizes the total number of
    /// frame-level co-occurrences within threshold).
    IdScores id_metrics() const;

    struct Coverage {
        int gt = 0, mostly_tracked = 0, partially_tracked = 0, mostly_lost = 0;
        std::int64_t fragmentations = 0;
    };
    /// Tracked-lifespan bins: MT >= 80%, ML < 20%, PT in between
    /// (the 20% boundary is PT). FM counts tracked->untracked->tracked
    /// transitions per gt.
    Coverage coverage() const;

    std::int64_t false_positives() const { return fp_; }
    std::int64_t false_negatives() const { return fn_; }
    std::int64_t id_switch_count() const { return ids_; }
    std::int64_t total_gt() const { return total_gt_; }
    std::int64_t total_hyp() const { return total_hyp_; }
    std::int64_t match_count() const { return match_count_; }

    MetricsReport report() const;

private:
    struct GtStats {
        std::int64_t frames_present = 0;
        std::int64_t frames_matched = 0;
        std::int64_t fragmentations = 0;
        bool ever_tracked = false;
        bool tracked_last = false;
    };

    MatchMode mode_;
    double threshold_;
    int last_frame_ = INT32_MIN;

    std::int64_t fp_ = 0, fn_ = 0, ids_ = 0;
    std::int64_t total_gt_ = 0, total_hyp_ = 0;
    std::int64_t match_count_ = 0;
    double match_cost_sum_ = 0.0;

    std::map<std::int64_t, GtStats> gt_stats_;
    std::map<std::int64_t, std::int64_t> hyp_frames_;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> cooccurrence_;
    std::map<std::int64_t, std::int64_t> prev_gt_to_hyp_;
};

/// One-shot evaluation of a whole sequence (entries in any order).
MetricsReport evaluate(const std::vector<TrackEntry>& gt,
                       const std::vector<TrackEntry>& hyp, MatchMode mode,
                       double threshold);

}  // namespace fusemot::metrics
