// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "fusemot/hungarian.hpp"

namespace fusemot::metrics {

std::vector<TrackEntry> filter_setting(const std::vector<TrackEntry>& entries,
                                       TaskSetting setting) {
    if (setting == TaskSetting::All) return entries;
    std::vector<TrackEntry> kept;
    for (const auto& e : entries)
        if (e.class_label == "person" && e.occlusion < 75) kept.push_back(e);
    return kept;
}

double match_cost(const TrackEntry& gt, const TrackEntry& hyp, MatchMode mode) {
    if (mode == MatchMode::PlaneDistance) {
        const double dx = gt.x - hyp.x;
        const double dy = gt.y - hyp.y;
        return std::sqrt(dx * dx + dy * dy);
    }
    const double x0 = std::max(gt.left, hyp.left);
    const double y0 = std::max(gt.top, hyp.top);
    const double x1 = std::min(gt.left + gt.width, hyp.left + hyp.width);
    const double y1 = std::min(gt.top + gt.height, hyp.top + hyp.height);
    const double inter = std::max(0.0, x1 - x0) * std::max(0.0, y1 - y0);
    const double uni = gt.width * gt.height + hyp.width * hyp.height - inter;
    return uni > 0.0 ? 1.0 - inter / uni : 1.0;
}

FrameMatchResult match_frame(const std::vector<TrackEntry>& gt,
                             const std::vector<TrackEntry>& hyp, MatchMode mode,
                             double threshold,
                             const std::map<std::int64_t, std::int64_t>& prev_gt_to_hyp) {
    FrameMatchResult result;
    const int ng = static_cast<int>(gt.size());
    const int nh = static_cast<int>(hyp.size());

    std::vector<char> gt_done(ng, 0), hyp_done(nh, 0);

    // Continuity: keep last frame's pairing whenever it is still admissible.
    for (int i = 0; i < ng; ++i) {
        const auto prev = prev_gt_to_hyp.find(gt[i].id);
        if (prev == prev_gt_to_hyp.end()) continue;
        for (int j = 0; j < nh; ++j) {
            if (hyp_done[j] || hyp[j].id != prev->second) continue;
            const double cost = match_cost(gt[i], hyp[j], mode);
            if (cost <= threshold) {
                result.matches.emplace_back(gt[i].id, hyp[j].id);
                result.match_costs.push_back(cost);
                gt_done[i] = 1;
                hyp_done[j] = 1;
            }
            break;
        }
    }

    // Hungarian over the remainder.
    std::vector<int> gi, hj;
    for (int i = 0; i < ng; ++i)
        if (!gt_done[i]) gi.push_back(i);
    for (int j = 0; j < nh; ++j)
        if (!hyp_done[j]) hj.push_back(j);
    Eigen::MatrixXd cost(static_cast<int>(gi.size()), static_cast<int>(hj.size()));
    for (std::size_t a = 0; a < gi.size(); ++a)
        for (std::size_t b = 0; b < hj.size(); ++b)
            cost(static_cast<int>(a), static_cast<int>(b)) =
                match_cost(gt[gi[a]], hyp[hj[b]], mode);
    const auto assignment = assign::associate_hungarian(cost, threshold);
    for (std::size_t k = 0; k < assignment.pairs.size(); ++k) {
        const auto [a, b] = assignment.pairs[k];
        result.matches.emplace_back(gt[gi[a]].id, hyp[hj[b]].id);
        result.match_costs.push_back(cost(a, b));
        gt_done[gi[a]] = 1;
        hyp_done[hj[b]] = 1;
    }

    for (int i = 0; i < ng; ++i)
        if (!gt_done[i]) result.unmatched_gt.push_back(gt[i].id);
    for (int j = 0; j < nh; ++j)
        if (!hyp_done[j]) result.unmatched_hyp.push_back(hyp[j].id);

    for (const auto& [gid, hid] : result.matches) {
        const auto prev = prev_gt_to_hyp.find(gid);
        if (prev != prev_gt_to_hyp.end() && prev->second != hid) ++result.id_switches;
    }
    return result;
}

Accumulator::Accumulator(MatchMode mode, double threshold)
    : mode_(mode), threshold_(threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("match threshold must be positive");
}

void Accumulator::add_frame(int frame, const std::vector<TrackEntry>& gt,
                            const std::vector<TrackEntry>& hyp) {
    if (frame <= last_frame_)
        throw std::invalid_argument("frames must be added in increasing order");
    last_frame_ = frame;

    const FrameMatchResult fm = match_frame(gt, hyp, mode_, threshold_, prev_gt_to_hyp_);

    total_gt_ += static_cast<std::int64_t>(gt.size());
    total_hyp_ += static_cast<std::int64_t>(hyp.size());
    fp_ += static_cast<std::int64_t>(fm.unmatched_hyp.size());
    fn_ += static_cast<std::int64_t>(fm.unmatched_gt.size());
    ids_ += fm.id_switches;
    match_count_ += static_cast<std::int64_t>(fm.matches.size());
    for (double c : fm.match_costs) match_cost_sum_ += c;

    std::set<std::int64_t> matched_gt;
    for (const auto& [gid, hid] : fm.matches) {
        matched_gt.insert(gid);
        prev_gt_to_hyp_[gid] = hid;
    }

    for (const auto& g : gt) {
        auto& st = gt_stats_[g.id];
        ++st.frames_present;
        const bool tracked = matched_gt.count(g.id) > 0;
        if (tracked) {
            ++st.frames_matched;
            if (st.ever_tracked && !st.tracked_last) ++st.fragmentations;
            st.ever_tracked = true;
        }
        st.tracked_last = tracked;
    }
    for (const auto& h : hyp) ++hyp_frames_[h.id];

    // Frame-level co-occurrences for the identity metrics: every (gt, hyp)
    // pair compatible under the threshold counts, independent of the
    // CLEAR-MOT matching above.
    for (const auto& g : gt)
        for (const auto& h : hyp)
            if (match_cost(g, h, mode_) <= threshold_) ++cooccurrence_[{g.id, h.id}];
}

double Accumulator::mota() const {
    if (total_gt_ == 0) throw EmptyGroundTruth("MOTA undefined without ground truth");
    return 1.0 - static_cast<double>(fp_ + fn_ + ids_) / static_cast<double>(total_gt_);
}

double Accumulator::motp() const {
    if (match_count_ == 0) throw NoMatches("MOTP undefined without matches");
    return match_cost_sum_ / static_cast<double>(match_count_);
}

Accumulator::IdScores Accumulator::id_metrics() const {
    std::vector<std::int64_t> gt_ids, hyp_ids;
    for (const auto& [id, st] : gt_stats_) gt_ids.push_back(id);
    for (const auto& [id, cnt] : hyp_frames_) hyp_ids.push_back(id);

    IdScores scores;
    std::int64_t idtp = 0;
    if (!gt_ids.empty() && !hyp_ids.empty()) {
        // Maximize total co-occurrence: a full min-cost assignment on -m is
        // equivalent, since pairing with m == 0 is as good as leaving both
        // unmatched.
        Eigen::MatrixXd cost(static_cast<int>(gt_ids.size()),
                             static_cast<int>(hyp_ids.size()));
        for (std::size_t i = 0; i < gt_ids.size(); ++i)
            for (std::size_t j = 0; j < hyp_ids.size(); ++j) {
                const auto it = cooccurrence_.find({gt_ids[i], hyp_ids[j]});
                cost(static_cast<int>(i), static_cast<int>(j)) =
                    it == cooccurrence_.end() ? 0.0 : -static_cast<double>(it->second);
            }
        const auto assignment = assign::associate_hungarian(cost);
        for (const auto& [i, j] : assignment.pairs)
            idtp += static_cast<std::int64_t>(-cost(i, j));
    }
    scores.idtp = idtp;
    scores.idfn = total_gt_ - idtp;
    scores.idfp = total_hyp_ - idtp;
    const double denom = static_cast<double>(total_gt_ + total_hyp_);
    scores.idf1 = denom > 0.0 ? 2.0 * static_cast<double>(idtp) / denom : 0.0;
    scores.idp = total_hyp_ > 0 ? static_cast<double>(idtp) / static_cast<double>(total_hyp_) : 0.0;
    scores.idr = total_gt_ > 0 ? static_cast<double>(idtp) / static_cast<double>(total_gt_) : 0.0;
    return scores;
}

Accumulator::Coverage Accumulator::coverage() const {
    Coverage cov;
    cov.gt = static_cast<int>(gt_stats_.size());
    for (const auto& [id, st] : gt_stats_) {
        const double ratio = st.frames_present > 0
                                 ? static_cast<double>(st.frames_matched) /
                                       static_cast<double>(st.frames_present)
                                 : 0.0;
        if (ratio >= 0.8)
            ++cov.mostly_tracked;
        else if (ratio < 0.2)
            ++cov.mostly_lost;
        else
            ++cov.partially_tracked;
        cov.fragmentations += st.fragmentations;
    }
    return cov;
}

MetricsReport Accumulator::report() const {
    MetricsReport rep;
    rep.mode = mode_;
    const auto ids = id_metrics();
    rep.idf1 = ids.idf1;
    rep.idp = ids.idp;
    rep.idr = ids.idr;
    const auto cov = coverage();
    rep.gt = cov.gt;
    rep.mostly_tracked = cov.mostly_tracked;
    rep.partially_tracked = cov.partially_tracked;
    rep.mostly_lost = cov.mostly_lost;
    rep.fragmentations = cov.fragmentations;
    rep.fp = fp_;
    rep.fn = fn_;
    rep.id_switches = ids_;
    rep.recall = total_gt_ > 0
                     ? static_cast<double>(total_gt_ - fn_) / static_cast<double>(total_gt_)
                     : 0.0;
    const std::int64_t tp = total_gt_ - fn_;
    rep.precision = tp + fp_ > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp_)
                                 : 0.0;
    rep.mota = total_gt_ > 0 ? mota() : std::numeric_limits<double>::quiet_NaN();
    rep.motp = match_count_ > 0 ? motp() : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

MetricsReport evaluate(const std::vector<TrackEntry>& gt,
                       const std::vector<TrackEntry>& hyp, MatchMode mode,
                       double threshold) {
    std::set<int> frames;
    for (const auto& e : gt) frames.insert(e.frame);
    for (const auto& e : hyp) frames.insert(e.frame);

    Accumulator acc(mode, threshold);
    for (int frame : frames) {
        std::vector<TrackEntry> g, h;
        for (const auto& e : gt)
            if (e.frame == frame) g.push_back(e);
        for (const auto& e : hyp)
            if (e.frame == frame) h.push_back(e);
        acc.add_frame(frame, g, h);
    }
    return acc.report();
}

}  // namespace fusemot::metrics
