// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <limits>
#include <utility>
#include <vector>

namespace fusemot::assign {

struct Assignment {
    std::vector<std::pair<int, int>> pairs;  ///< (row, col), within gate
    std::vector<int> unmatched_rows;
    std::vector<int> unmatched_cols;
    double total_cost = 0.0;  ///< sum over kept pairs
};

/// Minimum-cost bipartite assignment (Hungarian / shortest augmenting path,
/// O(n^3)). Rectangular matrices are supported; min(rows, cols) pairs are
/// produced before gating. Entries above `gate` (or +inf) are treated as
/// forbidden and excluded from the result.
Assignment associate_hungarian(const Eigen::MatrixXd& cost,
                               double gate = std::numeric_limits<double>::infinity());

}  // namespace fusemot::assign
