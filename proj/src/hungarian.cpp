// SPDX-FileCopyrightText: (C) 2026 fusemot contributors
// SPDX-License-Identifier: Apache-2.0

#include "fusemot/hungarian.hpp"

#include <algorithm>
#include <cmath>

namespace fusemot::assign {

namespace {

constexpr double kForbidden = 1e12;

// Shortest-augmenting-path Hungarian on an n x m matrix with n <= m.
// Returns col assignment per row. 1-based internally, classic formulation
// with dual potentials.
std::vector<int> solve(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, std::numeric_limits<double>::infinity());
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = std::numeric_limits<double>::infinity();
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

Assignment associate_hungarian(const Eigen::MatrixXd& cost, double gate) {
    const int rows = static_cast<int>(cost.rows());
    const int cols = static_cast<int>(cost.cols());
    Assignment out;
    if (rows == 0 || cols == 0) {
        for (int i = 0; i < rows; ++i) out.unmatched_rows.push_back(i);
        for (int j = 0; j < cols; ++j) out.unmatched_cols.push_back(j);
        return out;
    }

    // Cap gated/infinite entries so the duals stay finite.
    Eigen::MatrixXd capped = cost;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!std::isfinite(capped(i, j)) || capped(i, j) > gate)
                capped(i, j) = kForbidden;

    const bool transposed = rows > cols;
    if (transposed) capped.transposeInPlace();

    const std::vector<int> row_to_col = solve(capped);

    std::vector<char> row_used(rows, 0), col_used(cols, 0);
    for (int i = 0; i < static_cast<int>(row_to_col.size()); ++i) {
        const int j = row_to_col[i];
        if (j < 0) continue;
        const int r = transposed ? j : i;
        const int c = transposed ? i : j;
        if (!std::isfinite(cost(r, c)) || cost(r, c) > gate) continue;
        out.pairs.emplace_back(r, c);
        out.total_cost += cost(r, c);
        row_used[r] = 1;
        col_used[c] = 1;
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    for (int i = 0; i < rows; ++i)
        if (!row_used[i]) out.unmatched_rows.push_back(i);
    for (int j = 0; j < cols; ++j)
        if (!col_used[j]) out.unmatched_cols.push_back(j);
    return out;
}

}  // namespace fusemot::assign
