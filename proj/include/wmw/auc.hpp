#pragma once

#include <cstdint>
#include <vector>

#include "wmw/sample.hpp"

namespace wmw {

/// Mid-rank kernel: 1 if x < y, 1/2 if x == y, 0 otherwise.
constexpr double midrank_kernel(double x, double y) noexcept {
    return x < y ? 1.0 : (x == y ? 0.5 : 0.0);
}

struct AucEstimate {
    double a_hat = 0.0;
    bool has_cross_ties = false;
    std::uint64_t m = 0;
};

/// Empirical CDF of each sample evaluated at the points of the other,
/// using the non-strict (<=) comparison.
struct Placements {
    std::vector<double> g_at_x;  // #{y_j <= x_i} / n2
    std::vector<double> f_at_y;  // #{x_i <= y_j} / n1
};

/// Row/column summaries of the kernel matrix h_ij = h(x_i, y_j), all
/// centered at the empirical AUC.
struct KernelSummaries {
    double a_hat = 0.0;
    std::vector<double> row_means;
    std::vector<double> col_means;
    double v_hat = 0.0;         // sum (h_ij - a_hat)^2 / (M - 1)
    double zeta1_hat_sq = 0.0;  // sum (row_i - a_hat)^2 / (n1 - 1)
    double zeta2_hat_sq = 0.0;  // sum (col_j - a_hat)^2 / (n2 - 1)
};

/// Reference O(n1*n2) double loop over the kernel.
AucEstimate auc_bruteforce(const TwoSampleData& data);

/// Rank-sum identity: A = (sum of pooled mid-ranks of y - n2(n2+1)/2) / M.
/// Bit-identical to auc_bruteforce.
AucEstimate auc_fast(const TwoSampleData& data);

Placements placements(const TwoSampleData& data);

/// Computed from sorted copies of both samples by counting strict and tied
/// comparisons, so the cost is O(n log n) and no matrix is materialized.
/// Throws TooSmall unless n1 >= 2 and n2 >= 2.
KernelSummaries kernel_summaries(const TwoSampleData& data);

/// Same quantities from an explicit kernel matrix. Intended as a check on
/// kernel_summaries; throws TooLarge above max_cells.
KernelSummaries kernel_summaries_direct(const TwoSampleData& data,
                                        std::uint64_t max_cells = 100'000'000);

}  // namespace wmw
