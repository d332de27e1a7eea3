#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wmw/inference.hpp"
#include "wmw/sample.hpp"

namespace wmw {

struct PseudomedianResult {
    double theta_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::size_t grid_k = 0;
    double search_lo = 0.0;
    double search_hi = 0.0;
    double scale = 0.0;  // 2 * MAD of the pairwise differences
    bool refined = false;
    std::size_t tests_run = 0;
    std::vector<std::string> warnings;
};

inline constexpr std::size_t kDefaultGridK = 512;

/// All n1*n2 differences x_i - y_j, row-major in x.
std::vector<double> pairwise_differences(const TwoSampleData& data);

/// Median of the pairwise differences (mean of the two middle order
/// statistics when n1*n2 is even).
double pseudomedian_estimate(const TwoSampleData& data);

/// 2 * median |d - median(d)| over the pairwise differences, without the
/// normal-consistency constant.
double mad_scale(const TwoSampleData& data);

/// Confidence interval for the pseudomedian by inverting the EU test of
/// AUC(x, y + theta0) = 0.5 over an equally spaced grid on
/// theta_hat +- 3 * scale, followed by bisection of both boundary crossings.
/// Uses cfg.alpha only. Throws TooSmall unless n1, n2 >= 3 and
/// std::invalid_argument when grid_k < 3.
PseudomedianResult pseudomedian_ci(const TwoSampleData& data, const TestConfig& cfg = {},
                                   std::size_t grid_k = kDefaultGridK);

}  // namespace wmw
