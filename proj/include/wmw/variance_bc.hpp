#pragma once

#include "wmw/sample.hpp"

namespace wmw {

/// Placement-based variance components for continuous data.
struct BcComponents {
    double zeta1_hat_sq = 0.0;  // (n1-1)^-1 sum (G(x_i) - (1 - a0))^2
    double zeta2_hat_sq = 0.0;  // (n2-1)^-1 sum (F(y_j) - a0)^2
    double omega1 = 0.0;        // mean G(x_i)(1 - G(x_i))
    double omega2 = 0.0;        // mean F(y_j)(1 - F(y_j))
};

struct BcVariance {
    double zeta1_star_sq = 0.0;
    double zeta2_star_sq = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double sigma_adj_sq = 0.0;    // variance of sqrt(n)(A - a0)
    double sigma_final_sq = 0.0;  // (1 - 1/n1 - 1/n2) * sigma_adj_sq when the factor is positive
    double df = 0.0;              // Welch-Satterthwaite, from sigma_adj_sq
    bool correction_applied = false;
    bool degenerate = false;      // sigma_adj_sq == 0
};

/// Throws TiesPresent if any x equals any y, TooSmall unless n1, n2 >= 2.
BcComponents bc_components(const TwoSampleData& data, double a0);

/// Bias-corrected components combined Welch-style. When the combined
/// variance is zero the df falls back to n1 + n2 - 2 and `degenerate` is set.
BcVariance bc_variance(const TwoSampleData& data, double a0);

}  // namespace wmw
