#pragma once

#include <optional>

#include "wmw/auc.hpp"
#include "wmw/sample.hpp"

namespace wmw {

/// Tie-robust variance of the empirical AUC built from kernel summaries:
///
///   var_tilde = a * v_hat + b * zeta1_hat_sq + c * zeta2_hat_sq
///   a = -(M-1) / (M(M+1)),  b = n2 / (M+1),  c = n1 / (M+1)
///
/// var_final applies the (1 - 1/n1 - 1/n2) factor to max(var_tilde, 0).
/// Both are on the scale of Var(A_hat) itself, not of n * Var(A_hat).
struct EuVariance {
    double var_tilde = 0.0;
    double a_coef = 0.0;
    double b_coef = 0.0;
    double c_coef = 0.0;
    double var_final = 0.0;
    double nu = 0.0;
    bool clamped = false;
    bool correction_applied = false;
    bool df_fallback = false;
};

struct EuCoefficients {
    double a;
    double b;
    double c;
};

EuCoefficients eu_coefficients(std::size_t n1, std::size_t n2);

/// Fills everything except nu (see eu_df). Throws TooSmall unless n1, n2 >= 2.
EuVariance eu_variance(const KernelSummaries& summaries, const TwoSampleData& data);

/// Welch-Satterthwaite degrees of freedom with denominators
/// (n1 - 2, n2 - 2, M - 3). Returns nullopt when a denominator is not
/// positive or every component term vanishes.
std::optional<double> eu_df(const EuVariance& ev, const KernelSummaries& summaries,
                            const TwoSampleData& data);

/// eu_variance followed by eu_df, with nu = n1 + n2 - 2 when eu_df fails.
EuVariance eu_estimate(const TwoSampleData& data);

}  // namespace wmw
