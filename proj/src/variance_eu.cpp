#include "wmw/variance_eu.hpp"

#include <algorithm>

#include "wmw/error.hpp"

namespace wmw {

EuCoefficients eu_coefficients(std::size_t n1, std::size_t n2) {
    const double m = static_cast<double>(n1) * static_cast<double>(n2);
    return {-(m - 1.0) / (m * (m + 1.0)), static_cast<double>(n2) / (m + 1.0),
            static_cast<double>(n1) / (m + 1.0)};
}

EuVariance eu_variance(const KernelSummaries& summaries, const TwoSampleData& data) {
    if (data.n1() < 2 || data.n2() < 2) {
        throw TooSmall("EU variance needs n1 >= 2 and n2 >= 2");
    }
    const auto [a, b, c] = eu_coefficients(data.n1(), data.n2());

    EuVariance ev;
    ev.a_coef = a;
    ev.b_coef = b;
    ev.c_coef = c;
    ev.var_tilde = a * summaries.v_hat + b * summaries.zeta1_hat_sq + c * summaries.zeta2_hat_sq;
    ev.clamped = ev.var_tilde < 0.0;
    const double floored = std::max(ev.var_tilde, 0.0);

    const double factor = 1.0 - 1.0 / static_cast<double>(data.n1()) -
                          1.0 / static_cast<double>(data.n2());
    ev.correction_applied = factor > 0.0;
    ev.var_final = ev.correction_applied ? factor * floored : floored;
    return ev;
}

std::optional<double> eu_df(const EuVariance& ev, const KernelSummaries& summaries,
                            const TwoSampleData& data) {
    const double n1 = static_cast<double>(data.n1());
    const double n2 = static_cast<double>(data.n2());
    const double m = n1 * n2;
    if (n1 - 2.0 <= 0.0 || n2 - 2.0 <= 0.0 || m - 3.0 <= 0.0) return std::nullopt;

    // Component terms of var_tilde; the ratio is invariant to a common
    // rescaling, so using var_final in place of var_tilde gives the same nu.
    const double t1 = n2 * summaries.zeta1_hat_sq / (m + 1.0);
    const double t2 = n1 * summaries.zeta2_hat_sq / (m + 1.0);
    const double t3 = (m - 1.0) * summaries.v_hat / (m * (m + 1.0));
    const double denom = t1 * t1 / (n1 - 2.0) + t2 * t2 / (n2 - 2.0) + t3 * t3 / (m - 3.0);
    if (!(denom > 0.0)) return std::nullopt;
    const double nu = ev.var_tilde * ev.var_tilde / denom;
    if (!(nu > 0.0)) return std::nullopt;
    return nu;
}

EuVariance eu_estimate(const TwoSampleData& data) {
    const KernelSummaries s = kernel_summaries(data);
    EuVariance ev = eu_variance(s, data);
    if (auto nu = eu_df(ev, s, data)) {
        ev.nu = *nu;
    } else {
        ev.nu = static_cast<double>(data.n1() + data.n2() - 2);
        ev.df_fallback = true;
    }
    return ev;
}

}  // namespace wmw
