#include "wmw/distributions.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wmw {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p must be in (0,1)");
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double t_cdf(double t, double df) {
    if (!(df > 0.0)) throw std::invalid_argument("t_cdf: df must be positive");
    if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
    if (t == 0.0) return 0.5;
    // P(T < -|t|) = I_{df/(df+t^2)}(df/2, 1/2) / 2
    const double x = df / (df + t * t);
    const double tail = 0.5 * boost::math::ibeta(0.5 * df, 0.5, x);
    return t < 0.0 ? tail : 1.0 - tail;
}

double t_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("t_quantile: p must be in (0,1)");
    if (!(df > 0.0)) throw std::invalid_argument("t_quantile: df must be positive");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile(1.0 - p, df);

    auto f = [&](double t) { return t_cdf(t, df) - p; };
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) return std::numeric_limits<double>::infinity();
    }
    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, boost::math::tools::eps_tolerance<double>(48), max_iter);
    return 0.5 * (a + b);
}

}  // namespace wmw
