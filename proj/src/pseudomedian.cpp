#include "wmw/pseudomedian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wmw/error.hpp"

namespace wmw {

namespace {

double median_inplace(std::vector<double>& v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

}  // namespace

std::vector<double> pairwise_differences(const TwoSampleData& data) {
    std::vector<double> d;
    d.reserve(data.m());
    for (double xi : data.x().values()) {
        for (double yj : data.y().values()) d.push_back(xi - yj);
    }
    return d;
}

double pseudomedian_estimate(const TwoSampleData& data) {
    auto d = pairwise_differences(data);
    return median_inplace(d);
}

double mad_scale(const TwoSampleData& data) {
    auto d = pairwise_differences(data);
    const double med = median_inplace(d);
    for (double& v : d) v = std::abs(v - med);
    return 2.0 * median_inplace(d);
}

PseudomedianResult pseudomedian_ci(const TwoSampleData& data, const TestConfig& cfg,
                                   std::size_t grid_k) {
    if (data.n1() < 3 || data.n2() < 3) {
        throw TooSmall("pseudomedian interval needs n1 >= 3 and n2 >= 3");
    }
    if (grid_k < 3) throw std::invalid_argument("grid_k must be at least 3");
    cfg.check();

    const TestConfig shifted_cfg{.a0 = 0.5,
                                 .alpha = cfg.alpha,
                                 .method = Method::Eu,
                                 .alternative = Alternative::TwoSided};

    PseudomedianResult r;
    r.grid_k = grid_k;
    {
        auto d = pairwise_differences(data);
        r.theta_hat = median_inplace(d);
        for (double& v : d) v = std::abs(v - r.theta_hat);
        r.scale = 2.0 * median_inplace(d);
    }
    r.search_lo = r.theta_hat - 3.0 * r.scale;
    r.search_hi = r.theta_hat + 3.0 * r.scale;
    r.ci_lo = r.ci_hi = r.theta_hat;

    if (r.scale == 0.0) {
        r.warnings.emplace_back("zero scale: all pairwise differences equal");
        return r;
    }

    auto accepted = [&](double theta0) {
        ++r.tests_run;
        return wmw_test(data.shifted_y(theta0), shifted_cfg).p_value >= cfg.alpha;
    };

    // Offsets are taken relative to theta_hat so a location shift of the
    // data moves every grid point by the same amount.
    const double step = 6.0 * r.scale / static_cast<double>(grid_k - 1);
    auto grid_point = [&](std::size_t k) {
        return r.theta_hat + (-3.0 * r.scale + static_cast<double>(k) * step);
    };

    std::vector<char> accept(grid_k);
    for (std::size_t k = 0; k < grid_k; ++k) accept[k] = accepted(grid_point(k));

    const auto first = std::find(accept.begin(), accept.end(), char{1});
    if (first == accept.end()) {
        r.warnings.emplace_back("empty acceptance region");
        return r;
    }
    const std::size_t k_lo = static_cast<std::size_t>(first - accept.begin());
    const std::size_t k_hi =
        grid_k - 1 - static_cast<std::size_t>(std::find(accept.rbegin(), accept.rend(), char{1}) -
                                              accept.rbegin());

    const double tol = std::max(1e-6 * r.scale, 1e-12);
    // Shrinks [in, out] around the crossing, keeping `in` accepted.
    auto bisect = [&](double in, double out) {
        while (std::abs(out - in) > tol) {
            const double mid = 0.5 * (in + out);
            if (mid == in || mid == out) break;
            if (accepted(mid)) {
                in = mid;
            } else {
                out = mid;
            }
        }
        return in;
    };

    r.ci_lo = grid_point(k_lo);
    r.ci_hi = grid_point(k_hi);
    if (k_lo > 0) {
        r.ci_lo = bisect(r.ci_lo, grid_point(k_lo - 1));
        r.refined = true;
    } else {
        r.warnings.emplace_back("acceptance region reaches the lower search bound");
    }
    if (k_hi + 1 < grid_k) {
        r.ci_hi = bisect(r.ci_hi, grid_point(k_hi + 1));
        r.refined = true;
    } else {
        r.warnings.emplace_back("acceptance region reaches the upper search bound");
    }
    if (std::count(accept.begin() + static_cast<std::ptrdiff_t>(k_lo),
                   accept.begin() + static_cast<std::ptrdiff_t>(k_hi) + 1, char{0}) > 0) {
        r.warnings.emplace_back("acceptance region has interior gaps");
    }
    return r;
}

}  // namespace wmw
