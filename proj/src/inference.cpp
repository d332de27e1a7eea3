#include "wmw/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wmw/auc.hpp"
#include "wmw/distributions.hpp"
#include "wmw/variance_bc.hpp"
#include "wmw/variance_eu.hpp"

namespace wmw {

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Eu: return "eu";
        case Method::Bc: return "bc";
        case Method::PluginZ: return "plugin-z";
    }
    return "?";
}

std::string_view to_string(Alternative a) noexcept {
    switch (a) {
        case Alternative::TwoSided: return "two-sided";
        case Alternative::Less: return "less";
        case Alternative::Greater: return "greater";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    for (Method m : {Method::Auto, Method::Eu, Method::Bc, Method::PluginZ}) {
        if (name == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown method: " + std::string(name));
}

Alternative parse_alternative(std::string_view name) {
    for (Alternative a : {Alternative::TwoSided, Alternative::Less, Alternative::Greater}) {
        if (name == to_string(a)) return a;
    }
    throw std::invalid_argument("unknown alternative: " + std::string(name));
}

void TestConfig::check() const {
    if (!(a0 >= 0.0 && a0 <= 1.0)) throw std::invalid_argument("a0 must lie in [0, 1]");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
}

namespace {

double reference_cdf(double t, std::optional<double> df) {
    return df ? t_cdf(t, *df) : normal_cdf(t);
}

double reference_quantile(double p, std::optional<double> df) {
    return df ? t_quantile(p, *df) : normal_quantile(p);
}

std::string format_interval(double lo, double hi) {
    std::ostringstream os;
    os.precision(17);
    os << "ci clamped to [0, 1]; unclamped [" << lo << ", " << hi << "]";
    return os.str();
}

struct Scale {
    double se;
    std::optional<double> df;
    bool degenerate;
};

Scale eu_scale(const TwoSampleData& data, std::vector<std::string>& warnings) {
    const EuVariance ev = eu_estimate(data);
    if (ev.clamped) warnings.emplace_back("variance estimate negative; clamped at zero");
    if (!ev.correction_applied) {
        warnings.emplace_back("second-order correction skipped: 1 - 1/n1 - 1/n2 <= 0");
    }
    if (ev.df_fallback) warnings.emplace_back("degrees of freedom fallback: n1 + n2 - 2");
    return {std::sqrt(ev.var_final), ev.nu, ev.var_final == 0.0};
}

Scale bc_scale(const TwoSampleData& data, double a0, std::vector<std::string>& warnings) {
    const BcVariance bv = bc_variance(data, a0);
    if (!bv.correction_applied) {
        warnings.emplace_back("second-order correction skipped: 1 - 1/n1 - 1/n2 <= 0");
    }
    const double n = static_cast<double>(data.n1() + data.n2());
    const double se = std::sqrt(bv.sigma_final_sq / n);
    return {se, bv.df, bv.degenerate || se == 0.0};
}

Scale plugin_scale(const TwoSampleData& data) {
    const KernelSummaries s = kernel_summaries(data);
    const double lambda = data.lambda_n();
    const double sigma_sq = s.zeta1_hat_sq / lambda + s.zeta2_hat_sq / (1.0 - lambda);
    const double n = static_cast<double>(data.n1() + data.n2());
    const double se = std::sqrt(sigma_sq / n);
    return {se, std::nullopt, se == 0.0};
}

}  // namespace

double pvalue(double statistic, std::optional<double> df, Alternative alternative) {
    switch (alternative) {
        case Alternative::TwoSided:
            return std::min(1.0, 2.0 * reference_cdf(-std::abs(statistic), df));
        case Alternative::Greater:
            return reference_cdf(-statistic, df);
        case Alternative::Less:
            return reference_cdf(statistic, df);
    }
    return 1.0;
}

TestResult wmw_test(const TwoSampleData& data, const TestConfig& cfg) {
    cfg.check();
    TestResult r;
    r.method = cfg.method == Method::Auto ? Method::Eu : cfg.method;
    r.a_hat = auc_fast(data).a_hat;

    Scale scale{};
    switch (r.method) {
        case Method::Bc: scale = bc_scale(data, cfg.a0, r.warnings); break;
        case Method::PluginZ: scale = plugin_scale(data); break;
        default: scale = eu_scale(data, r.warnings); break;
    }
    r.se = scale.se;
    r.df = scale.df;

    const double diff = r.a_hat - cfg.a0;
    if (scale.degenerate) {
        r.warnings.emplace_back("degenerate variance");
        r.se = 0.0;
        if (diff == 0.0) {
            r.statistic = 0.0;
            r.p_value = 1.0;
        } else {
            r.statistic = std::copysign(std::numeric_limits<double>::infinity(), diff);
            r.p_value = pvalue(r.statistic, r.df, cfg.alternative);
        }
    } else {
        r.statistic = diff / r.se;
        r.p_value = pvalue(r.statistic, r.df, cfg.alternative);
    }

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (cfg.alternative == Alternative::TwoSided) {
        const double q = reference_quantile(1.0 - cfg.alpha / 2.0, r.df);
        lo = r.a_hat - q * r.se;
        hi = r.a_hat + q * r.se;
    } else {
        const double q = reference_quantile(1.0 - cfg.alpha, r.df);
        if (cfg.alternative == Alternative::Greater) {
            lo = r.a_hat - q * r.se;
        } else {
            hi = r.a_hat + q * r.se;
        }
    }
    r.ci_lo = std::clamp(lo, 0.0, 1.0);
    r.ci_hi = std::clamp(hi, 0.0, 1.0);
    if ((std::isfinite(lo) && lo < 0.0) || (std::isfinite(hi) && hi > 1.0)) {
        r.warnings.push_back(format_interval(lo, hi));
    }
    return r;
}

double wmw_pvalue(const TwoSampleData& data, double a0) {
    return wmw_test(data, {.a0 = a0, .method = Method::Bc}).p_value;
}

double wmw_pvalue_ties(const TwoSampleData& data, double a0) {
    return wmw_test(data, {.a0 = a0, .method = Method::Eu}).p_value;
}

}  // namespace wmw
