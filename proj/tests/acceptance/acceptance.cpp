// Acceptance gate. Prints one PASS/FAIL line per criterion; `--criterion N`
// runs a single one. Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wmw/auc.hpp"
#include "wmw/enumeration.hpp"
#include "wmw/inference.hpp"
#include "wmw/pseudomedian.hpp"
#include "wmw/simulation.hpp"
#include "wmw/variance_bc.hpp"

using namespace wmw;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class... Args>
std::string fmt(Args&&... args) {
    std::ostringstream s;
    s.precision(6);
    (s << ... << args);
    return s.str();
}

TwoSampleData make(const std::vector<double>& x, const std::vector<double>& y) { return validate(x, y); }

Verdict preset_reproduction() {
    const auto t0 = Clock::now();
    auto cfg = *preset("paper-s2");
    cfg.reps = 2000;
    cfg.seed = 20240601;
    const auto s = run_simulation(cfg);
    const double elapsed = seconds_since(t0);
    const double band = 3 * 0.0158 / std::sqrt(2000.0);
    const bool mean_ok = std::abs(s.mean_a_hat - 0.5) <= band;
    const bool sd_ok = s.sd_a_hat >= 0.0148 && s.sd_a_hat <= 0.0168;
    return {mean_ok && sd_ok && elapsed < 60.0,
            fmt("mean ", s.mean_a_hat, " (band +-", band, "), sd ", s.sd_a_hat, ", ", elapsed, " s")};
}

Verdict arcsin_oracle() {
    const double boundary = gaussian_scale_variance(1e-9, 1.0);
    double worst_equal = 0.0;
    for (double s : {1e-3, 0.1, 1.0, 7.5, 1e4}) {
        worst_equal = std::max(worst_equal, std::abs(gaussian_scale_variance(s, s) - 1.0 / 6.0));
    }
    return {std::abs(boundary - 0.25) <= 1e-6 && worst_equal <= 1e-12,
            fmt("boundary ", boundary, ", max |equal - 1/6| ", worst_equal)};
}

// Population quantities written straight from their definitions.
struct Population {
    double zeta1_sq, zeta2_sq, v;
};

Population population(const DiscreteDistribution& fx, const DiscreteDistribution& gy) {
    double auc = 0.0;
    for (const auto& a : fx.atoms())
        for (const auto& b : gy.atoms()) auc += a.prob * b.prob * oracle::h(a.value, b.value);
    Population p{0, 0, 0};
    for (const auto& a : fx.atoms()) {
        double phi = 0.0;
        for (const auto& b : gy.atoms()) phi += b.prob * oracle::h(a.value, b.value);
        p.zeta1_sq += a.prob * (phi - auc) * (phi - auc);
    }
    for (const auto& b : gy.atoms()) {
        double phi = 0.0;
        for (const auto& a : fx.atoms()) phi += a.prob * oracle::h(a.value, b.value);
        p.zeta2_sq += b.prob * (phi - auc) * (phi - auc);
    }
    for (const auto& a : fx.atoms())
        for (const auto& b : gy.atoms())
            p.v += a.prob * b.prob * std::pow(oracle::h(a.value, b.value) - auc, 2);
    return p;
}

struct EnumCase {
    DiscreteDistribution fx;
    DiscreteDistribution gy;
    std::size_t n1, n2;
};

std::vector<EnumCase> enumeration_cases() {
    const DiscreteDistribution bern({{0, 0.5}, {1, 0.5}});
    const DiscreteDistribution bern_skew({{0, 0.2}, {1, 0.8}});
    const DiscreteDistribution three({{0, 1.0 / 3}, {1, 1.0 / 3}, {2, 1.0 / 3}});
    const DiscreteDistribution lumpy({{0, 0.6}, {1.5, 0.3}, {3, 0.1}});
    const DiscreteDistribution offset({{0.5, 0.25}, {1, 0.5}, {2.5, 0.25}});
    return {
        {bern, bern, 2, 2},        {bern, bern, 3, 3},       {bern, bern_skew, 2, 3},
        {bern_skew, three, 3, 2},  {three, three, 2, 2},     {three, three, 3, 3},
        {three, lumpy, 3, 2},      {lumpy, offset, 2, 3},    {offset, bern, 3, 3},
        {lumpy, lumpy, 3, 3},      {bern_skew, offset, 2, 2}, {offset, three, 3, 3},
    };
}

Verdict unbiasedness() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::size_t worst_case = 0;
    const auto cases = enumeration_cases();
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& c = cases[k];
        const auto m = exact_variance_enumerator(c.fx, c.gy, c.n1, c.n2);
        const double gap = std::abs(m.mean_var_tilde - m.var_a_hat);
        if (gap > worst) {
            worst = gap;
            worst_case = k;
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-12 && elapsed < 10.0,
            fmt(cases.size(), " configurations, max |E Var~ - Var| ", worst, " (case ", worst_case, "), ",
                elapsed, " s")};
}

Verdict expectation_identities() {
    double worst_z1 = 0, worst_z2 = 0, worst_v = 0;
    for (const auto& c : enumeration_cases()) {
        const auto m = exact_variance_enumerator(c.fx, c.gy, c.n1, c.n2);
        const auto p = population(c.fx, c.gy);
        const double n1 = c.n1, n2 = c.n2, mm = n1 * n2;
        const double z1 = (n2 - 1) / n2 * p.zeta1_sq + p.v / n2;
        const double z2 = (n1 - 1) / n1 * p.zeta2_sq + p.v / n1;
        const double v = p.v - ((n2 - 1) * p.zeta1_sq + (n1 - 1) * p.zeta2_sq) / (mm - 1);
        worst_z1 = std::max(worst_z1, std::abs(m.mean_zeta1_hat_sq - z1));
        worst_z2 = std::max(worst_z2, std::abs(m.mean_zeta2_hat_sq - z2));
        worst_v = std::max(worst_v, std::abs(m.mean_v_hat - v));
    }
    return {std::max({worst_z1, worst_z2, worst_v}) <= 1e-12,
            fmt("max deviation: zeta1 ", worst_z1, ", zeta2 ", worst_z2, ", v ", worst_v)};
}

Verdict fast_equals_bruteforce() {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(1, 50);
    std::size_t mismatches = 0;
    for (int k = 0; k < 10000; ++k) {
        const bool ties = k % 2 == 0;
        const auto d = make(oracle::random_sample(rng, size(rng), ties),
                            oracle::random_sample(rng, size(rng), ties));
        const auto fast = auc_fast(d);
        const auto slow = auc_bruteforce(d);
        if (fast.a_hat != slow.a_hat || fast.has_cross_ties != slow.has_cross_ties) ++mismatches;
    }
    return {mismatches == 0, fmt("10000 instances, ", mismatches, " mismatches")};
}

Verdict reduction_property() {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::size_t> size(2, 60);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto d = make(oracle::random_sample(rng, size(rng), false),
                            oracle::random_sample(rng, size(rng), false));
        const auto s = kernel_summaries(d);
        const auto c = bc_components(d, s.a_hat);
        const auto pl = placements(d);
        worst = std::max({worst, std::abs(s.zeta1_hat_sq - c.zeta1_hat_sq),
                          std::abs(s.zeta2_hat_sq - c.zeta2_hat_sq)});
        for (std::size_t i = 0; i < d.n1(); ++i)
            worst = std::max(worst, std::abs(s.row_means[i] - (1.0 - pl.g_at_x[i])));
        for (std::size_t j = 0; j < d.n2(); ++j)
            worst = std::max(worst, std::abs(s.col_means[j] - pl.f_at_y[j]));
    }
    return {worst <= 1e-12, fmt("1000 tie-free instances, max deviation ", worst)};
}

Verdict calibration() {
    const auto t0 = Clock::now();
    struct Scenario {
        const char* name;
        Generator gx, gy;
        std::size_t n;
    };
    const std::vector<Scenario> scenarios{
        {"N(0,1) vs N(0,1)", dist::Normal{0, 1}, dist::Normal{0, 1}, 50},
        {"N(0,0.1^2) vs N(0,3^2)", dist::Normal{0, 0.1}, dist::Normal{0, 3}, 100},
        {"discretized normals", dist::DiscretizedNormal{0, 1, 1.0}, dist::DiscretizedNormal{0, 1, 1.0}, 50},
    };
    bool ok = true;
    std::string detail;
    std::uint64_t seed = 70;
    for (const auto& sc : scenarios) {
        SimConfig cfg;
        cfg.n1 = cfg.n2 = sc.n;
        cfg.reps = 5000;
        cfg.seed = seed++;
        cfg.generator_x = sc.gx;
        cfg.generator_y = sc.gy;
        cfg.estimand = Estimand::Type1Rate;
        const auto s = coverage_study(cfg, {.a0 = 0.5, .alpha = 0.05, .method = Method::Eu});
        ok = ok && *s.rate >= 0.035 && *s.rate <= 0.065;
        detail += fmt(sc.name, ": ", *s.rate, "; ");
    }
    const double elapsed = seconds_since(t0);
    return {ok && elapsed < 300.0, detail + fmt(elapsed, " s")};
}

Verdict ci_test_consistency() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::size_t> size(2, 60);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const Alternative alts[] = {Alternative::TwoSided, Alternative::Less, Alternative::Greater};
    std::size_t violations = 0;
    for (int k = 0; k < 1000; ++k) {
        const bool ties = k % 3 == 0;
        const auto d = make(oracle::random_sample(rng, size(rng), ties),
                            oracle::random_sample(rng, size(rng), ties));
        Method method = Method::Eu;
        if (k % 4 == 1) method = Method::PluginZ;
        if (k % 4 == 3 && !ties) method = Method::Bc;
        const Alternative alt = alts[k % 3];
        // Pick a0 near the estimate so that both outcomes occur often.
        const auto probe = wmw_test(d, {.method = method});
        const double spread = probe.se > 0 ? 3 * probe.se : 0.1;
        const double a0 = std::clamp(probe.a_hat + u(rng) * spread, 0.0, 1.0);
        const TestConfig cfg{.a0 = a0, .alpha = 0.05, .method = method, .alternative = alt};
        const auto r = wmw_test(d, cfg);
        const bool inside = r.ci_lo - 1e-9 <= a0 && a0 <= r.ci_hi + 1e-9;
        const bool strictly_inside = r.ci_lo + 1e-9 <= a0 && a0 <= r.ci_hi - 1e-9;
        const bool accepted = r.p_value >= cfg.alpha;
        // Within the quantile tolerance of a boundary either answer is acceptable.
        if (accepted ? !inside : strictly_inside) ++violations;
    }
    return {violations == 0, fmt("1000 datasets, ", violations, " disagreements")};
}

double brute_pseudomedian(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> d;
    for (double a : x)
        for (double b : y) d.push_back(a - b);
    std::sort(d.begin(), d.end());
    const std::size_t m = d.size();
    return m % 2 == 1 ? d[m / 2] : (d[m / 2 - 1] + d[m / 2]) / 2;
}

Verdict pseudomedian_checks() {
    const auto t0 = Clock::now();
    SimConfig cfg;
    cfg.n1 = cfg.n2 = 100;
    cfg.reps = 1000;
    cfg.seed = 90;
    cfg.generator_x = dist::Normal{1, 1};
    cfg.generator_y = dist::Normal{0, 1};
    cfg.estimand = Estimand::PseudomedianCoverage;
    cfg.true_theta = 1.0;
    const auto s = coverage_study(cfg, {.alpha = 0.05});
    const bool coverage_ok = *s.rate >= 0.93 && *s.rate <= 0.97;

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> size(1, 40);
    std::size_t mismatches = 0;
    for (int k = 0; k < 1000; ++k) {
        const auto x = oracle::random_sample(rng, size(rng), k % 2 == 0);
        const auto y = oracle::random_sample(rng, size(rng), k % 2 == 0);
        if (pseudomedian_estimate(make(x, y)) != brute_pseudomedian(x, y)) ++mismatches;
    }
    return {coverage_ok && mismatches == 0,
            fmt("coverage ", *s.rate, ", estimate mismatches ", mismatches, ", ", seconds_since(t0), " s")};
}

Verdict determinism() {
    std::vector<SimConfig> configs;
    auto a = *preset("equal-normals");
    a.reps = 400;
    a.seed = 100;
    configs.push_back(a);
    auto b = *preset("tied-normals");
    b.reps = 400;
    b.seed = 101;
    configs.push_back(b);
    auto c = *preset("paper-s2");
    c.reps = 200;
    c.seed = 102;
    configs.push_back(c);
    SimConfig d;
    d.n1 = 30;
    d.n2 = 25;
    d.reps = 60;
    d.seed = 103;
    d.generator_x = dist::Normal{0.5, 1};
    d.estimand = Estimand::PseudomedianCoverage;
    d.grid_k = 64;
    configs.push_back(d);

    std::size_t differing = 0;
    for (const auto& cfg : configs) {
        std::vector<SimSummary> runs;
        for (const char* threads : {"1", "1", "8", "8"}) {
            ::setenv("WMW_THREADS", threads, 1);
            runs.push_back(run_simulation(cfg));
        }
        for (const auto& r : runs)
            if (!(r == runs.front())) ++differing;
    }
    ::unsetenv("WMW_THREADS");
    return {differing == 0, fmt(configs.size(), " configurations x 4 runs, ", differing, " differing summaries")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"paper-s2 scaled reproduction", preset_reproduction},
        {"arcsin variance oracle", arcsin_oracle},
        {"exact unbiasedness of the variance estimator", unbiasedness},
        {"expectation identities for zeta1, zeta2, v", expectation_identities},
        {"fast and brute-force AUC agree", fast_equals_bruteforce},
        {"reduction to placement components", reduction_property},
        {"type-I calibration", calibration},
        {"CI and test agree", ci_test_consistency},
        {"pseudomedian coverage and estimate", pseudomedian_checks},
        {"determinism across runs and threads", determinism},
    };

    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            const long n = std::strtol(argv[++i], nullptr, 10);
            if (n < 1 || n > static_cast<long>(criteria.size())) {
                std::cerr << "no criterion " << n << '\n';
                return 2;
            }
            selected.push_back(static_cast<std::size_t>(n));
        } else {
            std::cerr << "usage: wmw_acceptance [--criterion N]...\n";
            return 2;
        }
    }
    if (selected.empty())
        for (std::size_t n = 1; n <= criteria.size(); ++n) selected.push_back(n);

    int failed = 0;
    for (std::size_t n : selected) {
        const auto& [name, check] = criteria[n - 1];
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << name << "  ["
                  << v.detail << "]" << std::endl;
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
