#include "wmw/simulation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wmw/auc.hpp"
#include "wmw/pseudomedian.hpp"

namespace wmw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform53(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::vector<double> parse_numbers(std::string_view text) {
    std::vector<double> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string field(text.substr(0, comma));
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size()) {
            throw std::invalid_argument("bad number in generator spec: '" + field + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void check_generator(const Generator& g) {
    std::visit(overloaded{
                   [](const dist::Normal& d) {
                       if (!(d.sigma > 0.0) || !std::isfinite(d.mu)) {
                           throw std::invalid_argument("normal needs finite mu and sigma > 0");
                       }
                   },
                   [](const dist::DiscretizedNormal& d) {
                       if (!(d.sigma > 0.0) || !(d.step > 0.0) || !std::isfinite(d.mu)) {
                           throw std::invalid_argument(
                               "discretized-normal needs finite mu, sigma > 0 and step > 0");
                       }
                   },
                   [](const dist::Uniform& d) {
                       if (!(d.lo < d.hi) || !std::isfinite(d.hi) || !std::isfinite(d.lo)) {
                           throw std::invalid_argument("uniform needs finite lo < hi");
                       }
                   },
                   [](const dist::PointMass& d) {
                       if (!std::isfinite(d.value)) throw std::invalid_argument("point-mass needs a finite value");
                   },
               },
               g);
}

struct Replicate {
    double a_hat = 0.0;
    bool hit = false;
    bool traditional_hit = false;
};

double neumaier_sum(const std::vector<Replicate>& reps, auto&& f) {
    double sum = 0.0;
    double comp = 0.0;
    for (const Replicate& r : reps) {
        const double v = f(r);
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace

Generator parse_generator(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("generator spec needs 'name:params': " + std::string(text));
    }
    const std::string_view name = text.substr(0, colon);
    const auto p = parse_numbers(text.substr(colon + 1));
    Generator g;
    if (name == "normal" && p.size() == 2) {
        g = dist::Normal{p[0], p[1]};
    } else if (name == "discretized-normal" && p.size() == 3) {
        g = dist::DiscretizedNormal{p[0], p[1], p[2]};
    } else if (name == "uniform" && p.size() == 2) {
        g = dist::Uniform{p[0], p[1]};
    } else if (name == "point-mass" && p.size() == 1) {
        g = dist::PointMass{p[0]};
    } else {
        throw std::invalid_argument("unknown generator spec: " + std::string(text));
    }
    check_generator(g);
    return g;
}

std::string to_string(const Generator& g) {
    auto num = [](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    };
    return std::visit(
        overloaded{
            [&](const dist::Normal& d) { return "normal:" + num(d.mu) + ',' + num(d.sigma); },
            [&](const dist::DiscretizedNormal& d) {
                return "discretized-normal:" + num(d.mu) + ',' + num(d.sigma) + ',' + num(d.step);
            },
            [&](const dist::Uniform& d) { return "uniform:" + num(d.lo) + ',' + num(d.hi); },
            [&](const dist::PointMass& d) { return "point-mass:" + num(d.value); },
        },
        g);
}

std::optional<double> symmetry_center(const Generator& g) {
    return std::visit(overloaded{
                          [](const dist::Normal& d) -> std::optional<double> { return d.mu; },
                          [](const dist::DiscretizedNormal& d) -> std::optional<double> {
                              // Rounding to the grid keeps symmetry only about grid points.
                              const double k = d.mu / d.step;
                              if (k == std::round(k)) return d.mu;
                              return std::nullopt;
                          },
                          [](const dist::Uniform& d) -> std::optional<double> { return 0.5 * (d.lo + d.hi); },
                          [](const dist::PointMass& d) -> std::optional<double> { return d.value; },
                      },
                      g);
}

std::string_view to_string(Estimand e) noexcept {
    switch (e) {
        case Estimand::AucMeanSd: return "auc-mean-sd";
        case Estimand::Type1Rate: return "type1-rate";
        case Estimand::CiCoverage: return "ci-coverage";
        case Estimand::PseudomedianCoverage: return "pseudomedian-coverage";
    }
    return "?";
}

Estimand parse_estimand(std::string_view name) {
    for (Estimand e : {Estimand::AucMeanSd, Estimand::Type1Rate, Estimand::CiCoverage,
                       Estimand::PseudomedianCoverage}) {
        if (name == to_string(e)) return e;
    }
    throw std::invalid_argument("unknown estimand: " + std::string(name));
}

void SimConfig::check() const {
    if (reps == 0) throw std::invalid_argument("reps must be at least 1");
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("n1 and n2 must be positive");
    check_generator(generator_x);
    check_generator(generator_y);
    if (estimand == Estimand::PseudomedianCoverage && !true_theta) {
        if (!symmetry_center(generator_x) || !symmetry_center(generator_y)) {
            throw std::invalid_argument("pseudomedian coverage needs true_theta for these generators");
        }
    }
}

std::optional<SimConfig> preset(std::string_view name) {
    SimConfig c;
    if (name == "paper-s2") {
        c.n1 = c.n2 = 1000;
        c.reps = 10000;
        c.generator_x = dist::Normal{0.0, 0.1};
        c.generator_y = dist::Normal{0.0, 3.0};
        c.estimand = Estimand::AucMeanSd;
    } else if (name == "equal-normals") {
        c.n1 = c.n2 = 50;
        c.reps = 5000;
        c.generator_x = dist::Normal{0.0, 1.0};
        c.generator_y = dist::Normal{0.0, 1.0};
        c.estimand = Estimand::Type1Rate;
    } else if (name == "tied-normals") {
        c.n1 = c.n2 = 50;
        c.reps = 5000;
        c.generator_x = dist::DiscretizedNormal{0.0, 1.0, 0.5};
        c.generator_y = dist::DiscretizedNormal{0.0, 1.0, 0.5};
        c.estimand = Estimand::CiCoverage;
    } else {
        return std::nullopt;
    }
    return c;
}

std::vector<std::string> preset_names() { return {"paper-s2", "equal-normals", "tied-normals"}; }

std::mt19937_64 replication_engine(std::uint64_t seed, std::uint64_t r) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(r + 0x632be59bd9b4e019ULL)));
}

double NormalSampler::operator()(std::mt19937_64& eng) {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform53(eng);  // (0, 1]
    const double u2 = uniform53(eng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

std::vector<double> draw(const Generator& g, std::size_t n, std::mt19937_64& eng,
                         NormalSampler& normal) {
    std::vector<double> out(n);
    for (double& v : out) {
        v = std::visit(overloaded{
                           [&](const dist::Normal& d) { return d.mu + d.sigma * normal(eng); },
                           [&](const dist::DiscretizedNormal& d) {
                               const double z = d.mu + d.sigma * normal(eng);
                               return d.step * std::round(z / d.step);
                           },
                           [&](const dist::Uniform& d) { return d.lo + (d.hi - d.lo) * uniform53(eng); },
                           [&](const dist::PointMass& d) { return d.value; },
                       },
                       g);
    }
    return out;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("WMW_THREADS")) {
        unsigned v = 0;
        const auto* end = env + std::char_traits<char>::length(env);
        const auto res = std::from_chars(env, end, v);
        if (res.ec == std::errc() && res.ptr == end && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SimSummary run_simulation(const SimConfig& cfg, const TestConfig& test_cfg, unsigned threads) {
    cfg.check();
    if (cfg.estimand != Estimand::AucMeanSd) test_cfg.check();

    const double theta = cfg.true_theta.value_or(symmetry_center(cfg.generator_x).value_or(0.0) -
                                                 symmetry_center(cfg.generator_y).value_or(0.0));
    const double n1 = static_cast<double>(cfg.n1);
    const double n2 = static_cast<double>(cfg.n2);
    const double traditional_se = std::sqrt((n1 + n2 + 1.0) / (12.0 * n1 * n2));

    auto replicate = [&](std::size_t r) {
        auto eng = replication_engine(cfg.seed, r);
        NormalSampler normal;
        const auto x = draw(cfg.generator_x, cfg.n1, eng, normal);
        const auto y = draw(cfg.generator_y, cfg.n2, eng, normal);
        const TwoSampleData data = validate(x, y);

        Replicate out;
        switch (cfg.estimand) {
            case Estimand::AucMeanSd:
                out.a_hat = auc_fast(data).a_hat;
                break;
            case Estimand::Type1Rate: {
                const TestResult res = wmw_test(data, test_cfg);
                out.a_hat = res.a_hat;
                out.hit = res.p_value < test_cfg.alpha;
                const double z = (res.a_hat - test_cfg.a0) / traditional_se;
                out.traditional_hit = pvalue(z, std::nullopt, test_cfg.alternative) < test_cfg.alpha;
                break;
            }
            case Estimand::CiCoverage: {
                const TestResult res = wmw_test(data, test_cfg);
                out.a_hat = res.a_hat;
                out.hit = res.ci_lo <= test_cfg.a0 && test_cfg.a0 <= res.ci_hi;
                break;
            }
            case Estimand::PseudomedianCoverage: {
                const PseudomedianResult pm = pseudomedian_ci(data, test_cfg, cfg.grid_k);
                out.a_hat = auc_fast(data).a_hat;
                out.hit = pm.ci_lo <= theta && theta <= pm.ci_hi;
                break;
            }
        }
        return out;
    };

    std::vector<Replicate> results(cfg.reps);
    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, cfg.reps));
    if (workers == 1) {
        for (std::size_t r = 0; r < cfg.reps; ++r) results[r] = replicate(r);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t r = t; r < cfg.reps; r += workers) results[r] = replicate(r);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    // Accumulate in replication order so the summary is independent of scheduling.
    const double reps = static_cast<double>(cfg.reps);
    SimSummary s;
    s.estimand = cfg.estimand;
    s.reps_done = cfg.reps;
    s.mean_a_hat = neumaier_sum(results, [](const Replicate& r) { return r.a_hat; }) / reps;
    if (cfg.reps > 1) {
        const double mean = s.mean_a_hat;
        const double ss = neumaier_sum(results, [mean](const Replicate& r) {
            return (r.a_hat - mean) * (r.a_hat - mean);
        });
        s.sd_a_hat = std::sqrt(ss / (reps - 1.0));
    }
    if (cfg.estimand == Estimand::AucMeanSd) {
        s.mc_standard_error = s.sd_a_hat / std::sqrt(reps);
    } else {
        const auto hits = std::count_if(results.begin(), results.end(), [](const Replicate& r) { return r.hit; });
        const double p = static_cast<double>(hits) / reps;
        s.rate = p;
        s.mc_standard_error = std::sqrt(p * (1.0 - p) / reps);
        if (cfg.estimand == Estimand::Type1Rate) {
            const auto trad = std::count_if(results.begin(), results.end(),
                                            [](const Replicate& r) { return r.traditional_hit; });
            s.traditional_rate = static_cast<double>(trad) / reps;
        }
    }
    return s;
}

SimSummary coverage_study(const SimConfig& cfg, const TestConfig& test_cfg, unsigned threads) {
    if (cfg.estimand == Estimand::AucMeanSd) {
        throw std::invalid_argument("coverage_study needs a rate estimand");
    }
    return run_simulation(cfg, test_cfg, threads);
}

double gaussian_scale_variance(double sigma1, double sigma2) {
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0)) {
        throw std::invalid_argument("gaussian_scale_variance: sigmas must be positive");
    }
    const double s1 = sigma1 * sigma1;
    const double s2 = sigma2 * sigma2;
    const double r1 = s1 / (s1 + s2);
    const double r2 = s2 / (s1 + s2);
    return (std::asin(r1) + std::asin(r2)) / (2.0 * std::numbers::pi);
}

}  // namespace wmw
