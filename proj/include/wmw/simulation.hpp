#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wmw/inference.hpp"

namespace wmw {

namespace dist {
struct Normal {
    double mu = 0.0;
    double sigma = 1.0;
};
/// Normal draw rounded to the nearest multiple of step.
struct DiscretizedNormal {
    double mu = 0.0;
    double sigma = 1.0;
    double step = 1.0;
};
struct Uniform {
    double lo = 0.0;
    double hi = 1.0;
};
struct PointMass {
    double value = 0.0;
};
}  // namespace dist

using Generator = std::variant<dist::Normal, dist::DiscretizedNormal, dist::Uniform, dist::PointMass>;

/// Parses "normal:mu,sigma", "discretized-normal:mu,sigma,step",
/// "uniform:lo,hi" or "point-mass:value". Throws std::invalid_argument.
Generator parse_generator(std::string_view text);
std::string to_string(const Generator& g);

/// Center of symmetry of the generator, when it has one.
std::optional<double> symmetry_center(const Generator& g);

enum class Estimand { AucMeanSd, Type1Rate, CiCoverage, PseudomedianCoverage };
std::string_view to_string(Estimand e) noexcept;
Estimand parse_estimand(std::string_view name);

struct SimConfig {
    std::size_t n1 = 50;
    std::size_t n2 = 50;
    std::size_t reps = 1000;
    std::uint64_t seed = 1;
    Generator generator_x = dist::Normal{};
    Generator generator_y = dist::Normal{};
    Estimand estimand = Estimand::AucMeanSd;
    /// Target of pseudomedian coverage; defaults to the difference of the
    /// generators' symmetry centers.
    std::optional<double> true_theta;
    std::size_t grid_k = 512;

    /// Throws std::invalid_argument on reps == 0, empty samples or invalid
    /// generator parameters.
    void check() const;
};

struct SimSummary {
    Estimand estimand = Estimand::AucMeanSd;
    double mean_a_hat = 0.0;
    double sd_a_hat = 0.0;
    std::optional<double> rate;  // rejection rate or coverage
    double mc_standard_error = 0.0;
    std::size_t reps_done = 0;
    /// Rejection rate of the classical z-test that uses the F = G rank
    /// variance (n1 + n2 + 1) / (12 n1 n2); type1-rate only, for comparison.
    std::optional<double> traditional_rate;

    friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// Named presets: "paper-s2", "equal-normals", "tied-normals".
std::optional<SimConfig> preset(std::string_view name);
std::vector<std::string> preset_names();

/// Generator for replication r; independent of how replications are scheduled.
std::mt19937_64 replication_engine(std::uint64_t seed, std::uint64_t r);

/// Box-Muller on 53-bit uniforms from the engine.
class NormalSampler {
public:
    double operator()(std::mt19937_64& eng);

private:
    std::optional<double> spare_;
};

/// Draws n values from g.
std::vector<double> draw(const Generator& g, std::size_t n, std::mt19937_64& eng,
                         NormalSampler& normal);

/// WMW_THREADS when set to a positive integer, else hardware concurrency.
unsigned default_thread_count();

/// Runs every replication of cfg. For estimands other than auc-mean-sd the
/// test settings come from test_cfg. Results do not depend on `threads`.
SimSummary run_simulation(const SimConfig& cfg, const TestConfig& test_cfg = {},
                          unsigned threads = default_thread_count());

/// Same as run_simulation; rejects the auc-mean-sd estimand.
SimSummary coverage_study(const SimConfig& cfg, const TestConfig& test_cfg,
                          unsigned threads = default_thread_count());

/// (asin(r1) + asin(r2)) / (2 pi) with r_i = s_i^2 / (s1^2 + s2^2): the
/// limit of n * Var(A_hat) for N(0, s1^2) vs N(0, s2^2) with n1 = n2 = n.
double gaussian_scale_variance(double sigma1, double sigma2);

}  // namespace wmw
