#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wmw {

struct Atom {
    double value;
    double prob;
};

/// Finite discrete law; probabilities must be positive and sum to 1.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<Atom> atoms);
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
};

/// Hoeffding decomposition of the mid-rank kernel under (F, G).
struct PopulationComponents {
    double auc = 0.0;       // E h(X, Y)
    double zeta1_sq = 0.0;  // Var phi1(X)
    double zeta2_sq = 0.0;  // Var phi2(Y)
    double v = 0.0;         // Var h(X, Y)
    double var_psi = 0.0;   // Var of the degenerate remainder
};

PopulationComponents population_components(const DiscreteDistribution& fx,
                                           const DiscreteDistribution& gy);

/// Exact moments of the sample quantities over every ordered pair of
/// samples of sizes n1 and n2.
struct ExactMoments {
    double mean_a_hat = 0.0;
    double var_a_hat = 0.0;         // true Var(A_hat)
    double mean_var_tilde = 0.0;    // E of the kernel-summary variance estimator
    double mean_zeta1_hat_sq = 0.0;
    double mean_zeta2_hat_sq = 0.0;
    double mean_v_hat = 0.0;
    std::uint64_t outcomes = 0;
};

inline constexpr std::uint64_t kMaxEnumerationOutcomes = 10'000'000;

/// Throws TooLarge when |supp F|^n1 * |supp G|^n2 exceeds
/// kMaxEnumerationOutcomes, TooSmall unless n1, n2 >= 2.
ExactMoments exact_variance_enumerator(const DiscreteDistribution& fx,
                                       const DiscreteDistribution& gy, std::size_t n1,
                                       std::size_t n2);

}  // namespace wmw
