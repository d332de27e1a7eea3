#include "wmw/enumeration.hpp"

#include <cmath>
#include <stdexcept>

#include "wmw/auc.hpp"
#include "wmw/error.hpp"
#include "wmw/variance_eu.hpp"

namespace wmw {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("distribution needs at least one atom");
    double total = 0.0;
    for (const Atom& a : atoms_) {
        if (!std::isfinite(a.value) || !(a.prob > 0.0)) {
            throw std::invalid_argument("atoms need finite values and positive probabilities");
        }
        total += a.prob;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("probabilities must sum to 1");
}

PopulationComponents population_components(const DiscreteDistribution& fx,
                                           const DiscreteDistribution& gy) {
    PopulationComponents pc;
    for (const Atom& a : fx.atoms()) {
        for (const Atom& b : gy.atoms()) pc.auc += a.prob * b.prob * midrank_kernel(a.value, b.value);
    }

    std::vector<double> phi1;
    std::vector<double> phi2;
    for (const Atom& a : fx.atoms()) {
        double e = 0.0;
        for (const Atom& b : gy.atoms()) e += b.prob * midrank_kernel(a.value, b.value);
        phi1.push_back(e - pc.auc);
    }
    for (const Atom& b : gy.atoms()) {
        double e = 0.0;
        for (const Atom& a : fx.atoms()) e += a.prob * midrank_kernel(a.value, b.value);
        phi2.push_back(e - pc.auc);
    }

    for (std::size_t i = 0; i < fx.size(); ++i) pc.zeta1_sq += fx.atoms()[i].prob * phi1[i] * phi1[i];
    for (std::size_t j = 0; j < gy.size(); ++j) pc.zeta2_sq += gy.atoms()[j].prob * phi2[j] * phi2[j];
    for (std::size_t i = 0; i < fx.size(); ++i) {
        for (std::size_t j = 0; j < gy.size(); ++j) {
            const double w = fx.atoms()[i].prob * gy.atoms()[j].prob;
            const double h = midrank_kernel(fx.atoms()[i].value, gy.atoms()[j].value);
            const double psi = h - pc.auc - phi1[i] - phi2[j];
            pc.v += w * (h - pc.auc) * (h - pc.auc);
            pc.var_psi += w * psi * psi;
        }
    }
    return pc;
}

namespace {

// Odometer over all ordered draws of `n` atoms from `dist`.
class Draws {
public:
    Draws(const DiscreteDistribution& dist, std::size_t n) : dist_(dist), idx_(n, 0) {}

    bool next() {
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            if (++idx_[k] < dist_.size()) return true;
            idx_[k] = 0;
        }
        return false;
    }
    void fill(std::vector<double>& values, double& weight) const {
        weight = 1.0;
        for (std::size_t k = 0; k < idx_.size(); ++k) {
            values[k] = dist_.atoms()[idx_[k]].value;
            weight *= dist_.atoms()[idx_[k]].prob;
        }
    }

private:
    const DiscreteDistribution& dist_;
    std::vector<std::size_t> idx_;
};

}  // namespace

ExactMoments exact_variance_enumerator(const DiscreteDistribution& fx,
                                       const DiscreteDistribution& gy, std::size_t n1,
                                       std::size_t n2) {
    if (n1 < 2 || n2 < 2) throw TooSmall("enumeration needs n1 >= 2 and n2 >= 2");
    double outcomes = std::pow(static_cast<double>(fx.size()), static_cast<double>(n1)) *
                      std::pow(static_cast<double>(gy.size()), static_cast<double>(n2));
    if (outcomes > static_cast<double>(kMaxEnumerationOutcomes)) {
        throw TooLarge("enumeration exceeds the outcome limit");
    }

    ExactMoments em;
    double second_moment = 0.0;
    std::vector<double> xs(n1);
    std::vector<double> ys(n2);
    Draws dx(fx, n1);
    do {
        double wx = 0.0;
        dx.fill(xs, wx);
        Draws dy(gy, n2);
        do {
            double wy = 0.0;
            dy.fill(ys, wy);
            const double w = wx * wy;
            const TwoSampleData data = validate(xs, ys);
            const KernelSummaries s = kernel_summaries_direct(data);
            const EuVariance ev = eu_variance(s, data);
            em.mean_a_hat += w * s.a_hat;
            second_moment += w * s.a_hat * s.a_hat;
            em.mean_var_tilde += w * ev.var_tilde;
            em.mean_zeta1_hat_sq += w * s.zeta1_hat_sq;
            em.mean_zeta2_hat_sq += w * s.zeta2_hat_sq;
            em.mean_v_hat += w * s.v_hat;
            ++em.outcomes;
        } while (dy.next());
    } while (dx.next());

    em.var_a_hat = second_moment - em.mean_a_hat * em.mean_a_hat;
    return em;
}

}  // namespace wmw
