#include "wmw/variance_bc.hpp"

#include "wmw/auc.hpp"
#include "wmw/error.hpp"

namespace wmw {

BcComponents bc_components(const TwoSampleData& data, double a0) {
    if (data.n1() < 2 || data.n2() < 2) {
        throw TooSmall("BC variance needs n1 >= 2 and n2 >= 2");
    }
    if (auc_fast(data).has_cross_ties) throw TiesPresent();

    const Placements p = placements(data);
    const double n1 = static_cast<double>(data.n1());
    const double n2 = static_cast<double>(data.n2());

    BcComponents c;
    for (double g : p.g_at_x) {
        c.zeta1_hat_sq += (g - (1.0 - a0)) * (g - (1.0 - a0));
        c.omega1 += g * (1.0 - g);
    }
    for (double f : p.f_at_y) {
        c.zeta2_hat_sq += (f - a0) * (f - a0);
        c.omega2 += f * (1.0 - f);
    }
    c.zeta1_hat_sq /= n1 - 1.0;
    c.zeta2_hat_sq /= n2 - 1.0;
    c.omega1 /= n1;
    c.omega2 /= n2;
    return c;
}

BcVariance bc_variance(const TwoSampleData& data, double a0) {
    const BcComponents c = bc_components(data, a0);
    const double n1 = static_cast<double>(data.n1());
    const double n2 = static_cast<double>(data.n2());
    const double lambda = data.lambda_n();

    BcVariance v;
    v.omega1 = c.omega1;
    v.omega2 = c.omega2;
    v.zeta1_star_sq = c.zeta1_hat_sq + c.omega1 / n2;
    v.zeta2_star_sq = c.zeta2_hat_sq + c.omega2 / n1;

    const double t1 = v.zeta1_star_sq / lambda;
    const double t2 = v.zeta2_star_sq / (1.0 - lambda);
    v.sigma_adj_sq = t1 + t2;

    const double denom = t1 * t1 / (n1 - 1.0) + t2 * t2 / (n2 - 1.0);
    if (v.sigma_adj_sq > 0.0 && denom > 0.0) {
        v.df = v.sigma_adj_sq * v.sigma_adj_sq / denom;
    } else {
        v.degenerate = true;
        v.df = n1 + n2 - 2.0;
    }

    const double factor = 1.0 - 1.0 / n1 - 1.0 / n2;
    v.correction_applied = factor > 0.0;
    v.sigma_final_sq = v.correction_applied ? factor * v.sigma_adj_sq : v.sigma_adj_sq;
    return v;
}

}  // namespace wmw
