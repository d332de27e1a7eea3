#pragma once

namespace wmw {

double normal_cdf(double z);
double normal_quantile(double p);

/// Student t CDF for real df > 0, through the regularized incomplete beta.
/// Infinite t maps to 0 or 1.
double t_cdf(double t, double df);

/// Inverse of t_cdf by bracketed root finding (TOMS 748).
double t_quantile(double p, double df);

}  // namespace wmw
