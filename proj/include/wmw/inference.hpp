#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmw/sample.hpp"

namespace wmw {

enum class Method { Auto, Eu, Bc, PluginZ };
enum class Alternative { TwoSided, Less, Greater };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Alternative a) noexcept;
/// Throws std::invalid_argument on unknown names.
Method parse_method(std::string_view name);
Alternative parse_alternative(std::string_view name);

/// Test of H0: AUC = a0, where AUC = P(X < Y) + P(X = Y)/2.
struct TestConfig {
    double a0 = 0.5;
    double alpha = 0.05;
    Method method = Method::Auto;
    Alternative alternative = Alternative::TwoSided;

    /// Throws std::invalid_argument when a0 is outside [0,1] or alpha outside (0,1).
    void check() const;
};

struct TestResult {
    double a_hat = 0.0;
    double se = 0.0;
    std::optional<double> df;  // nullopt: standard normal reference
    double statistic = 0.0;
    double p_value = 1.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    Method method = Method::Eu;
    std::vector<std::string> warnings;
};

/// Two-sided, or one-tailed in the direction of the alternative. A null df
/// selects the normal reference distribution.
double pvalue(double statistic, std::optional<double> df, Alternative alternative);

/// Dispatches on cfg.method (Auto means EU). Throws TiesPresent for BC on
/// tied data and TooSmall when n1 or n2 is below 2.
TestResult wmw_test(const TwoSampleData& data, const TestConfig& cfg = {});

/// Two-sided p-value with the bias-corrected (continuous) method.
double wmw_pvalue(const TwoSampleData& data, double a0 = 0.5);

/// Two-sided p-value with the exact-unbiased (tie-robust) method.
double wmw_pvalue_ties(const TwoSampleData& data, double a0 = 0.5);

}  // namespace wmw
