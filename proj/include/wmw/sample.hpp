#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wmw {

class TwoSampleData;
TwoSampleData validate(std::span<const double> raw_x, std::span<const double> raw_y);

/// Finite, non-empty measurements in input order.
class Sample {
public:
    Sample() = default;
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    friend bool operator==(const Sample&, const Sample&) = default;

private:
    friend TwoSampleData validate(std::span<const double>, std::span<const double>);
    explicit Sample(std::vector<double> v) : values_(std::move(v)) {}
    std::vector<double> values_;
};

/// Validated pair of samples. Only obtainable through validate().
class TwoSampleData {
public:
    const Sample& x() const noexcept { return x_; }
    const Sample& y() const noexcept { return y_; }
    std::size_t n1() const noexcept { return x_.size(); }
    std::size_t n2() const noexcept { return y_.size(); }
    std::uint64_t m() const noexcept {
        return static_cast<std::uint64_t>(n1()) * static_cast<std::uint64_t>(n2());
    }
    double lambda_n() const noexcept {
        return static_cast<double>(n1()) / static_cast<double>(n1() + n2());
    }

    /// Same data with the roles of x and y exchanged.
    TwoSampleData swapped() const { return TwoSampleData(y_, x_); }
    /// y shifted by theta; throws NonFiniteValue if the shift overflows.
    TwoSampleData shifted_y(double theta) const;

    friend bool operator==(const TwoSampleData&, const TwoSampleData&) = default;

private:
    friend TwoSampleData validate(std::span<const double>, std::span<const double>);
    TwoSampleData(Sample x, Sample y) : x_(std::move(x)), y_(std::move(y)) {}
    Sample x_;
    Sample y_;
};

/// Throws EmptySample or NonFiniteValue. Size requirements of the variance
/// estimators are enforced where those estimators run.
TwoSampleData validate(std::span<const double> raw_x, std::span<const double> raw_y);

struct MidRankTable {
    std::vector<double> combined_ranks_x;
    std::vector<double> combined_ranks_y;
    std::vector<std::size_t> tie_group_sizes;
};

/// Mid-ranks of x and y inside the pooled ascending sort; ties share the average
/// of the integer ranks they occupy.
MidRankTable midranks(const TwoSampleData& data);

/// Ascending copy of a sample.
std::vector<double> sorted_copy(std::span<const double> values);

}  // namespace wmw
