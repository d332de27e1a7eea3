#include "wmw/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wmw/error.hpp"

namespace wmw {

namespace {

void check_sample(std::span<const double> values, char name) {
    if (values.empty()) throw EmptySample(name);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) throw NonFiniteValue(name, i);
    }
}

}  // namespace

TwoSampleData validate(std::span<const double> raw_x, std::span<const double> raw_y) {
    check_sample(raw_x, 'x');
    check_sample(raw_y, 'y');
    return TwoSampleData(Sample({raw_x.begin(), raw_x.end()}),
                         Sample({raw_y.begin(), raw_y.end()}));
}

TwoSampleData TwoSampleData::shifted_y(double theta) const {
    std::vector<double> y(y_.values().begin(), y_.values().end());
    for (double& v : y) v += theta;
    return validate(x_.values(), y);
}

std::vector<double> sorted_copy(std::span<const double> values) {
    std::vector<double> out(values.begin(), values.end());
    std::sort(out.begin(), out.end());
    return out;
}

MidRankTable midranks(const TwoSampleData& data) {
    const std::size_t n1 = data.n1();
    const std::size_t n = n1 + data.n2();

    // Pooled index k < n1 refers to x[k], otherwise y[k - n1].
    auto value = [&](std::size_t k) { return k < n1 ? data.x()[k] : data.y()[k - n1]; };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return value(a) < value(b); });

    MidRankTable table;
    table.combined_ranks_x.resize(n1);
    table.combined_ranks_y.resize(data.n2());
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && value(order[j]) == value(order[i])) ++j;
        // Ranks i+1 .. j averaged.
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            const std::size_t idx = order[k];
            if (idx < n1) {
                table.combined_ranks_x[idx] = rank;
            } else {
                table.combined_ranks_y[idx - n1] = rank;
            }
        }
        table.tie_group_sizes.push_back(j - i);
        i = j;
    }
    return table;
}

}  // namespace wmw
