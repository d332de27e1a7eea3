#include "wmw/auc.hpp"

#include <algorithm>
#include <numeric>

#include "wmw/error.hpp"

namespace wmw {

namespace {

void require_variance_sizes(const TwoSampleData& data) {
    if (data.n1() < 2 || data.n2() < 2) {
        throw TooSmall("variance estimation needs n1 >= 2 and n2 >= 2");
    }
}

// Counts of elements of a sorted range strictly below and equal to v.
struct Split {
    std::size_t below;
    std::size_t equal;
};

Split split(const std::vector<double>& sorted, double v) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v);
    const auto hi = std::upper_bound(lo, sorted.end(), v);
    return {static_cast<std::size_t>(lo - sorted.begin()),
            static_cast<std::size_t>(hi - lo)};
}

double centered_variance(const std::vector<double>& values, double center) {
    double ss = 0.0;
    for (double v : values) ss += (v - center) * (v - center);
    return ss / static_cast<double>(values.size() - 1);
}

}  // namespace

AucEstimate auc_bruteforce(const TwoSampleData& data) {
    double u = 0.0;
    bool ties = false;
    for (double xi : data.x().values()) {
        for (double yj : data.y().values()) {
            u += midrank_kernel(xi, yj);
            ties = ties || xi == yj;
        }
    }
    return {u / static_cast<double>(data.m()), ties, data.m()};
}

AucEstimate auc_fast(const TwoSampleData& data) {
    const MidRankTable ranks = midranks(data);
    double rank_sum = 0.0;
    for (double r : ranks.combined_ranks_y) rank_sum += r;
    const double n2 = static_cast<double>(data.n2());
    const double u = rank_sum - n2 * (n2 + 1.0) / 2.0;

    // A cross tie exists iff some tie group mixes x and y values.
    const auto xs = sorted_copy(data.x().values());
    bool ties = false;
    for (double yj : data.y().values()) {
        if (std::binary_search(xs.begin(), xs.end(), yj)) {
            ties = true;
            break;
        }
    }
    return {u / static_cast<double>(data.m()), ties, data.m()};
}

Placements placements(const TwoSampleData& data) {
    const auto xs = sorted_copy(data.x().values());
    const auto ys = sorted_copy(data.y().values());
    const double n1 = static_cast<double>(data.n1());
    const double n2 = static_cast<double>(data.n2());

    Placements p;
    p.g_at_x.reserve(data.n1());
    for (double xi : data.x().values()) {
        const auto at_or_below = std::upper_bound(ys.begin(), ys.end(), xi) - ys.begin();
        p.g_at_x.push_back(static_cast<double>(at_or_below) / n2);
    }
    p.f_at_y.reserve(data.n2());
    for (double yj : data.y().values()) {
        const auto at_or_below = std::upper_bound(xs.begin(), xs.end(), yj) - xs.begin();
        p.f_at_y.push_back(static_cast<double>(at_or_below) / n1);
    }
    return p;
}

KernelSummaries kernel_summaries(const TwoSampleData& data) {
    require_variance_sizes(data);
    const auto xs = sorted_copy(data.x().values());
    const auto ys = sorted_copy(data.y().values());
    const std::size_t n1 = data.n1();
    const std::size_t n2 = data.n2();

    KernelSummaries s;
    s.row_means.reserve(n1);
    s.col_means.reserve(n2);

    // Row i: h(x_i, .) is 1 for y above x_i and 1/2 for y equal to x_i.
    std::uint64_t less_pairs = 0;  // pairs with x < y
    std::uint64_t tied_pairs = 0;
    for (double xi : data.x().values()) {
        const Split sp = split(ys, xi);
        const std::size_t above = n2 - sp.below - sp.equal;
        less_pairs += above;
        tied_pairs += sp.equal;
        s.row_means.push_back((static_cast<double>(above) + 0.5 * static_cast<double>(sp.equal)) /
                              static_cast<double>(n2));
    }
    for (double yj : data.y().values()) {
        const Split sp = split(xs, yj);
        s.col_means.push_back((static_cast<double>(sp.below) + 0.5 * static_cast<double>(sp.equal)) /
                              static_cast<double>(n1));
    }

    const double m = static_cast<double>(data.m());
    const double u = static_cast<double>(less_pairs) + 0.5 * static_cast<double>(tied_pairs);
    s.a_hat = u / m;

    const double a = s.a_hat;
    const double greater_pairs = m - static_cast<double>(less_pairs) - static_cast<double>(tied_pairs);
    const double ss = static_cast<double>(less_pairs) * (1.0 - a) * (1.0 - a) +
                      static_cast<double>(tied_pairs) * (0.5 - a) * (0.5 - a) +
                      greater_pairs * a * a;
    s.v_hat = ss / (m - 1.0);
    s.zeta1_hat_sq = centered_variance(s.row_means, a);
    s.zeta2_hat_sq = centered_variance(s.col_means, a);
    return s;
}

KernelSummaries kernel_summaries_direct(const TwoSampleData& data, std::uint64_t max_cells) {
    require_variance_sizes(data);
    if (data.m() > max_cells) throw TooLarge("kernel matrix exceeds the cell limit");
    const std::size_t n1 = data.n1();
    const std::size_t n2 = data.n2();

    std::vector<double> h(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) h[i * n2 + j] = midrank_kernel(data.x()[i], data.y()[j]);
    }

    KernelSummaries s;
    s.row_means.assign(n1, 0.0);
    s.col_means.assign(n2, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            s.row_means[i] += h[i * n2 + j];
            s.col_means[j] += h[i * n2 + j];
            total += h[i * n2 + j];
        }
    }
    for (double& r : s.row_means) r /= static_cast<double>(n2);
    for (double& c : s.col_means) c /= static_cast<double>(n1);
    s.a_hat = total / static_cast<double>(data.m());

    double ss = 0.0;
    for (double hij : h) ss += (hij - s.a_hat) * (hij - s.a_hat);
    s.v_hat = ss / static_cast<double>(data.m() - 1);
    s.zeta1_hat_sq = centered_variance(s.row_means, s.a_hat);
    s.zeta2_hat_sq = centered_variance(s.col_means, s.a_hat);
    return s;
}

}  // namespace wmw
