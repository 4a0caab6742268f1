#include "minersel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minersel::stats {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) throw std::invalid_argument("sample '" + label_ + "' is empty");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("sample '" + label_ + "' contains a non-finite value");
}

std::string_view method_name(Method method) {
    return method == Method::exact ? "exact" : "normal-approximation";
}

std::vector<double> midranks(std::span<const double> pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        // positions i..j (0-based) share the mean of ranks i+1..j+1
        const double rank = 0.5 * static_cast<double>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> exact_u_distribution(std::size_t n, std::size_t m) {
    // table[i][j] holds the U distribution for i x-values and j y-values.
    // The largest pooled rank is either an x (beating all j y's) or a y.
    std::vector<std::vector<std::vector<double>>> table(
        n + 1, std::vector<std::vector<double>>(m + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= m; ++j) {
            auto& dist = table[i][j];
            dist.assign(i * j + 1, 0.0);
            if (i == 0 || j == 0) {
                dist[0] = 1.0;
                continue;
            }
            const auto& x_top = table[i - 1][j];
            const auto& y_top = table[i][j - 1];
            for (std::size_t u = 0; u < x_top.size(); ++u) dist[u + j] += x_top[u];
            for (std::size_t u = 0; u < y_top.size(); ++u) dist[u] += y_top[u];
        }
    return table[n][m];
}

TestReport rank_sum_test(const Sample& x, const Sample& y) {
    TestReport report;
    report.n = x.size();
    report.m = y.size();
    report.a12 = vargha_delaney_a12(x, y);

    std::vector<double> pooled = x.values();
    pooled.insert(pooled.end(), y.values().begin(), y.values().end());
    const auto ranks = midranks(pooled);
    const double n = static_cast<double>(report.n);
    const double rank_sum_x = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(report.n), 0.0);
    report.u_statistic = rank_sum_x - n * (n + 1.0) / 2.0;

    // tie groups
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    bool has_ties = false;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i);
        if (j - i > 1) has_ties = true;
        tie_term += t * t * t - t;
        i = j;
    }
    if (sorted.front() == sorted.back()) {
        report.method = Method::normal_approximation;
        report.p_value = 1.0;
        report.degenerate = true;
        return report;
    }

    if (!has_ties && report.n + report.m <= kExactLimit) {
        const auto dist = exact_u_distribution(report.n, report.m);
        const auto u = static_cast<std::size_t>(std::llround(report.u_statistic));
        double le = 0.0, ge = 0.0, total = 0.0;
        for (std::size_t v = 0; v < dist.size(); ++v) {
            total += dist[v];
            if (v <= u) le += dist[v];
            if (v >= u) ge += dist[v];
        }
        report.method = Method::exact;
        report.p_value = std::min(1.0, 2.0 * std::min(le, ge) / total);
        return report;
    }

    report.method = Method::normal_approximation;
    report.p_value = normal_approximation_p(report.u_statistic, report.n, report.m, tie_term);
    return report;
}

double normal_approximation_p(double u, std::size_t n_x, std::size_t n_y, double tie_term) {
    const double n = static_cast<double>(n_x);
    const double m = static_cast<double>(n_y);
    const double big_n = n + m;
    const double mean = n * m / 2.0;
    const double variance = n * m / 12.0 * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
    if (!(variance > 0.0)) return 1.0;
    const double z = std::max(0.0, std::abs(u - mean) - 0.5) / std::sqrt(variance);
    return std::clamp(std::erfc(z / std::sqrt(2.0)), 0.0, 1.0);
}

double vargha_delaney_a12(const Sample& x, const Sample& y) {
    double wins = 0.0;
    for (double a : x.values())
        for (double b : y.values()) {
            if (a > b) wins += 1.0;
            else if (a == b) wins += 0.5;
        }
    return wins / (static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

} // namespace minersel::stats
