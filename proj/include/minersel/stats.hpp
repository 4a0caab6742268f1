#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minersel::stats {

/// Finite observations with a label.
class Sample {
public:
    /// Throws std::invalid_argument on an empty list or a non-finite value.
    Sample(std::vector<double> values, std::string label = {});

    const std::vector<double>& values() const { return values_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<double> values_;
    std::string label_;
};

enum class Method { exact, normal_approximation };

std::string_view method_name(Method method);

struct TestReport {
    double u_statistic = 0.0;
    double p_value = 1.0;
    Method method = Method::exact;
    double a12 = 0.5;
    std::size_t n = 0;
    std::size_t m = 0;
    /// Every pooled observation tied; p is reported as 1.
    bool degenerate = false;
};

/// Largest pooled size for which tie-free samples get an exact p-value.
inline constexpr std::size_t kExactLimit = 20;

/// Midranks of the pooled observations (ties share the average rank).
std::vector<double> midranks(std::span<const double> pooled);

/// Number of ways to pick `n` of the ranks 1..n+m such that the
/// Mann-Whitney U of the picked group equals u, for u = 0..n*m.
std::vector<double> exact_u_distribution(std::size_t n, std::size_t m);

/// Two-tailed normal-approximation p-value for U with continuity
/// correction. `tie_term` is the sum of t^3 - t over tie groups. Returns 1
/// when the variance vanishes.
double normal_approximation_p(double u, std::size_t n, std::size_t m, double tie_term = 0.0);

/// Two-tailed Wilcoxon rank-sum (Mann-Whitney) test. U is computed from x's
/// rank sum. Exact when n + m <= kExactLimit and there are no ties,
/// otherwise normal approximation with tie-corrected variance and
/// continuity correction.
TestReport rank_sum_test(const Sample& x, const Sample& y);

/// Vargha-Delaney A12: probability that a draw from x exceeds one from y,
/// counting ties as one half.
double vargha_delaney_a12(const Sample& x, const Sample& y);

} // namespace minersel::stats
