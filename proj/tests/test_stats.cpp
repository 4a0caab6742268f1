#include <doctest.h>

#include <cmath>

#include "minersel/stats.hpp"
#include "oracles.hpp"

using namespace minersel;
using namespace minersel::stats;

namespace {

std::vector<double> distinct_draws(Rng& rng, std::size_t n, std::vector<double>& used) {
    std::vector<double> out;
    while (out.size() < n) {
        const double v = rng.uniform01();
        if (std::find(used.begin(), used.end(), v) != used.end()) continue;
        used.push_back(v);
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("sample validation") {
    CHECK_THROWS(Sample({}, "empty"));
    CHECK_THROWS(Sample({1.0, NAN}, "nan"));
    CHECK_THROWS(Sample({INFINITY}, "inf"));
    CHECK(Sample({1.0}, "ok").size() == 1);
}

TEST_CASE("midranks") {
    const std::vector<double> v{10, 20, 20, 5, 20};
    CHECK(midranks(v) == std::vector<double>{2, 4, 4, 1, 4});
}

TEST_CASE("exact U distribution") {
    const auto d = exact_u_distribution(3, 3);
    CHECK(d.size() == 10);
    double total = 0;
    for (double c : d) total += c;
    CHECK(total == 20.0);
    CHECK(d[0] == 1.0);
    CHECK(d[9] == 1.0);
    CHECK(d[4] == d[5]);
}

TEST_CASE("rank-sum fixtures") {
    SUBCASE("identical constant samples") {
        const auto r = rank_sum_test(Sample({5, 5, 5}), Sample({5, 5, 5}));
        CHECK(r.p_value == 1.0);
        CHECK(r.degenerate);
        CHECK(r.a12 == 0.5);
    }
    SUBCASE("complete separation of three versus three") {
        const auto r = rank_sum_test(Sample({1, 2, 3}), Sample({4, 5, 6}));
        CHECK(r.u_statistic == 0.0);
        CHECK(r.method == Method::exact);
        // 2 of the C(6,3) = 20 rank assignments are this extreme
        CHECK(r.p_value == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(r.a12 == 0.0);
        CHECK(oracle::enumerated_p({1, 2, 3}, {4, 5, 6}) == r.p_value);
    }
    SUBCASE("disjoint supports of thirty") {
        Rng rng(3);
        std::vector<double> x, y;
        for (int i = 0; i < 30; ++i) {
            x.push_back(rng.uniform01() * 0.1);
            y.push_back(1.0 + rng.uniform01() * 0.1);
        }
        const auto r = rank_sum_test(Sample(x), Sample(y));
        CHECK(r.method == Method::normal_approximation);
        CHECK(r.u_statistic == 0.0);
        CHECK(r.p_value < 0.001);
        // z = (450 - 0.5) / sqrt(30*30*61/12) for U = 0
        CHECK(r.p_value == doctest::Approx(std::erfc((450.0 - 0.5) / std::sqrt(900.0 * 61 / 12) / std::sqrt(2.0))));
    }
}

TEST_CASE("exact p matches enumeration") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.below(11);
        const std::size_t m = 1 + rng.below(12 - n);
        std::vector<double> used;
        const auto x = distinct_draws(rng, n, used);
        const auto y = distinct_draws(rng, m, used);
        const auto r = rank_sum_test(Sample(x), Sample(y));
        REQUIRE(r.method == Method::exact);
        CHECK(r.p_value == oracle::enumerated_p(x, y));
    }
}

TEST_CASE("normal approximation tracks the exact distribution at n = m = 10") {
    const auto dist = exact_u_distribution(10, 10);
    double total = 0;
    for (double c : dist) total += c;
    double worst = 0.0;
    for (std::size_t u = 0; u < dist.size(); ++u) {
        double le = 0, ge = 0;
        for (std::size_t v = 0; v < dist.size(); ++v) {
            if (v <= u) le += dist[v];
            if (v >= u) ge += dist[v];
        }
        const double exact = std::min(1.0, 2 * std::min(le, ge) / total);
        worst = std::max(worst, std::abs(exact - normal_approximation_p(double(u), 10, 10)));
    }
    CHECK(worst < 0.02);
}

TEST_CASE("ties switch to the tie-corrected approximation") {
    const auto r = rank_sum_test(Sample({1, 2, 2, 3}), Sample({2, 4, 5}));
    CHECK(r.method == Method::normal_approximation);
    CHECK_FALSE(r.degenerate);
    CHECK(r.p_value > 0.0);
    CHECK(r.p_value <= 1.0);
    // midranks 1, 3, 3, 5 | 3, 6, 7 -> R_x = 12, U = 2
    CHECK(r.u_statistic == 2.0);
}

TEST_CASE("A12") {
    CHECK(vargha_delaney_a12(Sample({5, 6}), Sample({1, 2, 3})) == 1.0);
    CHECK(vargha_delaney_a12(Sample({1, 4, 9}), Sample({1, 4, 9})) == 0.5);
    CHECK(vargha_delaney_a12(Sample({1, 2}), Sample({1, 2})) == 0.5);
}

TEST_CASE("rank-based invariances") {
    Rng rng(64);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.below(25), m = 1 + rng.below(25);
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) x.push_back(std::floor(rng.uniform01() * 20));
        for (std::size_t i = 0; i < m; ++i) y.push_back(std::floor(rng.uniform01() * 20));
        const auto base = rank_sum_test(Sample(x), Sample(y));
        const double a12_rev = vargha_delaney_a12(Sample(y), Sample(x));
        CHECK(base.a12 + a12_rev == doctest::Approx(1.0));
        CHECK(base.p_value >= 0.0);
        CHECK(base.p_value <= 1.0);

        auto shift = [](std::vector<double> v) { for (auto& e : v) e += 1000.0; return v; };
        auto expo = [](std::vector<double> v) { for (auto& e : v) e = std::exp(e / 4.0); return v; };
        const auto shifted = rank_sum_test(Sample(shift(x)), Sample(shift(y)));
        const auto warped = rank_sum_test(Sample(expo(x)), Sample(expo(y)));
        CHECK(shifted.p_value == base.p_value);
        CHECK(shifted.a12 == base.a12);
        CHECK(warped.p_value == base.p_value);
        CHECK(warped.a12 == base.a12);
    }
}
