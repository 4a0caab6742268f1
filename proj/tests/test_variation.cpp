#include <doctest.h>

#include <cmath>

#include "minersel/variation.hpp"

using namespace minersel;

TEST_CASE("one point crossover") {
    Rng rng(4);
    const auto p = SelectionMask::from_string("1011001110");
    auto [c1, c2] = one_point_crossover(p, p, rng);
    CHECK(c1 == p);
    CHECK(c2 == p);

    const auto ones = SelectionMask::full(10);
    const SelectionMask zeros(10);
    for (int trial = 0; trial < 500; ++trial) {
        auto [a, b] = one_point_crossover(ones, zeros, rng);
        // a = 1^cut 0^(n-cut), b is its complement, cut in 1..n-1
        const std::size_t cut = a.count();
        CHECK(cut >= 1);
        CHECK(cut <= 9);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(a.test(i) == (i < cut));
            CHECK(b.test(i) == !a.test(i));
        }
    }
    const auto single = SelectionMask::from_string("1");
    auto [s1, s2] = one_point_crossover(single, SelectionMask(1), rng);
    CHECK(s1 == single);
    CHECK(s2 == SelectionMask(1));
}

TEST_CASE("bit flip mutation") {
    Rng rng(6);
    const auto m = SelectionMask::from_string("0110100");
    CHECK(bitflip_mutation(m, 0.0, rng) == m);
    CHECK(bitflip_mutation(m, 1.0, rng) == SelectionMask::from_string("1001011"));
    // complement of the full mask is empty and gets repaired to one bit
    CHECK(bitflip_mutation(SelectionMask::full(7), 1.0, rng).count() == 1);
    CHECK_THROWS(bitflip_mutation(m, 1.5, rng));
}

TEST_CASE("flip frequency at rate 1/n") {
    Rng rng(31337);
    const std::size_t n = 160;
    const double rate = 1.0 / static_cast<double>(n);
    const std::size_t trials = 100000;
    // start from the full mask so repair never fires
    const auto full = SelectionMask::full(n);
    std::vector<std::size_t> flips(n, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto out = bitflip_mutation(full, rate, rng);
        for (std::size_t i = 0; i < n; ++i)
            if (!out.test(i)) ++flips[i];
    }
    const double se_bit = std::sqrt(rate * (1 - rate) / static_cast<double>(trials));
    std::size_t total = 0;
    std::size_t outside = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += flips[i];
        const double freq = static_cast<double>(flips[i]) / static_cast<double>(trials);
        if (std::abs(freq - rate) > 3 * se_bit) ++outside;
    }
    const double pooled = static_cast<double>(total) / static_cast<double>(trials * n);
    CHECK(std::abs(pooled - rate) < 3 * se_bit / std::sqrt(static_cast<double>(n)));
    // 3-sigma band: about 0.27% of bits expected outside
    CHECK(outside <= 4);
}

TEST_CASE("tournament") {
    Rng rng(12);
    const std::vector<int> score{5, 1, 9, 3};
    auto better = [&](std::size_t a, std::size_t b) { return score[a] > score[b]; };
    std::vector<std::size_t> wins(4, 0);
    for (int t = 0; t < 20000; ++t) ++wins[binary_tournament(4, better, rng)];
    // P(win) = P(best of two draws with replacement): 9 -> 7/16, 5 -> 5/16, 3 -> 3/16, 1 -> 1/16
    CHECK(static_cast<double>(wins[2]) / 20000 == doctest::Approx(7.0 / 16).epsilon(0.05));
    CHECK(static_cast<double>(wins[1]) / 20000 == doctest::Approx(1.0 / 16).epsilon(0.1));

    // ties keep the first draw
    Rng a(99), b(99);
    auto never = [](std::size_t, std::size_t) { return false; };
    for (int t = 0; t < 100; ++t) {
        const auto first = b.below(10);
        b.below(10);
        CHECK(binary_tournament(10, never, a) == first);
    }
}

TEST_CASE("random masks are never empty") {
    Rng rng(0);
    for (int t = 0; t < 2000; ++t) CHECK(random_mask(3, rng).any());
}
