#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "minersel/sorting.hpp"
#include "oracles.hpp"

using namespace minersel;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("fast non-dominated sort on small cases") {
    // energy minimized, reputation maximized: A dominates B dominates C
    const std::vector<ObjectiveVector> chain{{3, 1}, {1, 3}, {2, 2}};
    const auto fronts = fast_nondominated_sort(chain);
    REQUIRE(fronts.size() == 3);
    CHECK(fronts[0] == std::vector<std::size_t>{1});
    CHECK(fronts[1] == std::vector<std::size_t>{2});
    CHECK(fronts[2] == std::vector<std::size_t>{0});

    const std::vector<ObjectiveVector> tradeoff{{1, 1}, {2, 2}};
    CHECK(fast_nondominated_sort(tradeoff).size() == 1);
    CHECK(fast_nondominated_sort(std::vector<ObjectiveVector>{}).empty());
}

TEST_CASE("fast non-dominated sort matches layered peeling") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.below(100);
        const int grid = trial % 2 == 0 ? 0 : 6;
        std::vector<ObjectiveVector> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(oracle::random_vector(rng, 10.0, grid));
        const auto fronts = fast_nondominated_sort(pts);
        REQUIRE(fronts == oracle::peel(pts));

        // partition + layering contract
        std::vector<std::size_t> seen;
        for (const auto& f : fronts) seen.insert(seen.end(), f.begin(), f.end());
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(seen[i] == i);
        for (std::size_t k = 1; k < fronts.size(); ++k)
            for (std::size_t i : fronts[k]) {
                bool covered = false;
                for (std::size_t j : fronts[k - 1]) covered = covered || dominates(pts[j], pts[i]);
                CHECK(covered);
            }
    }
}

TEST_CASE("crowding distance") {
    const std::vector<ObjectiveVector> one{{1, 1}};
    CHECK(crowding_distance(one) == std::vector<double>{inf});
    const std::vector<ObjectiveVector> two{{1, 1}, {2, 2}};
    CHECK(crowding_distance(two) == std::vector<double>{inf, inf});

    const std::vector<ObjectiveVector> line{{0, 2}, {1, 1}, {2, 0}};
    const auto d = crowding_distance(line);
    CHECK(d[0] == inf);
    CHECK(d[2] == inf);
    // (2 - 0) / 2 along each objective
    CHECK(d[1] == doctest::Approx(2.0));

    SUBCASE("flat objective contributes nothing") {
        const std::vector<ObjectiveVector> flat{{0, 5}, {1, 5}, {3, 5}, {4, 5}};
        const auto c = crowding_distance(flat);
        CHECK(c[1] == doctest::Approx(0.75));
        CHECK(c[2] == doctest::Approx(0.75));
    }
    SUBCASE("copies of a point get zero") {
        const std::vector<ObjectiveVector> dup{{0, 0}, {1, 1}, {1, 1}, {2, 2}, {1, 1}};
        const auto c = crowding_distance(dup);
        CHECK(c[0] == inf);
        CHECK(c[3] == inf);
        CHECK(c[1] == doctest::Approx(2.0));
        CHECK(c[2] == 0.0);
        CHECK(c[4] == 0.0);
    }
}

TEST_CASE("crowding distance agrees with the textbook loop and ignores input order") {
    Rng rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng.below(30);
        std::vector<ObjectiveVector> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(oracle::random_vector(rng));
        const auto d = crowding_distance(pts);
        const auto expected = oracle::crowding(pts);
        for (std::size_t i = 0; i < n; ++i) {
            if (std::isinf(expected[i])) CHECK(std::isinf(d[i]));
            else CHECK(d[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        }

        // permutation invariance of the multiset, grid points included
        std::vector<ObjectiveVector> grid;
        for (std::size_t i = 0; i < n; ++i) grid.push_back(oracle::random_vector(rng, 0, 4));
        auto before = crowding_distance(grid);
        auto shuffled = grid;
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        auto after = crowding_distance(shuffled);
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        CHECK(before == after);
    }
}
