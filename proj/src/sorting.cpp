#include "minersel/sorting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace minersel {

Fronts fast_nondominated_sort(std::span<const ObjectiveVector> points) {
    const std::size_t n = points.size();
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    Fronts fronts;
    std::vector<std::size_t> current;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominated_by_me[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(points[j], points[i])) {
                dominated_by_me[j].push_back(i);
                ++domination_count[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated_by_me[i])
                if (--domination_count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

namespace {

// Crowding over points with pairwise distinct objective vectors.
std::vector<double> distinct_crowding(const std::vector<ObjectiveVector>& front) {
    const std::size_t n = front.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> distance(n, 0.0);
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), inf);
        return distance;
    }

    std::vector<std::size_t> order(n);
    auto accumulate = [&](auto key, auto tiebreak) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // break ties on the other objective so the result does not depend on input order
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const double ka = key(front[a]), kb = key(front[b]);
            if (ka != kb) return ka < kb;
            return tiebreak(front[a]) < tiebreak(front[b]);
        });
        const double lo = key(front[order.front()]);
        const double hi = key(front[order.back()]);
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        const double range = hi - lo;
        if (range <= 0.0) return;
        for (std::size_t k = 1; k + 1 < n; ++k)
            distance[order[k]] += (key(front[order[k + 1]]) - key(front[order[k - 1]])) / range;
    };
    auto energy = [](const ObjectiveVector& v) { return v.energy_kwh; };
    auto reputation = [](const ObjectiveVector& v) { return v.reputation; };
    accumulate(energy, reputation);
    accumulate(reputation, energy);
    return distance;
}

} // namespace

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
    const std::size_t n = front.size();
    if (n <= 2) return std::vector<double>(n, std::numeric_limits<double>::infinity());

    // Points sharing an objective vector are measured once: the lowest
    // index carries the distance and its copies get 0, so duplicates are
    // the first to go when a front is truncated.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return front[a] != front[b] ? front[a] < front[b] : a < b;
    });
    std::vector<ObjectiveVector> distinct;
    std::vector<std::size_t> representative;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && front[order[k]] == front[order[k - 1]]) continue;
        distinct.push_back(front[order[k]]);
        representative.push_back(order[k]);
    }
    const auto d = distinct_crowding(distinct);
    std::vector<double> distance(n, 0.0);
    for (std::size_t k = 0; k < distinct.size(); ++k) distance[representative[k]] = d[k];
    return distance;
}

} // namespace minersel
