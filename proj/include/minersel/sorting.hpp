#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "minersel/objectives.hpp"

namespace minersel {

using Fronts = std::vector<std::vector<std::size_t>>;

/// Deb's fast non-dominated sort. Front 0 holds the indices of points no
/// other point dominates; indices inside a front are ascending.
Fronts fast_nondominated_sort(std::span<const ObjectiveVector> points);

/// NSGA-II crowding distance for one front. Boundary points of either
/// objective get +infinity, interior points accumulate the normalized gap
/// between their neighbours. A zero objective range contributes nothing.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

} // namespace minersel
