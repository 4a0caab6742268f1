#pragma once

#include <span>
#include <vector>

#include "minersel/front.hpp"
#include "minersel/instance.hpp"
#include "minersel/moea.hpp"
#include "minersel/objectives.hpp"

namespace minersel {

/// Hypervolume reference point in normalized (min, min) space.
struct ReferencePoint {
    double f1 = 1.0;
    double f2 = 1.0;
};

/// Union of the fronts reduced to its non-dominated, deduplicated subset.
FrontSet merge_fronts(std::span<const FrontSet> fronts);

/// Exact area dominated by `points` inside the box bounded by `ref`.
/// Points outside the box contribute nothing; an empty set gives 0.
double hypervolume_2d(std::span<const NormalizedPoint> points, const ReferencePoint& ref = {});

/// Number of points not strictly inside the reference box.
std::size_t count_outside(std::span<const NormalizedPoint> points, const ReferencePoint& ref = {});

std::vector<NormalizedPoint> normalize_front(const FrontSet& front, const Instance& instance);

double per_run_hypervolume(const RunResult& run, const Instance& instance,
                           const ReferencePoint& ref = {});

} // namespace minersel
