#include "minersel/metrics.hpp"

#include <algorithm>

namespace minersel {

FrontSet merge_fronts(std::span<const FrontSet> fronts) {
    FrontSet merged;
    for (const auto& front : fronts)
        for (const auto& member : front) merged.insert(member);
    return merged;
}

std::size_t count_outside(std::span<const NormalizedPoint> points, const ReferencePoint& ref) {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const auto& p) {
        return !(p.f1 < ref.f1 && p.f2 < ref.f2);
    }));
}

double hypervolume_2d(std::span<const NormalizedPoint> points, const ReferencePoint& ref) {
    std::vector<NormalizedPoint> inside;
    inside.reserve(points.size());
    for (const auto& p : points)
        if (p.f1 < ref.f1 && p.f2 < ref.f2) inside.push_back(p);
    std::sort(inside.begin(), inside.end());

    // sweep left to right; each point that lowers the staircase adds the
    // strip between the old and new f2 level, running out to ref.f1
    double area = 0.0;
    double level = ref.f2;
    for (const auto& p : inside) {
        if (p.f2 >= level) continue;
        area += (ref.f1 - p.f1) * (level - p.f2);
        level = p.f2;
    }
    return area;
}

std::vector<NormalizedPoint> normalize_front(const FrontSet& front, const Instance& instance) {
    std::vector<NormalizedPoint> points;
    points.reserve(front.size());
    for (const auto& m : front) points.push_back(normalize(m.objectives, instance));
    return points;
}

double per_run_hypervolume(const RunResult& run, const Instance& instance, const ReferencePoint& ref) {
    return hypervolume_2d(normalize_front(run.front, instance), ref);
}

} // namespace minersel
