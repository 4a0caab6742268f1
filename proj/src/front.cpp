#include "minersel/front.hpp"

#include <algorithm>

namespace minersel {

FrontSet FrontSet::from_candidates(std::span<const FrontMember> candidates) {
    FrontSet set;
    for (const auto& c : candidates) set.insert(c);
    return set;
}

bool FrontSet::insert(FrontMember member) {
    const ObjectiveVector& p = member.objectives;
    auto by_energy = [](const FrontMember& m, double e) { return m.objectives.energy_kwh < e; };

    // first member with energy >= p.energy
    auto lo = std::lower_bound(members_.begin(), members_.end(), p.energy_kwh, by_energy);

    // the best reputation among members with energy <= p.energy sits at the
    // last such member
    auto hi = lo;
    while (hi != members_.end() && hi->objectives.energy_kwh == p.energy_kwh) ++hi;
    if (hi != members_.begin()) {
        const ObjectiveVector& q = std::prev(hi)->objectives;
        if (q.reputation >= p.reputation) return false;
    }

    // members with energy >= p.energy and reputation <= p.reputation form a run
    auto last = lo;
    while (last != members_.end() && last->objectives.reputation <= p.reputation) ++last;
    auto pos = members_.erase(lo, last);
    members_.insert(pos, std::move(member));
    return true;
}

bool is_nondominated_set(std::span<const FrontMember> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            if (dominates(members[i].objectives, members[j].objectives)) return false;
            if (i < j && members[i].objectives == members[j].objectives) return false;
        }
    return true;
}

} // namespace minersel
