#pragma once

#include <span>
#include <vector>

#include "minersel/objectives.hpp"

namespace minersel {

struct FrontMember {
    SelectionMask mask;
    ObjectiveVector objectives;

    bool operator==(const FrontMember&) const = default;
};

/// Archive of mutually non-dominated members, deduplicated by objective
/// vector. Members are kept sorted by ascending energy, which for a
/// non-dominated set also means ascending reputation.
class FrontSet {
public:
    FrontSet() = default;

    /// Non-dominated subset of the candidates. Among equal objective vectors
    /// the first occurrence is kept.
    static FrontSet from_candidates(std::span<const FrontMember> candidates);

    /// Adds the member unless it is dominated by or equal to an existing one;
    /// members it dominates are dropped. Returns whether it was added.
    bool insert(FrontMember member);

    const std::vector<FrontMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const FrontSet&) const = default;

private:
    std::vector<FrontMember> members_;
};

/// True when no member dominates another and no two share an objective vector.
bool is_nondominated_set(std::span<const FrontMember> members);

} // namespace minersel
