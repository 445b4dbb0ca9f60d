#pragma once

#include "mbg/board.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mbg {

// One sub-family F_j. Sets are kept sorted ascending; duplicates within a
// group are rejected (duplicates across groups are fine).
struct FamilyGroup {
    std::string name;
    std::vector<std::vector<ElementId>> sets;
};

struct Family {
    std::vector<FamilyGroup> groups;

    std::size_t total_sets() const {
        std::size_t c = 0;
        for (const auto& g : groups) c += g.sets.size();
        return c;
    }
    bool empty() const { return total_sets() == 0; }
};

struct GroupStats {
    std::string name;
    std::size_t min_size = 0; // k_j
    std::size_t count = 0;    // |F_j|
};

// Sorts every set, checks nonemptiness, range [0,element_count) and
// within-group uniqueness. Throws std::invalid_argument on violation.
void normalize_family(Family& family, int element_count);

// Exact (k_j, |F_j|) per group; throws on empty group.
std::vector<GroupStats> family_stats(const Family& family);

// Convenience: single anonymous group.
Family single_group_family(std::vector<std::vector<ElementId>> sets, std::string name = "F");

} // namespace mbg
