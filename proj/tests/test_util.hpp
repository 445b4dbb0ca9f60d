#pragma once

#include "mbg/board.hpp"
#include "mbg/family.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace mbg::testutil {

// Random family on an abstract board: `sets` sets with sizes drawn from
// [min_size, max_size], unique within the group.
inline Family random_family(std::mt19937_64& rng, int elements, int sets, int min_size,
                            int max_size) {
    std::uniform_int_distribution<int> size_dist(min_size, max_size);
    std::set<std::vector<ElementId>> seen;
    std::vector<ElementId> pool(static_cast<size_t>(elements));
    for (int i = 0; i < elements; ++i) pool[static_cast<size_t>(i)] = i;
    while (static_cast<int>(seen.size()) < sets) {
        std::shuffle(pool.begin(), pool.end(), rng);
        int sz = std::min(size_dist(rng), elements);
        std::vector<ElementId> s(pool.begin(), pool.begin() + sz);
        std::sort(s.begin(), s.end());
        seen.insert(std::move(s));
    }
    Family fam = single_group_family({seen.begin(), seen.end()});
    normalize_family(fam, elements);
    return fam;
}

} // namespace mbg::testutil
