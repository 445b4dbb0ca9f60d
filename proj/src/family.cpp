#include "mbg/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mbg {

void normalize_family(Family& family, int element_count) {
    for (auto& group : family.groups) {
        std::set<std::vector<ElementId>> seen;
        for (auto& s : group.sets) {
            if (s.empty())
                throw std::invalid_argument("family group '" + group.name + "' contains an empty set");
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.front() < 0 || s.back() >= element_count)
                throw std::invalid_argument("family group '" + group.name +
                                            "' has a set outside the board");
            if (!seen.insert(s).second)
                throw std::invalid_argument("duplicate winning set within group '" + group.name + "'");
        }
    }
}

std::vector<GroupStats> family_stats(const Family& family) {
    std::vector<GroupStats> out;
    out.reserve(family.groups.size());
    for (const auto& group : family.groups) {
        if (group.sets.empty())
            throw std::invalid_argument("family_stats: empty group '" + group.name + "'");
        GroupStats st;
        st.name = group.name;
        st.count = group.sets.size();
        st.min_size = group.sets.front().size();
        for (const auto& s : group.sets) st.min_size = std::min(st.min_size, s.size());
        out.push_back(std::move(st));
    }
    return out;
}

Family single_group_family(std::vector<std::vector<ElementId>> sets, std::string name) {
    Family f;
    f.groups.push_back(FamilyGroup{std::move(name), std::move(sets)});
    return f;
}

} // namespace mbg
