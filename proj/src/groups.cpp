#include "symflat/groups.hpp"

#include "symflat/errors.hpp"

#include <map>

namespace symflat {

std::vector<std::vector<Value>> orbits(const Type& t, const std::vector<SymCombo>& group, int64_t cap) {
    const std::vector<Value>& space = enumerated_space(t, cap);
    std::map<Value, size_t, ValueLess> index;
    for (size_t i = 0; i < space.size(); ++i) index.emplace(space[i], i);

    std::vector<bool> seen(space.size(), false);
    std::vector<std::vector<Value>> out;
    for (size_t i = 0; i < space.size(); ++i) {
        if (seen[i]) continue;
        // BFS over the orbit of space[i]
        std::vector<size_t> frontier{i};
        seen[i] = true;
        std::vector<size_t> members{i};
        while (!frontier.empty()) {
            std::vector<size_t> next;
            for (size_t j : frontier)
                for (const SymCombo& g : group) {
                    Value img = apply_symmetry(space[j], g, t);
                    auto it = index.find(img);
                    if (it == index.end()) fail(Errc::Internal, "orbit image left the value space");
                    if (!seen[it->second]) {
                        seen[it->second] = true;
                        members.push_back(it->second);
                        next.push_back(it->second);
                    }
                }
            frontier = std::move(next);
        }
        std::sort(members.begin(), members.end());
        std::vector<Value> orbit;
        orbit.reserve(members.size());
        for (size_t j : members) orbit.push_back(space[j]);
        out.push_back(std::move(orbit)); // space is ascending, so orbit is too
    }
    return out; // orbits found in ascending order of their minima
}

const Value& orbit_minimum(const std::vector<Value>& orbit,
                           const std::function<Ord(const Value&, const Value&)>& less) {
    if (orbit.empty()) fail(Errc::Internal, "orbit_minimum of empty orbit");
    size_t best = 0;
    for (size_t i = 1; i < orbit.size(); ++i)
        if (less(orbit[i], orbit[best]) == Ord::LT) best = i;
    return orbit[best];
}

} // namespace symflat
