#pragma once

#include "symflat/action.hpp"
#include "symflat/enumerate.hpp"
#include "symflat/order.hpp"
#include "symflat/perm.hpp"

#include <functional>
#include <vector>

namespace symflat {

// Partition of Val(t) into equivalence classes under the group action.
// Each orbit ascends in the static order; orbits sorted by their minimum.
std::vector<std::vector<Value>> orbits(const Type& t, const std::vector<SymCombo>& group,
                                       int64_t cap = kDefaultEnumCap);

// Unique minimum of an orbit under a supplied total order.
const Value& orbit_minimum(const std::vector<Value>& orbit,
                           const std::function<Ord(const Value&, const Value&)>& less);

} // namespace symflat
