#pragma once

#include "symflat/types.hpp"
#include "symflat/values.hpp"

#include <cstdint>
#include <vector>

namespace symflat {

inline constexpr int64_t kDefaultEnumCap = 1'000'000;

// Number of values of t, saturating at `sat` (no allocation, never throws
// for finite types).
uint64_t count_values(const Type& t, uint64_t sat);

// All values of t, duplicate-free, ascending under the static order.
// Throws CapExceeded when the count estimate exceeds cap.
std::vector<Value> enumerate_values(const Type& t, int64_t cap = kDefaultEnumCap);

// Memoised variant shared by the ordering and oracle code paths.
const std::vector<Value>& enumerated_space(const Type& t, int64_t cap = kDefaultEnumCap);

} // namespace symflat
