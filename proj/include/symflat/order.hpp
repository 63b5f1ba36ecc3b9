#pragma once

#include "symflat/enumerate.hpp"
#include "symflat/types.hpp"
#include "symflat/values.hpp"

#include <cstdint>
#include <vector>

namespace symflat {

enum class Ord { LT, EQ, GT };

inline Ord ord_of(int c) { return c < 0 ? Ord::LT : c > 0 ? Ord::GT : Ord::EQ; }

// Static total order of values of a type: integers/Booleans/unnamed by
// natural order, tuples/matrices/sequences lexicographically, multisets by
// lexicographic comparison of negated-frequency tuples over the ascending
// inner value space.
Ord static_less(const Value& a, const Value& b, const Type& t);

inline bool static_lt(const Value& a, const Value& b, const Type& t) { return static_less(a, b, t) == Ord::LT; }

// The negated-frequency tuple of a multiset-semantics value, indexed by the
// ascending inner value space. Only defined for set-like types.
std::vector<int64_t> neg_freq_tuple(const Value& v, const Type& t, int64_t cap = kDefaultEnumCap);

// The element type of the multiset semantics of a set-like type: the element
// for sets/msets, the pair/tuple type for functions/relations, the cell type
// for partitions.
Type inner_semantic_type(const Type& t);

} // namespace symflat
