#pragma once

#include "symflat/perm.hpp"
#include "symflat/types.hpp"
#include "symflat/values.hpp"

namespace symflat {

// Image of v under the induced action of g on Val(t): unnamed values mapped
// pointwise, matrices re-indexed through the inverse image, multisets and
// tuples mapped elementwise.
Value apply_symmetry(const Value& v, const SymCombo& g, const Type& t);

} // namespace symflat
