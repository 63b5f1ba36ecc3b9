#include "symflat/order.hpp"

#include "symflat/enumerate.hpp"
#include "symflat/errors.hpp"

namespace symflat {

Type inner_semantic_type(const Type& t) {
    switch (t.kind) {
    case TypeKind::Set:
    case TypeKind::MSet: return t.children[0];
    case TypeKind::Function: return Type::tuple({t.from(), t.to()});
    case TypeKind::Relation: return Type::tuple(t.children);
    case TypeKind::Partition: {
        // cells are nonempty subsets of the source; the empty set only pads
        // the frequency tuple with constant zeros
        int n = (int)count_values(t.from(), (uint64_t)kDefaultEnumCap);
        return Type::set(SizeAttr::max(n), t.from());
    }
    default: fail(Errc::Internal, "inner_semantic_type on non set-like type");
    }
}

std::vector<int64_t> neg_freq_tuple(const Value& v, const Type& t, int64_t cap) {
    const std::vector<Value>& space = enumerated_space(inner_semantic_type(t), cap);
    std::vector<int64_t> out(space.size(), 0);
    // v.items are sorted structurally, not in static order; match by scan
    for (size_t i = 0; i < space.size(); ++i) {
        for (size_t j = 0; j < v.items.size(); ++j)
            if (cmp(v.items[j], space[i]) == 0) {
                out[i] = -(int64_t)v.mults[j];
                break;
            }
    }
    return out;
}

namespace {

Ord lex_items(const std::vector<Value>& a, const std::vector<Value>& b, const Type& elem) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        Ord o = static_less(a[i], b[i], elem);
        if (o != Ord::EQ) return o;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? Ord::LT : Ord::GT;
    return Ord::EQ;
}

} // namespace

Ord static_less(const Value& a, const Value& b, const Type& t) {
    switch (t.kind) {
    case TypeKind::Bool:
    case TypeKind::Int:
    case TypeKind::Unnamed:
        return a.scalar < b.scalar ? Ord::LT : a.scalar > b.scalar ? Ord::GT : Ord::EQ;
    case TypeKind::Tuple: {
        for (size_t i = 0; i < t.children.size(); ++i) {
            Ord o = static_less(a.items[i], b.items[i], t.children[i]);
            if (o != Ord::EQ) return o;
        }
        return Ord::EQ;
    }
    case TypeKind::Matrix:
        return lex_items(a.items, b.items, t.element());
    case TypeKind::Sequence:
        return lex_items(a.items, b.items, t.element());
    case TypeKind::Set:
    case TypeKind::MSet:
    case TypeKind::Function:
    case TypeKind::Relation:
    case TypeKind::Partition: {
        std::vector<int64_t> fa = neg_freq_tuple(a, t);
        std::vector<int64_t> fb = neg_freq_tuple(b, t);
        for (size_t i = 0; i < fa.size(); ++i) {
            if (fa[i] != fb[i]) return fa[i] < fb[i] ? Ord::LT : Ord::GT;
        }
        return Ord::EQ;
    }
    }
    return Ord::EQ;
}

} // namespace symflat
