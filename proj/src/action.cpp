#include "symflat/action.hpp"

#include "symflat/errors.hpp"

namespace symflat {

namespace {

// position (0-based) of an index value within its index set under p
int64_t mapped_index_pos(int64_t pos, const TaggedPerm* p) {
    if (!p) return pos;
    return (int64_t)p->apply((int)pos + 1) - 1;
}

// type of the entries of the multiset view of a set-like value; the size
// attribute is irrelevant to the action
Type action_inner(const Type& t) {
    switch (t.kind) {
    case TypeKind::Set:
    case TypeKind::MSet: return t.children[0];
    case TypeKind::Function: return Type::tuple({t.children[0], t.children[1]});
    case TypeKind::Relation: return Type::tuple(t.children);
    case TypeKind::Partition: return Type::set(SizeAttr::max(1 << 30), t.children[0]);
    default: fail(Errc::Internal, "action_inner on non set-like type");
    }
}

} // namespace

Value apply_symmetry(const Value& v, const SymCombo& g, const Type& t) {
    switch (t.kind) {
    case TypeKind::Bool:
    case TypeKind::Int:
        return v;
    case TypeKind::Unnamed: {
        const TaggedPerm* p = g.perm_for(t.tag);
        if (!p) return v;
        if (p->n() != t.size) fail(Errc::UnknownTag, "permutation size mismatch for tag " + t.tag);
        return Value::unnamedv(t.tag, p->apply((int)v.scalar));
    }
    case TypeKind::Tuple: {
        std::vector<Value> xs;
        xs.reserve(v.items.size());
        for (size_t i = 0; i < v.items.size(); ++i) xs.push_back(apply_symmetry(v.items[i], g, t.children[i]));
        return Value::tuple(std::move(xs));
    }
    case TypeKind::Matrix: {
        size_t dims = t.matrix_dims();
        std::vector<int64_t> sizes(dims), strides(dims);
        std::vector<const TaggedPerm*> dimPermInv(dims, nullptr);
        for (size_t d = 0; d < dims; ++d) sizes[d] = index_size(t.index_set(d));
        int64_t stride = 1;
        for (size_t d = dims; d-- > 0;) {
            strides[d] = stride;
            stride *= sizes[d];
        }
        std::vector<TaggedPerm> owned;
        owned.reserve(dims);
        for (size_t d = 0; d < dims; ++d) {
            const Type& ix = t.index_set(d);
            if (ix.kind == TypeKind::Unnamed) {
                if (const TaggedPerm* p = g.perm_for(ix.tag)) {
                    if (p->n() != ix.size) fail(Errc::UnknownTag, "permutation size mismatch for tag " + ix.tag);
                    owned.push_back(p->inverse());
                    dimPermInv[d] = &owned.back();
                }
            }
        }
        std::vector<Value> xs((size_t)stride, Value{});
        for (int64_t flat = 0; flat < stride; ++flat) {
            int64_t rem = flat, src = 0;
            for (size_t d = 0; d < dims; ++d) {
                int64_t pos = rem / strides[d];
                rem %= strides[d];
                src += mapped_index_pos(pos, dimPermInv[d]) * strides[d];
            }
            xs[(size_t)flat] = apply_symmetry(v.items[(size_t)src], g, t.element());
        }
        return Value::matrix(std::move(xs));
    }
    case TypeKind::Set:
    case TypeKind::MSet:
    case TypeKind::Function:
    case TypeKind::Relation:
    case TypeKind::Partition: {
        // all stored as multisets; map entries elementwise, keep multiplicities
        Type inner = action_inner(t);
        std::vector<std::pair<Value, int>> entries;
        entries.reserve(v.items.size());
        for (size_t i = 0; i < v.items.size(); ++i)
            entries.emplace_back(apply_symmetry(v.items[i], g, inner), v.mults[i]);
        return Value::mset_counted(std::move(entries));
    }
    case TypeKind::Sequence: {
        std::vector<Value> xs;
        xs.reserve(v.items.size());
        for (const Value& x : v.items) xs.push_back(apply_symmetry(x, g, t.element()));
        return Value::seq(std::move(xs));
    }
    }
    return v;
}

} // namespace symflat
