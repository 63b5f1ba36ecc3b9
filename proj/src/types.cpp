#include "symflat/types.hpp"

#include "symflat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symflat {

Type Type::boolean() {
    Type t;
    t.kind = TypeKind::Bool;
    return t;
}

Type Type::integer(int64_t lo, int64_t hi) {
    Type t;
    t.kind = TypeKind::Int;
    t.lo = lo;
    t.hi = hi;
    return t;
}

Type Type::unnamed(std::string tag, int size) {
    if (size < 1) fail(Errc::Internal, "unnamed type size must be positive");
    Type t;
    t.kind = TypeKind::Unnamed;
    t.tag = std::move(tag);
    t.size = size;
    return t;
}

Type Type::tuple(std::vector<Type> comps) {
    Type t;
    t.kind = TypeKind::Tuple;
    t.children = std::move(comps);
    return t;
}

Type Type::matrix(std::vector<Type> indexSets, Type element) {
    for (const Type& ix : indexSets)
        if (!is_index_type(ix)) fail(Errc::InfiniteType, "matrix index set must be bool, int range or unnamed");
    Type t;
    t.kind = TypeKind::Matrix;
    t.children = std::move(indexSets);
    t.children.push_back(std::move(element));
    return t;
}

Type Type::set(SizeAttr a, Type element) {
    Type t;
    t.kind = TypeKind::Set;
    t.attr = a;
    t.children.push_back(std::move(element));
    return t;
}

Type Type::mset(SizeAttr a, int maxOcc, Type element) {
    Type t;
    t.kind = TypeKind::MSet;
    t.attr = a;
    t.maxOcc = maxOcc;
    t.children.push_back(std::move(element));
    return t;
}

Type Type::function(bool total, Type from, Type to) {
    Type t;
    t.kind = TypeKind::Function;
    t.total = total;
    t.children.push_back(std::move(from));
    t.children.push_back(std::move(to));
    return t;
}

Type Type::relation(std::vector<Type> comps) {
    Type t;
    t.kind = TypeKind::Relation;
    t.children = std::move(comps);
    return t;
}

Type Type::partition(std::optional<int> numCells, Type from) {
    Type t;
    t.kind = TypeKind::Partition;
    t.numCells = numCells;
    t.children.push_back(std::move(from));
    return t;
}

Type Type::sequence(int maxLen, Type element) {
    Type t;
    t.kind = TypeKind::Sequence;
    t.maxLen = maxLen;
    t.children.push_back(std::move(element));
    return t;
}

const Type& Type::element() const {
    switch (kind) {
    case TypeKind::Matrix: return children.back();
    case TypeKind::Set:
    case TypeKind::MSet:
    case TypeKind::Sequence: return children[0];
    default: fail(Errc::Internal, "element() on non-container type");
    }
}

const Type& Type::from() const {
    if (kind == TypeKind::Function || kind == TypeKind::Partition) return children[0];
    fail(Errc::Internal, "from() on wrong type");
}

const Type& Type::to() const {
    if (kind == TypeKind::Function) return children[1];
    fail(Errc::Internal, "to() on wrong type");
}

bool is_index_type(const Type& t) {
    return t.kind == TypeKind::Bool || t.kind == TypeKind::Int || t.kind == TypeKind::Unnamed;
}

int64_t index_size(const Type& t) {
    switch (t.kind) {
    case TypeKind::Bool: return 2;
    case TypeKind::Int: return t.hi >= t.lo ? t.hi - t.lo + 1 : 0;
    case TypeKind::Unnamed: return t.size;
    default: fail(Errc::InfiniteType, "not an index type: " + to_string(t));
    }
}

void collect_tags(const Type& t, std::vector<std::pair<std::string, int>>& out) {
    if (t.kind == TypeKind::Unnamed) {
        for (auto& [tag, sz] : out)
            if (tag == t.tag) {
                if (sz != t.size) fail(Errc::UnknownTag, "tag " + t.tag + " used with two sizes");
                return;
            }
        out.emplace_back(t.tag, t.size);
        return;
    }
    for (const Type& c : t.children) collect_tags(c, out);
}

std::string to_string(const Type& t) {
    std::ostringstream os;
    switch (t.kind) {
    case TypeKind::Bool: os << "bool"; break;
    case TypeKind::Int: os << "int(" << t.lo << ".." << t.hi << ")"; break;
    case TypeKind::Unnamed: os << t.tag; break;
    case TypeKind::Tuple:
        os << "tuple (";
        for (size_t i = 0; i < t.children.size(); ++i) os << (i ? ", " : "") << to_string(t.children[i]);
        os << ")";
        break;
    case TypeKind::Matrix:
        os << "matrix indexed by [";
        for (size_t i = 0; i + 1 < t.children.size(); ++i) os << (i ? ", " : "") << to_string(t.children[i]);
        os << "] of " << to_string(t.children.back());
        break;
    case TypeKind::Set:
        os << "set (" << (t.attr.kind == SizeKind::Exact ? "size " : "maxSize ") << t.attr.n << ") of "
           << to_string(t.children[0]);
        break;
    case TypeKind::MSet:
        os << "mset (" << (t.attr.kind == SizeKind::Exact ? "size " : "maxSize ") << t.attr.n << ", maxOcc "
           << t.maxOcc << ") of " << to_string(t.children[0]);
        break;
    case TypeKind::Function:
        os << "function " << (t.total ? "(total) " : "") << to_string(t.children[0]) << " --> "
           << to_string(t.children[1]);
        break;
    case TypeKind::Relation:
        os << "relation of (";
        for (size_t i = 0; i < t.children.size(); ++i) os << (i ? " * " : "") << to_string(t.children[i]);
        os << ")";
        break;
    case TypeKind::Partition:
        os << "partition ";
        if (t.numCells) os << "(numCells " << *t.numCells << ") ";
        os << "from " << to_string(t.children[0]);
        break;
    case TypeKind::Sequence:
        os << "sequence (maxLen " << t.maxLen << ") of " << to_string(t.children[0]);
        break;
    }
    return os.str();
}

bool same_type(const Type& a, const Type& b) { return to_string(a) == to_string(b); }

} // namespace symflat
