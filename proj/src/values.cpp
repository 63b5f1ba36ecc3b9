#include "symflat/values.hpp"

#include "symflat/enumerate.hpp"
#include "symflat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symflat {

Value Value::boolean(bool b) {
    Value v;
    v.kind = ValueKind::Bool;
    v.scalar = b ? 1 : 0;
    return v;
}

Value Value::integer(int64_t x) {
    Value v;
    v.kind = ValueKind::Int;
    v.scalar = x;
    return v;
}

Value Value::unnamedv(std::string tag, int index) {
    Value v;
    v.kind = ValueKind::Unnamed;
    v.tag = std::move(tag);
    v.scalar = index;
    return v;
}

Value Value::tuple(std::vector<Value> xs) {
    Value v;
    v.kind = ValueKind::Tuple;
    v.items = std::move(xs);
    return v;
}

Value Value::matrix(std::vector<Value> xs) {
    Value v;
    v.kind = ValueKind::Matrix;
    v.items = std::move(xs);
    return v;
}

Value Value::mset(std::vector<Value> xs) {
    std::vector<std::pair<Value, int>> entries;
    entries.reserve(xs.size());
    for (Value& x : xs) entries.emplace_back(std::move(x), 1);
    return mset_counted(std::move(entries));
}

Value Value::mset_counted(std::vector<std::pair<Value, int>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
    Value v;
    v.kind = ValueKind::MSet;
    for (auto& [x, m] : entries) {
        if (m <= 0) fail(Errc::Internal, "mset multiplicity must be positive");
        if (!v.items.empty() && cmp(v.items.back(), x) == 0)
            v.mults.back() += m;
        else {
            v.items.push_back(std::move(x));
            v.mults.push_back(m);
        }
    }
    return v;
}

Value Value::seq(std::vector<Value> xs) {
    Value v;
    v.kind = ValueKind::Seq;
    v.items = std::move(xs);
    return v;
}

int64_t Value::mset_size() const {
    int64_t n = 0;
    for (int m : mults) n += m;
    return n;
}

int cmp(const Value& a, const Value& b) {
    if (a.kind != b.kind) return int(a.kind) < int(b.kind) ? -1 : 1;
    switch (a.kind) {
    case ValueKind::Bool:
    case ValueKind::Int:
        return a.scalar < b.scalar ? -1 : a.scalar > b.scalar ? 1 : 0;
    case ValueKind::Unnamed:
        if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
        return a.scalar < b.scalar ? -1 : a.scalar > b.scalar ? 1 : 0;
    default: break;
    }
    size_t n = std::min(a.items.size(), b.items.size());
    for (size_t i = 0; i < n; ++i) {
        if (int c = cmp(a.items[i], b.items[i])) return c;
        if (a.kind == ValueKind::MSet && a.mults[i] != b.mults[i]) return a.mults[i] < b.mults[i] ? -1 : 1;
    }
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size() ? -1 : 1;
    return 0;
}

bool operator==(const Value& a, const Value& b) { return cmp(a, b) == 0; }

std::string to_string(const Value& v) {
    std::ostringstream os;
    switch (v.kind) {
    case ValueKind::Bool: os << (v.scalar ? "true" : "false"); break;
    case ValueKind::Int: os << v.scalar; break;
    case ValueKind::Unnamed: os << v.scalar << "_" << v.tag; break;
    case ValueKind::Tuple: {
        os << "(";
        for (size_t i = 0; i < v.items.size(); ++i) os << (i ? ", " : "") << to_string(v.items[i]);
        os << ")";
        break;
    }
    case ValueKind::Matrix: {
        os << "[";
        for (size_t i = 0; i < v.items.size(); ++i) os << (i ? ", " : "") << to_string(v.items[i]);
        os << "]";
        break;
    }
    case ValueKind::MSet: {
        os << "{";
        bool first = true;
        for (size_t i = 0; i < v.items.size(); ++i)
            for (int k = 0; k < v.mults[i]; ++k) {
                if (!first) os << ", ";
                first = false;
                os << to_string(v.items[i]);
            }
        os << "}";
        break;
    }
    case ValueKind::Seq: {
        os << "seq(";
        for (size_t i = 0; i < v.items.size(); ++i) os << (i ? ", " : "") << to_string(v.items[i]);
        os << ")";
        break;
    }
    }
    return os.str();
}

namespace {

bool check_mset_shape(const Value& v) { return v.kind == ValueKind::MSet && v.items.size() == v.mults.size(); }

int64_t attr_ok(const SizeAttr& a, int64_t n) {
    return a.kind == SizeKind::Exact ? n == a.n : n <= a.n;
}

} // namespace

bool typecheck(const Value& v, const Type& t) {
    switch (t.kind) {
    case TypeKind::Bool:
        return v.kind == ValueKind::Bool && (v.scalar == 0 || v.scalar == 1);
    case TypeKind::Int:
        return v.kind == ValueKind::Int && v.scalar >= t.lo && v.scalar <= t.hi;
    case TypeKind::Unnamed:
        return v.kind == ValueKind::Unnamed && v.tag == t.tag && v.scalar >= 1 && v.scalar <= t.size;
    case TypeKind::Tuple: {
        if (v.kind != ValueKind::Tuple || v.items.size() != t.children.size()) return false;
        for (size_t i = 0; i < v.items.size(); ++i)
            if (!typecheck(v.items[i], t.children[i])) return false;
        return true;
    }
    case TypeKind::Matrix: {
        if (v.kind != ValueKind::Matrix) return false;
        int64_t cells = 1;
        for (size_t d = 0; d < t.matrix_dims(); ++d) cells *= index_size(t.index_set(d));
        if ((int64_t)v.items.size() != cells) return false;
        for (const Value& x : v.items)
            if (!typecheck(x, t.element())) return false;
        return true;
    }
    case TypeKind::Set: {
        if (!check_mset_shape(v)) return false;
        for (int m : v.mults)
            if (m != 1) return false;
        if (!attr_ok(t.attr, v.mset_size())) return false;
        for (const Value& x : v.items)
            if (!typecheck(x, t.element())) return false;
        return true;
    }
    case TypeKind::MSet: {
        if (!check_mset_shape(v)) return false;
        for (int m : v.mults)
            if (m > t.maxOcc) return false;
        if (!attr_ok(t.attr, v.mset_size())) return false;
        for (const Value& x : v.items)
            if (!typecheck(x, t.element())) return false;
        return true;
    }
    case TypeKind::Function: {
        if (!check_mset_shape(v)) return false;
        for (int m : v.mults)
            if (m != 1) return false;
        for (const Value& x : v.items) {
            if (x.kind != ValueKind::Tuple || x.items.size() != 2) return false;
            if (!typecheck(x.items[0], t.from()) || !typecheck(x.items[1], t.to())) return false;
        }
        // no two pairs share a first component; entries are sorted, so equal
        // firsts are adjacent
        for (size_t i = 0; i + 1 < v.items.size(); ++i)
            if (cmp(v.items[i].items[0], v.items[i + 1].items[0]) == 0) return false;
        if (t.total && (int64_t)v.items.size() != (int64_t)count_values(t.from(), kDefaultEnumCap)) return false;
        return true;
    }
    case TypeKind::Relation: {
        if (!check_mset_shape(v)) return false;
        for (int m : v.mults)
            if (m != 1) return false;
        for (const Value& x : v.items) {
            if (x.kind != ValueKind::Tuple || x.items.size() != t.children.size()) return false;
            for (size_t i = 0; i < x.items.size(); ++i)
                if (!typecheck(x.items[i], t.children[i])) return false;
        }
        return true;
    }
    case TypeKind::Partition: {
        if (!check_mset_shape(v)) return false;
        for (int m : v.mults)
            if (m != 1) return false;
        if (t.numCells && (int64_t)v.items.size() != *t.numCells) return false;
        int64_t covered = 0;
        std::vector<Value> all;
        for (const Value& cell : v.items) {
            if (!check_mset_shape(cell) || cell.items.empty()) return false;
            for (int m : cell.mults)
                if (m != 1) return false;
            for (const Value& x : cell.items) {
                if (!typecheck(x, t.from())) return false;
                all.push_back(x);
            }
            covered += (int64_t)cell.items.size();
        }
        std::sort(all.begin(), all.end(), ValueLess{});
        for (size_t i = 0; i + 1 < all.size(); ++i)
            if (cmp(all[i], all[i + 1]) == 0) return false; // cells overlap
        return covered == (int64_t)count_values(t.from(), kDefaultEnumCap);
    }
    case TypeKind::Sequence: {
        if (v.kind != ValueKind::Seq || (int64_t)v.items.size() > t.maxLen) return false;
        for (const Value& x : v.items)
            if (!typecheck(x, t.element())) return false;
        return true;
    }
    }
    return false;
}

} // namespace symflat
