#pragma once

#include "symflat/types.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symflat {

enum class ValueKind { Bool, Int, Unnamed, Tuple, Matrix, MSet, Seq };

// Immutable abstract value. Sets, multisets, functions, relations and
// partitions are all stored as MSet nodes (functions/relations as multisets
// of pairs/tuples, partitions as multisets of multisets). MSet entries are
// kept canonical: distinct, sorted by structural order, multiplicities >= 1.
struct Value {
    ValueKind kind = ValueKind::Bool;
    int64_t scalar = 0;       // Bool 0/1, Int value, Unnamed 1-based index
    std::string tag;          // Unnamed
    std::vector<Value> items; // Tuple/Matrix/Seq children; MSet distinct entries
    std::vector<int> mults;   // MSet multiplicities, parallel to items

    static Value boolean(bool b);
    static Value integer(int64_t v);
    static Value unnamedv(std::string tag, int index);
    static Value tuple(std::vector<Value> xs);
    static Value matrix(std::vector<Value> xs);
    static Value mset(std::vector<Value> xs); // repeated entries fold into mults
    static Value mset_counted(std::vector<std::pair<Value, int>> entries);
    static Value seq(std::vector<Value> xs);

    int64_t mset_size() const; // total multiplicity
};

// Structural total order used for canonical storage and equality. This is
// not the static order of values within a type; see order.hpp for that.
int cmp(const Value& a, const Value& b);
bool operator==(const Value& a, const Value& b);
inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }
struct ValueLess {
    bool operator()(const Value& a, const Value& b) const { return cmp(a, b) < 0; }
};

std::string to_string(const Value& v);

// True iff v is a value of type t (sizes, occurrence bounds, functional
// property, partition cover, ...).
bool typecheck(const Value& v, const Type& t);

} // namespace symflat
