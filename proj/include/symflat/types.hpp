#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symflat {

enum class TypeKind { Bool, Int, Unnamed, Tuple, Matrix, Set, MSet, Function, Relation, Partition, Sequence };

enum class SizeKind { Exact, Max };

struct SizeAttr {
    SizeKind kind = SizeKind::Exact;
    int n = 0;

    static SizeAttr exact(int n) { return {SizeKind::Exact, n}; }
    static SizeAttr max(int n) { return {SizeKind::Max, n}; }
};

// Recursive type descriptor. Children layout:
//   Tuple      - one child per component
//   Matrix     - index sets first, element type last
//   Set/MSet   - {element}
//   Function   - {from, to}
//   Relation   - one child per component
//   Partition  - {from}
//   Sequence   - {element}
struct Type {
    TypeKind kind = TypeKind::Bool;
    int64_t lo = 0, hi = 0;      // Int
    std::string tag;             // Unnamed
    int size = 0;                // Unnamed: number of values
    SizeAttr attr;               // Set / MSet
    int maxOcc = 0;              // MSet
    bool total = false;          // Function
    std::optional<int> numCells; // Partition
    int maxLen = 0;              // Sequence
    std::vector<Type> children;

    static Type boolean();
    static Type integer(int64_t lo, int64_t hi);
    static Type unnamed(std::string tag, int size);
    static Type tuple(std::vector<Type> comps);
    static Type matrix(std::vector<Type> indexSets, Type element);
    static Type set(SizeAttr a, Type element);
    static Type mset(SizeAttr a, int maxOcc, Type element);
    static Type function(bool total, Type from, Type to);
    static Type relation(std::vector<Type> comps);
    static Type partition(std::optional<int> numCells, Type from);
    static Type sequence(int maxLen, Type element);

    const Type& element() const; // Matrix/Set/MSet/Sequence
    const Type& from() const;    // Function/Partition
    const Type& to() const;      // Function
    size_t matrix_dims() const { return children.size() - 1; }
    const Type& index_set(size_t d) const { return children[d]; }
};

// Types usable as matrix index sets (and occurrence-style dimensions).
bool is_index_type(const Type& t);
int64_t index_size(const Type& t);

// Tags (with sizes) occurring anywhere in t.
void collect_tags(const Type& t, std::vector<std::pair<std::string, int>>& out);

std::string to_string(const Type& t);
bool same_type(const Type& a, const Type& b);

} // namespace symflat
