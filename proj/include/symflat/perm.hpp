#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symflat {

// Permutation of the values 1..n of one unnamed type.
struct TaggedPerm {
    std::string tag;
    std::vector<int> img; // img[i-1] = image of i (1-based values)

    static TaggedPerm identity(std::string tag, int n);
    int n() const { return (int)img.size(); }
    int apply(int i) const { return img[(size_t)i - 1]; }
    bool is_identity() const;
    TaggedPerm inverse() const;
    TaggedPerm then(const TaggedPerm& other) const; // this, then other
};

std::string to_string(const TaggedPerm& p); // cycle notation

// One permutation per unnamed type; identity where absent.
struct SymCombo {
    std::map<std::string, TaggedPerm> perms;

    bool is_identity() const;
    const TaggedPerm* perm_for(const std::string& tag) const;
    SymCombo inverse() const;
    SymCombo then(const SymCombo& other) const;
    std::string key() const; // canonical encoding for dedup
};

std::string to_string(const SymCombo& g);

enum class GenStrategy { Consecutive, AllPairs, All };

GenStrategy parse_strategy(const std::string& s);
std::string to_string(GenStrategy s);

inline constexpr int64_t kDefaultAllPermCap = 100'000;
inline constexpr size_t kDefaultClosureCap = 100'000;

// Generator combos over the given tag list, one per-tag generator each
// ("Independently"): Consecutive emits adjacent transpositions, AllPairs all
// transpositions, All every non-identity permutation. Output deterministic
// (by tag, then lexicographic on images). Identity never included.
std::vector<SymCombo> generators(const std::vector<std::pair<std::string, int>>& tags, GenStrategy s,
                                 int64_t allPermCap = kDefaultAllPermCap);

// Full group generated by gens, including the identity.
std::vector<SymCombo> group_closure(const std::vector<SymCombo>& gens, size_t cap = kDefaultClosureCap);

// Full symmetric group on every tag (product group), including identity.
std::vector<SymCombo> full_group(const std::vector<std::pair<std::string, int>>& tags,
                                 size_t cap = kDefaultClosureCap);

} // namespace symflat
