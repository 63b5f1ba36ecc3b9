#include "symflat/perm.hpp"

#include "symflat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace symflat {

TaggedPerm TaggedPerm::identity(std::string tag, int n) {
    TaggedPerm p;
    p.tag = std::move(tag);
    p.img.resize((size_t)n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

bool TaggedPerm::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (apply(i) != i) return false;
    return true;
}

TaggedPerm TaggedPerm::inverse() const {
    TaggedPerm p;
    p.tag = tag;
    p.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) p.img[(size_t)apply(i) - 1] = i;
    return p;
}

TaggedPerm TaggedPerm::then(const TaggedPerm& other) const {
    if (tag != other.tag || n() != other.n()) fail(Errc::UnknownTag, "composing permutations of distinct tags");
    TaggedPerm p;
    p.tag = tag;
    p.img.resize(img.size());
    for (int i = 1; i <= n(); ++i) p.img[(size_t)i - 1] = other.apply(apply(i));
    return p;
}

std::string to_string(const TaggedPerm& p) {
    std::ostringstream os;
    std::vector<bool> seen((size_t)p.n(), false);
    bool any = false;
    for (int i = 1; i <= p.n(); ++i) {
        if (seen[(size_t)i - 1] || p.apply(i) == i) continue;
        any = true;
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[(size_t)j - 1]) {
            seen[(size_t)j - 1] = true;
            os << (first ? "" : " ") << j << "_" << p.tag;
            first = false;
            j = p.apply(j);
        }
        os << ")";
    }
    if (!any) return "id_" + p.tag;
    return os.str();
}

bool SymCombo::is_identity() const {
    for (auto& [tag, p] : perms)
        if (!p.is_identity()) return false;
    return true;
}

const TaggedPerm* SymCombo::perm_for(const std::string& tag) const {
    auto it = perms.find(tag);
    return it == perms.end() ? nullptr : &it->second;
}

SymCombo SymCombo::inverse() const {
    SymCombo g;
    for (auto& [tag, p] : perms) g.perms.emplace(tag, p.inverse());
    return g;
}

SymCombo SymCombo::then(const SymCombo& other) const {
    SymCombo g = *this;
    for (auto& [tag, q] : other.perms) {
        auto it = g.perms.find(tag);
        if (it == g.perms.end())
            g.perms.emplace(tag, q);
        else
            it->second = it->second.then(q);
    }
    return g;
}

std::string SymCombo::key() const {
    std::ostringstream os;
    for (auto& [tag, p] : perms) {
        if (p.is_identity()) continue;
        os << tag << ":";
        for (int v : p.img) os << v << ",";
        os << ";";
    }
    return os.str();
}

std::string to_string(const SymCombo& g) {
    std::ostringstream os;
    bool any = false;
    for (auto& [tag, p] : g.perms) {
        if (p.is_identity()) continue;
        os << to_string(p);
        any = true;
    }
    return any ? os.str() : "id";
}

GenStrategy parse_strategy(const std::string& s) {
    if (s == "consecutive") return GenStrategy::Consecutive;
    if (s == "allpairs") return GenStrategy::AllPairs;
    if (s == "all") return GenStrategy::All;
    fail(Errc::SyntaxError, "unknown generator strategy: " + s);
}

std::string to_string(GenStrategy s) {
    switch (s) {
    case GenStrategy::Consecutive: return "consecutive";
    case GenStrategy::AllPairs: return "allpairs";
    case GenStrategy::All: return "all";
    }
    return "?";
}

namespace {

SymCombo combo_of(const TaggedPerm& p) {
    SymCombo g;
    g.perms.emplace(p.tag, p);
    return g;
}

TaggedPerm transposition(const std::string& tag, int n, int a, int b) {
    TaggedPerm p = TaggedPerm::identity(tag, n);
    std::swap(p.img[(size_t)a - 1], p.img[(size_t)b - 1]);
    return p;
}

} // namespace

std::vector<SymCombo> generators(const std::vector<std::pair<std::string, int>>& tags, GenStrategy s,
                                 int64_t allPermCap) {
    std::vector<std::pair<std::string, int>> sorted = tags;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SymCombo> out;
    for (auto& [tag, n] : sorted) {
        if (n < 1) fail(Errc::SizeOverflow, "unnamed type size must be >= 1");
        switch (s) {
        case GenStrategy::Consecutive:
            for (int i = 1; i < n; ++i) out.push_back(combo_of(transposition(tag, n, i, i + 1)));
            break;
        case GenStrategy::AllPairs:
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) out.push_back(combo_of(transposition(tag, n, i, j)));
            break;
        case GenStrategy::All: {
            int64_t fact = 1;
            for (int i = 2; i <= n; ++i) {
                fact *= i;
                if (fact > allPermCap)
                    fail(Errc::SizeOverflow,
                         "generator strategy 'all' needs " + std::to_string(n) + "! permutations, above cap");
            }
            TaggedPerm p = TaggedPerm::identity(tag, n);
            std::vector<int> img = p.img;
            std::sort(img.begin(), img.end());
            do {
                p.img = img;
                if (!p.is_identity()) out.push_back(combo_of(p));
            } while (std::next_permutation(img.begin(), img.end()));
            break;
        }
        }
    }
    return out;
}

std::vector<SymCombo> group_closure(const std::vector<SymCombo>& gens, size_t cap) {
    std::vector<SymCombo> elems;
    std::set<std::string> seen;
    SymCombo id;
    // keep full-size identity entries for every mentioned tag so composition
    // sizes line up
    for (const SymCombo& g : gens)
        for (auto& [tag, p] : g.perms)
            if (!id.perms.count(tag)) id.perms.emplace(tag, TaggedPerm::identity(tag, p.n()));
    elems.push_back(id);
    seen.insert(id.key());
    size_t head = 0;
    while (head < elems.size()) {
        SymCombo cur = elems[head++];
        for (const SymCombo& g : gens) {
            SymCombo nx = cur.then(g);
            if (seen.insert(nx.key()).second) {
                if (elems.size() + 1 > cap) fail(Errc::SizeOverflow, "group closure exceeds cap");
                elems.push_back(nx);
            }
        }
    }
    return elems;
}

std::vector<SymCombo> full_group(const std::vector<std::pair<std::string, int>>& tags, size_t cap) {
    return group_closure(generators(tags, GenStrategy::Consecutive), cap);
}

} // namespace symflat
