#include "symflat/enumerate.hpp"

#include "symflat/errors.hpp"
#include "symflat/order.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace symflat {

namespace {

constexpr uint64_t kSatLimit = uint64_t(1) << 62;

uint64_t sat_add(uint64_t a, uint64_t b) {
    if (a >= kSatLimit || b >= kSatLimit || a + b >= kSatLimit) return kSatLimit;
    return a + b;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSatLimit || b >= kSatLimit || a > kSatLimit / b) return kSatLimit;
    return a * b;
}

uint64_t sat_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

uint64_t sat_binom(uint64_t m, uint64_t k) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = sat_mul(r, m - k + i);
        if (r < kSatLimit) r /= i;
    }
    return r;
}

// multisets of total size k over m distinct elements, multiplicities <= c
uint64_t count_bounded_msets(uint64_t m, uint64_t k, uint64_t c) {
    std::vector<uint64_t> dp(k + 1, 0);
    dp[0] = 1;
    for (uint64_t e = 0; e < m; ++e) {
        std::vector<uint64_t> nx(k + 1, 0);
        for (uint64_t s = 0; s <= k; ++s) {
            if (!dp[s]) continue;
            for (uint64_t take = 0; take <= c && s + take <= k; ++take) nx[s + take] = sat_add(nx[s + take], dp[s]);
        }
        dp = std::move(nx);
        if (dp[k] >= kSatLimit) break; // monotone in e, already saturated
    }
    return dp[k];
}

uint64_t count_partitions(uint64_t m, std::optional<int> cells) {
    // dp[j] = partitions of the first i elements into exactly j cells
    std::vector<uint64_t> dp(m + 1, 0);
    dp[0] = 1;
    for (uint64_t i = 0; i < m; ++i) {
        std::vector<uint64_t> nx(m + 1, 0);
        for (uint64_t j = 0; j <= i; ++j) {
            if (!dp[j]) continue;
            nx[j + 1] = sat_add(nx[j + 1], dp[j]);          // open a new cell
            nx[j] = sat_add(nx[j], sat_mul(dp[j], j));      // join an existing cell
        }
        dp = std::move(nx);
    }
    if (cells) return (uint64_t)*cells <= m ? dp[*cells] : 0;
    uint64_t total = 0;
    for (uint64_t j = (m == 0 ? 0 : 1); j <= m; ++j) total = sat_add(total, dp[j]);
    return total;
}

} // namespace

uint64_t count_values(const Type& t, uint64_t sat) {
    uint64_t lim = std::min<uint64_t>(sat, kSatLimit);
    auto clamp = [&](uint64_t v) { return std::min(v, lim); };
    switch (t.kind) {
    case TypeKind::Bool: return 2;
    case TypeKind::Int: return t.hi >= t.lo ? clamp((uint64_t)(t.hi - t.lo + 1)) : 0;
    case TypeKind::Unnamed: return (uint64_t)t.size;
    case TypeKind::Tuple: {
        uint64_t r = 1;
        for (const Type& c : t.children) r = sat_mul(r, count_values(c, sat));
        return clamp(r);
    }
    case TypeKind::Matrix: {
        uint64_t cells = 1;
        for (size_t d = 0; d < t.matrix_dims(); ++d) cells = sat_mul(cells, (uint64_t)index_size(t.index_set(d)));
        return clamp(sat_pow(count_values(t.element(), sat), cells));
    }
    case TypeKind::Set: {
        uint64_t m = count_values(t.element(), sat);
        if (t.attr.kind == SizeKind::Exact) return clamp(sat_binom(m, (uint64_t)t.attr.n));
        uint64_t r = 0;
        for (int i = 0; i <= t.attr.n; ++i) r = sat_add(r, sat_binom(m, (uint64_t)i));
        return clamp(r);
    }
    case TypeKind::MSet: {
        uint64_t m = count_values(t.element(), sat);
        if (m >= kSatLimit) return lim;
        if (t.attr.kind == SizeKind::Exact)
            return clamp(count_bounded_msets(m, (uint64_t)t.attr.n, (uint64_t)t.maxOcc));
        uint64_t r = 0;
        for (int i = 0; i <= t.attr.n; ++i)
            r = sat_add(r, count_bounded_msets(m, (uint64_t)i, (uint64_t)t.maxOcc));
        return clamp(r);
    }
    case TypeKind::Function: {
        uint64_t nf = count_values(t.from(), sat);
        uint64_t nt = count_values(t.to(), sat);
        return clamp(sat_pow(t.total ? nt : sat_add(nt, 1), nf));
    }
    case TypeKind::Relation: {
        uint64_t cells = 1;
        for (const Type& c : t.children) cells = sat_mul(cells, count_values(c, sat));
        return clamp(sat_pow(2, cells));
    }
    case TypeKind::Partition: {
        uint64_t m = count_values(t.from(), sat);
        if (m >= kSatLimit) return lim;
        return clamp(count_partitions(m, t.numCells));
    }
    case TypeKind::Sequence: {
        uint64_t m = count_values(t.element(), sat);
        uint64_t r = 0;
        for (int l = 0; l <= t.maxLen; ++l) r = sat_add(r, sat_pow(m, (uint64_t)l));
        return clamp(r);
    }
    }
    return 0;
}

namespace {

// dense odometer over component spaces
void cartesian(const std::vector<size_t>& sizes, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(sizes.size(), 0);
    for (size_t s : sizes)
        if (s == 0) return;
    while (true) {
        fn(idx);
        size_t d = sizes.size();
        while (d > 0) {
            --d;
            if (++idx[d] < sizes[d]) break;
            idx[d] = 0;
            if (d == 0) return;
        }
        if (sizes.empty()) return;
    }
}

void combinations(size_t m, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    if (k > m) return;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        size_t d = k;
        while (d > 0) {
            --d;
            if (idx[d] + (k - d) < m) {
                ++idx[d];
                for (size_t j = d + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (d == 0) return;
        }
        if (k == 0) return;
    }
}

// multisets over elements 0..m-1 with multiplicity <= c and total size k
void bounded_msets(size_t m, int k, int c, std::vector<std::pair<size_t, int>>& cur,
                   const std::function<void()>& emit, size_t from = 0) {
    if (k == 0) {
        emit();
        return;
    }
    for (size_t e = from; e < m; ++e) {
        int maxTake = std::min(c, k);
        for (int take = 1; take <= maxTake; ++take) {
            cur.emplace_back(e, take);
            bounded_msets(m, k - take, c, cur, emit, e + 1);
            cur.pop_back();
        }
    }
}

void partitions_rgs(size_t m, std::optional<int> cells, std::vector<int>& label,
                    const std::function<void(int)>& emit, size_t i = 0, int used = 0) {
    if (i == m) {
        if (!cells || *cells == used) emit(used);
        return;
    }
    int top = used + 1;
    if (cells) top = std::min(top, *cells);
    for (int lab = 1; lab <= top; ++lab) {
        label[i] = lab;
        partitions_rgs(m, cells, label, emit, i + 1, std::max(used, lab));
    }
}

} // namespace

std::vector<Value> enumerate_values(const Type& t, int64_t cap) {
    if (cap <= 0) fail(Errc::CapExceeded, "enumeration cap must be positive");
    uint64_t n = count_values(t, (uint64_t)cap + 1);
    if (n > (uint64_t)cap)
        fail(Errc::CapExceeded, "value space of " + to_string(t) + " exceeds cap " + std::to_string(cap));

    std::vector<Value> out;
    out.reserve((size_t)n);
    switch (t.kind) {
    case TypeKind::Bool:
        out.push_back(Value::boolean(false));
        out.push_back(Value::boolean(true));
        break;
    case TypeKind::Int:
        for (int64_t v = t.lo; v <= t.hi; ++v) out.push_back(Value::integer(v));
        break;
    case TypeKind::Unnamed:
        for (int i = 1; i <= t.size; ++i) out.push_back(Value::unnamedv(t.tag, i));
        break;
    case TypeKind::Tuple: {
        std::vector<const std::vector<Value>*> spaces;
        std::vector<size_t> sizes;
        for (const Type& c : t.children) {
            spaces.push_back(&enumerated_space(c, cap));
            sizes.push_back(spaces.back()->size());
        }
        cartesian(sizes, [&](const std::vector<size_t>& idx) {
            std::vector<Value> xs;
            xs.reserve(idx.size());
            for (size_t i = 0; i < idx.size(); ++i) xs.push_back((*spaces[i])[idx[i]]);
            out.push_back(Value::tuple(std::move(xs)));
        });
        break;
    }
    case TypeKind::Matrix: {
        const std::vector<Value>& es = enumerated_space(t.element(), cap);
        int64_t cells = 1;
        for (size_t d = 0; d < t.matrix_dims(); ++d) cells *= index_size(t.index_set(d));
        std::vector<size_t> sizes((size_t)cells, es.size());
        cartesian(sizes, [&](const std::vector<size_t>& idx) {
            std::vector<Value> xs;
            xs.reserve(idx.size());
            for (size_t p : idx) xs.push_back(es[p]);
            out.push_back(Value::matrix(std::move(xs)));
        });
        break;
    }
    case TypeKind::Set: {
        const std::vector<Value>& es = enumerated_space(t.element(), cap);
        int klo = t.attr.kind == SizeKind::Exact ? t.attr.n : 0;
        int khi = t.attr.n;
        for (int k = klo; k <= khi; ++k)
            combinations(es.size(), (size_t)k, [&](const std::vector<size_t>& idx) {
                std::vector<Value> xs;
                xs.reserve(idx.size());
                for (size_t p : idx) xs.push_back(es[p]);
                out.push_back(Value::mset(std::move(xs)));
            });
        break;
    }
    case TypeKind::MSet: {
        const std::vector<Value>& es = enumerated_space(t.element(), cap);
        int klo = t.attr.kind == SizeKind::Exact ? t.attr.n : 0;
        int khi = t.attr.n;
        std::vector<std::pair<size_t, int>> cur;
        for (int k = klo; k <= khi; ++k)
            bounded_msets(es.size(), k, t.maxOcc, cur, [&]() {
                std::vector<std::pair<Value, int>> entries;
                entries.reserve(cur.size());
                for (auto& [e, m] : cur) entries.emplace_back(es[e], m);
                out.push_back(Value::mset_counted(std::move(entries)));
            });
        break;
    }
    case TypeKind::Function: {
        const std::vector<Value>& fs = enumerated_space(t.from(), cap);
        const std::vector<Value>& ts = enumerated_space(t.to(), cap);
        size_t choices = ts.size() + (t.total ? 0 : 1); // last slot = undefined
        std::vector<size_t> sizes(fs.size(), choices);
        cartesian(sizes, [&](const std::vector<size_t>& idx) {
            std::vector<Value> pairs;
            for (size_t i = 0; i < fs.size(); ++i) {
                if (idx[i] < ts.size()) pairs.push_back(Value::tuple({fs[i], ts[idx[i]]}));
            }
            out.push_back(Value::mset(std::move(pairs)));
        });
        break;
    }
    case TypeKind::Relation: {
        std::vector<const std::vector<Value>*> spaces;
        std::vector<size_t> sizes;
        for (const Type& c : t.children) {
            spaces.push_back(&enumerated_space(c, cap));
            sizes.push_back(spaces.back()->size());
        }
        std::vector<Value> tuples;
        cartesian(sizes, [&](const std::vector<size_t>& idx) {
            std::vector<Value> xs;
            for (size_t i = 0; i < idx.size(); ++i) xs.push_back((*spaces[i])[idx[i]]);
            tuples.push_back(Value::tuple(std::move(xs)));
        });
        if (tuples.size() > 62) fail(Errc::CapExceeded, "relation base space too large");
        uint64_t subsets = uint64_t(1) << tuples.size();
        for (uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<Value> xs;
            for (size_t i = 0; i < tuples.size(); ++i)
                if (mask & (uint64_t(1) << i)) xs.push_back(tuples[i]);
            out.push_back(Value::mset(std::move(xs)));
        }
        break;
    }
    case TypeKind::Partition: {
        const std::vector<Value>& es = enumerated_space(t.from(), cap);
        std::vector<int> label(es.size(), 0);
        partitions_rgs(es.size(), t.numCells, label, [&](int used) {
            std::vector<std::vector<Value>> cells((size_t)used);
            for (size_t i = 0; i < es.size(); ++i) cells[(size_t)label[i] - 1].push_back(es[i]);
            std::vector<Value> cellVals;
            cellVals.reserve(cells.size());
            for (auto& c : cells) cellVals.push_back(Value::mset(std::move(c)));
            out.push_back(Value::mset(std::move(cellVals)));
        });
        break;
    }
    case TypeKind::Sequence: {
        const std::vector<Value>& es = enumerated_space(t.element(), cap);
        for (int l = 0; l <= t.maxLen; ++l) {
            std::vector<size_t> sizes((size_t)l, es.size());
            if (l == 0) {
                out.push_back(Value::seq({}));
                continue;
            }
            cartesian(sizes, [&](const std::vector<size_t>& idx) {
                std::vector<Value> xs;
                xs.reserve(idx.size());
                for (size_t p : idx) xs.push_back(es[p]);
                out.push_back(Value::seq(std::move(xs)));
            });
        }
        break;
    }
    }

    std::sort(out.begin(), out.end(), [&](const Value& a, const Value& b) { return static_lt(a, b, t); });
    return out;
}

const std::vector<Value>& enumerated_space(const Type& t, int64_t cap) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<std::vector<Value>>> cache;
    std::string key = to_string(t);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            if ((int64_t)it->second->size() > cap)
                fail(Errc::CapExceeded, "value space of " + key + " exceeds cap " + std::to_string(cap));
            return *it->second;
        }
    }
    auto vals = std::make_unique<std::vector<Value>>(enumerate_values(t, cap));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, std::move(vals));
    return *it->second;
}

} // namespace symflat
