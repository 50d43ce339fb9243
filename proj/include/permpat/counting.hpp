#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "permpat/bigint.hpp"
#include "permpat/errors.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

/// Rank sequence of a window of distinct integers (1 = smallest).
inline Pattern standardize(std::span<const int> window) {
    if (window.empty()) throw InvalidWindow("standardize: empty window");
    std::vector<int> sorted(window.begin(), window.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidWindow("standardize: duplicate entries");
    std::vector<int> ranks(window.size());
    for (std::size_t i = 0; i < window.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), window[i]);
        ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Pattern(std::move(ranks));
}

inline Pattern standardize(const std::vector<int>& window) {
    return standardize(std::span<const int>(window));
}

namespace detail {

/// The six length-3 patterns in lexicographic order.
inline const std::array<std::array<int, 3>, 6>& length3_tables() {
    static const std::array<std::array<int, 3>, 6> t = {{
        {{1, 2, 3}}, {{1, 3, 2}}, {{2, 1, 3}}, {{2, 3, 1}}, {{3, 1, 2}}, {{3, 2, 1}},
    }};
    return t;
}

inline int length3_index(std::span<const int> p) {
    const auto& t = length3_tables();
    for (int i = 0; i < 6; ++i)
        if (std::equal(p.begin(), p.end(), t[static_cast<std::size_t>(i)].begin())) return i;
    throw InternalError("length3_index: not a length-3 pattern");
}

/// Joint counts of all six length-3 patterns in one O(n^2) pass.
///
/// Maintains less[x] = #{i < j : v_i < x} incrementally while j advances;
/// each pair (j,k) with j < k then resolves the count of valid first
/// positions i in O(1). Indexing into the result follows length3_tables().
inline std::array<long long, 6> count3_all(std::span<const int> v, std::vector<int>& less) {
    const int n = static_cast<int>(v.size());
    less.assign(static_cast<std::size_t>(n) + 1, 0);
    std::array<long long, 6> c{};
    for (int j = 0; j < n; ++j) {
        const int vj = v[static_cast<std::size_t>(j)];
        const long long before = j;
        const int* lp = less.data();
        for (int k = j + 1; k < n; ++k) {
            const int vk = v[static_cast<std::size_t>(k)];
            if (vj < vk) {
                c[0] += lp[vj];           // 123: v_i < v_j
                c[2] += lp[vk] - lp[vj];  // 213: v_j < v_i < v_k
                c[4] += before - lp[vk];  // 312: v_i > v_k
            } else {
                c[1] += lp[vk];           // 132: v_i < v_k
                c[3] += lp[vj] - lp[vk];  // 231: v_k < v_i < v_j
                c[5] += before - lp[vj];  // 321: v_i > v_j
            }
        }
        for (int x = vj + 1; x <= n; ++x) ++less[static_cast<std::size_t>(x)];
    }
    return c;
}

inline std::array<long long, 6> count3_all(std::span<const int> v) {
    std::vector<int> scratch;
    return count3_all(v, scratch);
}

/// Counts of the 12 and 21 patterns.
inline std::array<long long, 2> count2_all(std::span<const int> v) {
    const int n = static_cast<int>(v.size());
    std::array<long long, 2> c{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            ++c[v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)] ? 0 : 1];
    return c;
}

/// Exhaustive scan of all C(n,3) position triples against one pattern.
inline long long naive3(std::span<const int> v, std::span<const int> p) {
    const int n = static_cast<int>(v.size());
    const bool o12 = p[0] < p[1], o13 = p[0] < p[2], o23 = p[1] < p[2];
    long long count = 0;
    for (int i = 0; i < n; ++i) {
        const int vi = v[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const int vj = v[static_cast<std::size_t>(j)];
            if ((vi < vj) != o12) continue;
            for (int k = j + 1; k < n; ++k) {
                const int vk = v[static_cast<std::size_t>(k)];
                if ((vi < vk) == o13 && (vj < vk) == o23) ++count;
            }
        }
    }
    return count;
}

inline long long naive2(std::span<const int> v, std::span<const int> p) {
    const int n = static_cast<int>(v.size());
    const bool o12 = p[0] < p[1];
    long long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(j)]) == o12) ++count;
    return count;
}

/// Exhaustive scan of all C(n,k) position subsets, compared pairwise against
/// the pattern (pairwise agreement is equivalent to standardization equality).
inline BigInt naive_general(std::span<const int> v, std::span<const int> p) {
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(p.size());
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    BigInt count = 0;
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k; ++b) {
                const bool vo = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                                v[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
                if (vo != (p[static_cast<std::size_t>(a)] < p[static_cast<std::size_t>(b)])) {
                    ok = false;
                    break;
                }
            }
        if (ok) ++count;
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < k; ++s)
            idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
    }
    return count;
}

/// First-occurrence test with early exit; k == 3 specialization.
inline bool contains3(std::span<const int> v, std::span<const int> p) {
    const int n = static_cast<int>(v.size());
    const bool o12 = p[0] < p[1], o13 = p[0] < p[2], o23 = p[1] < p[2];
    for (int i = 0; i < n; ++i) {
        const int vi = v[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const int vj = v[static_cast<std::size_t>(j)];
            if ((vi < vj) != o12) continue;
            for (int k = j + 1; k < n; ++k) {
                const int vk = v[static_cast<std::size_t>(k)];
                if ((vi < vk) == o13 && (vj < vk) == o23) return true;
            }
        }
    }
    return false;
}

/// Lexicographic backtracking over position subsets; collects occurrences
/// until limit, pruning prefixes whose pairwise order already mismatches.
inline void find_occurrences_impl(std::span<const int> v, std::span<const int> p,
                                  std::optional<std::size_t> limit,
                                  std::vector<int>& chosen,
                                  std::vector<Occurrence>& out) {
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(p.size());
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) {
        Occurrence occ;
        occ.positions.reserve(chosen.size());
        for (int pos : chosen) occ.positions.push_back(pos + 1);
        out.push_back(std::move(occ));
        return;
    }
    const int first = depth == 0 ? 0 : chosen.back() + 1;
    for (int cand = first; cand <= n - (k - depth); ++cand) {
        if (limit && out.size() >= *limit) return;
        bool ok = true;
        for (int a = 0; a < depth; ++a) {
            const bool vo = v[static_cast<std::size_t>(chosen[static_cast<std::size_t>(a)])] <
                            v[static_cast<std::size_t>(cand)];
            if (vo != (p[static_cast<std::size_t>(a)] < p[static_cast<std::size_t>(depth)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        find_occurrences_impl(v, p, limit, chosen, out);
        chosen.pop_back();
        if (limit && out.size() >= *limit) return;
    }
}

} // namespace detail

/// Exhaustive-subset occurrence count; the oracle the fast kernel is checked
/// against. Returns 0 when the pattern is longer than the permutation.
inline BigInt count_occurrences_naive(const Permutation& perm, const Pattern& pattern) {
    const auto v = perm.span();
    const auto p = pattern.span();
    if (pattern.size() > perm.size()) return 0;
    switch (pattern.size()) {
        case 1: return perm.size();
        case 2: return detail::naive2(v, p);
        case 3: return detail::naive3(v, p);
        default: return detail::naive_general(v, p);
    }
}

/// O(n^2) occurrence count for patterns of length 1..3.
inline BigInt count_occurrences_fast(const Permutation& perm, const Pattern& pattern) {
    const auto v = perm.span();
    const auto p = pattern.span();
    switch (pattern.size()) {
        case 1: return perm.size();
        case 2: return detail::count2_all(v)[p[0] < p[1] ? 0 : 1];
        case 3: {
            if (perm.size() < 3) return 0;
            return detail::count3_all(v)[static_cast<std::size_t>(detail::length3_index(p))];
        }
        default:
            throw UnsupportedPattern("count_occurrences_fast: pattern length " +
                                     std::to_string(pattern.size()) + " > 3");
    }
}

/// Occurrences in lexicographic order of position lists, truncated at limit.
inline std::vector<Occurrence> find_occurrences(const Permutation& perm, const Pattern& pattern,
                                                std::optional<std::size_t> limit = std::nullopt) {
    std::vector<Occurrence> out;
    if (pattern.size() > perm.size() || (limit && *limit == 0)) return out;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    detail::find_occurrences_impl(perm.span(), pattern.span(), limit, chosen, out);
    return out;
}

namespace detail {

inline bool contains_span(std::span<const int> v, std::span<const int> p) {
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(p.size());
    if (k > n) return false;
    switch (k) {
        case 1: return n >= 1;
        case 2: {
            // a 12-pattern exists iff some adjacent ascent does; likewise 21
            const bool asc = p[0] < p[1];
            for (int i = 0; i + 1 < n; ++i) {
                const bool step = v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i + 1)];
                if (step == asc) return true;
            }
            return false;
        }
        case 3: return contains3(v, p);
        default: {
            std::vector<Occurrence> out;
            std::vector<int> chosen;
            chosen.reserve(static_cast<std::size_t>(k));
            find_occurrences_impl(v, p, std::size_t{1}, chosen, out);
            return !out.empty();
        }
    }
}

} // namespace detail

/// True iff perm has at least one occurrence of pattern; short-circuits.
inline bool contains(const Permutation& perm, const Pattern& pattern) {
    return detail::contains_span(perm.span(), pattern.span());
}

inline bool avoids(const Permutation& perm, const Pattern& pattern) {
    return !contains(perm, pattern);
}

} // namespace permpat
