#pragma once

#include <array>
#include <string>
#include <vector>

#include "permpat/bigint.hpp"
#include "permpat/errors.hpp"
#include "permpat/sequence.hpp"

namespace permpat {

/// Permutations of S_n with exactly one 12-occurrence: n - 1.
inline BigInt lemma1(long long n) {
    if (n < 2) throw DomainError("lemma1: requires n >= 2");
    return BigInt(n - 1);
}

/// Permutations of S_n avoiding both 123 and 132: 2^(n-1).
inline BigInt lemma2(long long n) {
    if (n < 1) throw DomainError("lemma2: requires n >= 1");
    return pow2(n - 1);
}

/// Alternate evaluator for lemma2 via the insertion recurrence
/// f_n = sum_{i=1..n} f_{n-i} + 1, f_0 = 0. Returned with start index 0.
inline Sequence lemma2_recurrence(long long n_max) {
    if (n_max < 1) throw DomainError("lemma2_recurrence: requires n_max >= 1");
    std::vector<BigInt> f(static_cast<std::size_t>(n_max) + 1);
    BigInt prefix = 0;  // sum of f_0..f_{n-1}
    for (long long n = 1; n <= n_max; ++n) {
        prefix += f[static_cast<std::size_t>(n - 1)];
        f[static_cast<std::size_t>(n)] = prefix + 1;
    }
    return Sequence{0, std::move(f)};
}

/// Permutations with exactly one 123 and no 132: (n-2)*2^(n-3).
inline BigInt theorem1_closed(long long n) {
    if (n < 3) throw DomainError("theorem1_closed: requires n >= 3");
    return BigInt(n - 2) * pow2(n - 3);
}

/// g_n = sum_{i=1..n} g_{n-i} + sum_{i=3..n-1} (i-2)*2^(n-i-1) + (n-2),
/// with g_0 = g_1 = g_2 = 0. Returned with start index 0; equals
/// theorem1_closed pointwise for n >= 3.
inline Sequence theorem1_recurrence(long long n_max) {
    if (n_max < 3) throw DomainError("theorem1_recurrence: requires n_max >= 3");
    std::vector<BigInt> g(static_cast<std::size_t>(n_max) + 1);
    BigInt prefix = 0;  // sum of g_0..g_{n-1}
    for (long long n = 1; n <= n_max; ++n) {
        prefix += g[static_cast<std::size_t>(n - 1)];
        if (n < 3) continue;
        BigInt middle = 0;
        for (long long i = 3; i <= n - 1; ++i) middle += BigInt(i - 2) * pow2(n - i - 1);
        g[static_cast<std::size_t>(n)] = prefix + middle + BigInt(n - 2);
    }
    return Sequence{0, std::move(g)};
}

/// Permutations with exactly one 132 and no 123: equinumerous with the
/// theorem1 class, (n-2)*2^(n-3).
inline BigInt theorem2_closed(long long n) {
    if (n < 3) throw DomainError("theorem2_closed: requires n >= 3");
    return BigInt(n - 2) * pow2(n - 3);
}

/// Permutations with exactly one 123 and exactly one 132: (n-3)(n-4)*2^(n-5).
inline BigInt theorem3_closed(long long n) {
    if (n < 5) throw DomainError("theorem3_closed: requires n >= 5");
    return BigInt(n - 3) * BigInt(n - 4) * pow2(n - 5);
}

/// The combined recurrence exactly as printed:
/// g_n = sum_{i=1..n} g_{n-i} + sum_{i=1..n-4} (2i(n-i-4)+n-3)*2^(n-i-4),
/// bases g_1 = g_2 = g_3 = g_4 = 0 (and g_0 = 0 so the full history sum is
/// defined). Diverges from theorem3_closed at n = 6 (15 vs 12); this
/// evaluator exists to reproduce that divergence, and the corrected form
/// lives in theorem3_recurrence_subcases. Returned with start index 1.
inline Sequence theorem3_recurrence_printed(long long n_max) {
    if (n_max < 5) throw DomainError("theorem3_recurrence_printed: requires n_max >= 5");
    std::vector<BigInt> g(static_cast<std::size_t>(n_max) + 1);
    BigInt prefix = 0;  // sum of g_0..g_{n-1}
    for (long long n = 1; n <= n_max; ++n) {
        prefix += g[static_cast<std::size_t>(n - 1)];
        if (n < 5) continue;
        BigInt inhom = 0;
        for (long long i = 1; i <= n - 4; ++i)
            inhom += (BigInt(2) * BigInt(i) * BigInt(n - i - 4) + BigInt(n - 3)) * pow2(n - i - 4);
        g[static_cast<std::size_t>(n)] = prefix + inhom;
    }
    return Sequence{1, std::vector<BigInt>(g.begin() + 1, g.end())};
}

namespace detail {

/// The four subcase contributions at index n, given the history sum
/// prefix = sum of g_0..g_{n-1}:
///   [0] Case I Subcase A:  sum_{i=1..n} g_{n-i}
///   [1] Case I Subcase B:  sum_{i=3..n-3} (i-2)(n-i-2)*2^(n-i-3)  (corrected term)
///   [2] Case II Subcase A: sum_{i=4..n-1} (i-3)*2^(n-i-1)
///   [3] Case II Subcase B: sum_{i=2..n-3} (n-i-2)*2^(n-i-3)
inline std::array<BigInt, 4> theorem3_parts(long long n, const BigInt& prefix) {
    std::array<BigInt, 4> parts{prefix, BigInt(0), BigInt(0), BigInt(0)};
    for (long long i = 3; i <= n - 3; ++i)
        parts[1] += BigInt(i - 2) * BigInt(n - i - 2) * pow2(n - i - 3);
    for (long long i = 4; i <= n - 1; ++i) parts[2] += BigInt(i - 3) * pow2(n - i - 1);
    for (long long i = 2; i <= n - 3; ++i) parts[3] += BigInt(n - i - 2) * pow2(n - i - 3);
    return parts;
}

} // namespace detail

/// Sum of the four subcase contributions per n (with the corrected Case I
/// Subcase B term); equals theorem3_closed pointwise for all n >= 5.
/// Returned with start index 1; bases g_1..g_4 = 0.
inline Sequence theorem3_recurrence_subcases(long long n_max) {
    if (n_max < 5) throw DomainError("theorem3_recurrence_subcases: requires n_max >= 5");
    std::vector<BigInt> g(static_cast<std::size_t>(n_max) + 1);
    BigInt prefix = 0;
    for (long long n = 1; n <= n_max; ++n) {
        prefix += g[static_cast<std::size_t>(n - 1)];
        if (n < 5) continue;
        const auto parts = detail::theorem3_parts(n, prefix);
        g[static_cast<std::size_t>(n)] = parts[0] + parts[1] + parts[2] + parts[3];
    }
    return Sequence{1, std::vector<BigInt>(g.begin() + 1, g.end())};
}

/// The four subcase contributions at index n (see detail::theorem3_parts).
inline std::array<BigInt, 4> theorem3_subcase_parts(long long n) {
    if (n < 5) throw DomainError("theorem3_subcase_parts: requires n >= 5");
    std::vector<BigInt> g(static_cast<std::size_t>(n));
    BigInt prefix = 0;
    for (long long m = 1; m < n; ++m) {
        prefix += g[static_cast<std::size_t>(m - 1)];
        if (m < 5) continue;
        const auto parts = detail::theorem3_parts(m, prefix);
        g[static_cast<std::size_t>(m)] = parts[0] + parts[1] + parts[2] + parts[3];
    }
    prefix += g[static_cast<std::size_t>(n - 1)];
    return detail::theorem3_parts(n, prefix);
}

/// Permutations of S_n with exactly one 123 (no other constraint):
/// (3/n)*C(2n, n+3); always an integer (divisibility asserted).
inline BigInt noonan(long long n) {
    if (n < 3) throw DomainError("noonan: requires n >= 3");
    const BigInt num = 3 * binomial(2 * n, n + 3);
    if (num % n != 0) throw InternalError("noonan: nonintegral value");
    return num / n;
}

/// Permutations of S_n with exactly one 132: C(2n-3, n-3).
inline BigInt bona(long long n) {
    if (n < 3) throw DomainError("bona: requires n >= 3");
    return binomial(2 * n - 3, n - 3);
}

struct FormulaInfo {
    std::string id;
    long long min_n;
    std::string description;
};

/// Stable identifiers addressable from the CLI verify command.
inline const std::vector<FormulaInfo>& formula_registry() {
    static const std::vector<FormulaInfo> reg = {
        {"lemma1", 2, "exactly one 12: n-1"},
        {"lemma2", 1, "avoid 123 and 132: 2^(n-1)"},
        {"thm1", 3, "one 123, no 132: (n-2)*2^(n-3)"},
        {"thm2", 3, "one 132, no 123: (n-2)*2^(n-3)"},
        {"thm3", 5, "one 123 and one 132: (n-3)(n-4)*2^(n-5)"},
        {"thm3-printed", 5, "combined thm3 recurrence, uncorrected form (diverges at n=6)"},
        {"noonan", 3, "exactly one 123, unrestricted: (3/n)*C(2n,n+3)"},
        {"bona", 3, "exactly one 132, unrestricted: C(2n-3,n-3)"},
    };
    return reg;
}

inline const FormulaInfo* find_formula(const std::string& id) {
    for (const auto& info : formula_registry())
        if (info.id == id) return &info;
    return nullptr;
}

/// Value of the formula `id` at index n.
inline BigInt evaluate_formula(const std::string& id, long long n) {
    if (id == "lemma1") return lemma1(n);
    if (id == "lemma2") return lemma2(n);
    if (id == "thm1") return theorem1_closed(n);
    if (id == "thm2") return theorem2_closed(n);
    if (id == "thm3") return theorem3_closed(n);
    if (id == "thm3-printed") return theorem3_recurrence_printed(n).at(n);
    if (id == "noonan") return noonan(n);
    if (id == "bona") return bona(n);
    throw DomainError("evaluate_formula: unknown formula id '" + id + "'");
}

} // namespace permpat
