#pragma once

// Shared helpers for the test suite. The brute-force counter here is written
// independently of the library kernels (recursive subset enumeration with
// direct order-isomorphism checks) so the two can cross-check each other.

#include <permpat/permpat.hpp>

#include <random>
#include <span>
#include <vector>

namespace testsupport {

using permpat::BigInt;

namespace detail {

inline bool order_isomorphic(std::span<const int> window, std::span<const int> p) {
    for (std::size_t i = 0; i < window.size(); ++i)
        for (std::size_t j = i + 1; j < window.size(); ++j)
            if ((window[i] < window[j]) != (p[i] < p[j])) return false;
    return true;
}

inline void brute_count_rec(std::span<const int> v, std::span<const int> p,
                            std::size_t from, std::vector<int>& window, BigInt& total) {
    if (window.size() == p.size()) {
        if (order_isomorphic(window, p)) ++total;
        return;
    }
    const std::size_t need = p.size() - window.size();
    for (std::size_t i = from; i + need <= v.size(); ++i) {
        window.push_back(v[i]);
        brute_count_rec(v, p, i + 1, window, total);
        window.pop_back();
    }
}

} // namespace detail

/// Exhaustive occurrence count via recursive subset enumeration.
inline BigInt brute_count(const permpat::Permutation& perm, const permpat::Pattern& pattern) {
    BigInt total = 0;
    std::vector<int> window;
    detail::brute_count_rec(perm.span(), pattern.span(), 0, window, total);
    return total;
}

inline BigInt catalan(long long n) {
    return permpat::binomial(2 * n, n) / (n + 1);
}

inline permpat::Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return permpat::Permutation(std::move(v));
}

/// All of S_n as Permutation objects, lexicographic.
inline std::vector<permpat::Permutation> all_permutations(int n) {
    std::vector<permpat::Permutation> out;
    for (permpat::PermutationStream st(n); st.valid(); st.advance())
        out.emplace_back(st.current());
    return out;
}

inline const std::vector<permpat::Pattern>& short_patterns() {
    static const std::vector<permpat::Pattern> pats = {
        permpat::Pattern::parse("12"),  permpat::Pattern::parse("21"),
        permpat::Pattern::parse("123"), permpat::Pattern::parse("132"),
        permpat::Pattern::parse("213"), permpat::Pattern::parse("231"),
        permpat::Pattern::parse("312"), permpat::Pattern::parse("321")};
    return pats;
}

} // namespace testsupport
