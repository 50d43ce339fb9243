#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "permpat/bigint.hpp"
#include "permpat/census.hpp"
#include "permpat/counting.hpp"
#include "permpat/errors.hpp"
#include "permpat/formulas.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

/// The values a, b, c of a matched length-3 occurrence in host order, with
/// the witnessing positions. For a 123-occurrence a < b < c; for a
/// 132-occurrence a < c < b.
struct PatternTriple {
    int a = 0;
    int b = 0;
    int c = 0;
    Occurrence positions;
};

/// The unique occurrence of a length-3 pattern, or an error naming the
/// failing check (no occurrence / ambiguous, with the first two witnesses).
inline PatternTriple locate_unique(const Permutation& perm, const Pattern& pattern,
                                   const std::string& context = "locate_unique") {
    if (pattern.size() != 3)
        throw DomainError(context + ": pattern must have length 3");
    const auto occs = find_occurrences(perm, pattern, 2);
    if (occs.empty())
        throw NoOccurrence(context + ": no " + pattern.str() + "-occurrence in (" +
                           perm.str() + ")");
    if (occs.size() > 1)
        throw AmbiguousOccurrence(context + ": multiple " + pattern.str() +
                                  "-occurrences in (" + perm.str() + "), first two at (" +
                                  detail::format_comma_values(occs[0].positions) + ") and (" +
                                  detail::format_comma_values(occs[1].positions) + ")");
    PatternTriple t;
    t.positions = occs[0];
    t.a = perm.at(occs[0].positions[0]);
    t.b = perm.at(occs[0].positions[1]);
    t.c = perm.at(occs[0].positions[2]);
    return t;
}

namespace detail {

inline Permutation swap_bc(const Permutation& perm, const PatternTriple& t) {
    std::vector<int> v(perm.values());
    std::swap(v[static_cast<std::size_t>(t.positions.positions[1] - 1)],
              v[static_cast<std::size_t>(t.positions.positions[2] - 1)]);
    return Permutation(std::move(v));
}

} // namespace detail

/// Theorem 2's map: on S = {one 123-occurrence, no 132}, swap the values b
/// and c of the unique 123-occurrence. Output lies in T = {one 132, no 123}.
/// The domain precondition is verified, not assumed.
inline Permutation phi(const Permutation& s) {
    if (contains(s, Pattern::parse("132")))
        throw NotInDomain("phi: input contains a 132-pattern: (" + s.str() + ")");
    return detail::swap_bc(s, locate_unique(s, Pattern::parse("123"), "phi"));
}

/// Inverse of phi: on T = {one 132-occurrence, no 123}, swap the values b
/// and c of the unique 132-occurrence.
inline Permutation phi_inverse(const Permutation& t) {
    if (contains(t, Pattern::parse("123")))
        throw NotInDomain("phi_inverse: input contains a 123-pattern: (" + t.str() + ")");
    return detail::swap_bc(t, locate_unique(t, Pattern::parse("132"), "phi_inverse"));
}

/// Exhaustive verification result over S_n. Failures are data, not errors.
struct BijectionReport {
    int n = 0;
    BigInt size_s;
    BigInt size_t_class;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["sizeS"] = size_s.str();
        j["sizeT"] = size_t_class.str();
        j["failures"] = failures;
        return j.dump();
    }
};

/// Enumerates S and T by filtering S_n, then checks: phi maps S into T
/// injectively, phi_inverse is a two-sided inverse, and |S| = |T| =
/// theorem1_closed(n) (for n >= 3).
inline BijectionReport verify_bijection(int n, int budget = kDefaultCensusBudget) {
    if (n < 0) throw DomainError("verify_bijection: n must be >= 0");
    detail::check_budget(n, budget, "verify_bijection");

    BijectionReport rep;
    rep.n = n;

    std::vector<Permutation> class_s;
    std::set<std::vector<int>> class_t;
    std::vector<int> scratch;
    for (PermutationStream st(n); st.valid(); st.advance()) {
        const auto c = detail::count3_all(st.current(), scratch);
        if (c[0] == 1 && c[1] == 0) class_s.emplace_back(st.current());
        if (c[0] == 0 && c[1] == 1) class_t.insert(st.current());
    }
    rep.size_s = class_s.size();
    rep.size_t_class = class_t.size();

    if (rep.size_s != rep.size_t_class)
        rep.failures.push_back("|S|=" + rep.size_s.str() + " differs from |T|=" +
                               rep.size_t_class.str());
    if (n >= 3 && rep.size_s != theorem1_closed(n))
        rep.failures.push_back("|S|=" + rep.size_s.str() + " differs from closed form " +
                               theorem1_closed(n).str());

    std::set<std::vector<int>> images;
    for (const Permutation& s : class_s) {
        Permutation t = Permutation::identity(0);
        try {
            t = phi(s);
        } catch (const Error& e) {
            rep.failures.push_back("phi failed on (" + s.str() + "): " + e.what());
            continue;
        }
        if (!class_t.count(t.values()))
            rep.failures.push_back("phi((" + s.str() + ")) = (" + t.str() + ") is not in T");
        if (!images.insert(t.values()).second)
            rep.failures.push_back("phi is not injective at image (" + t.str() + ")");
        try {
            if (phi_inverse(t) != s)
                rep.failures.push_back("phi_inverse(phi((" + s.str() + "))) != input");
        } catch (const Error& e) {
            rep.failures.push_back("phi_inverse failed on (" + t.str() + "): " + e.what());
        }
    }
    for (const auto& tv : class_t) {
        const Permutation t(tv);
        try {
            if (phi(phi_inverse(t)) != t)
                rep.failures.push_back("phi(phi_inverse((" + t.str() + "))) != input");
        } catch (const Error& e) {
            rep.failures.push_back("round trip failed on (" + t.str() + "): " + e.what());
        }
    }
    return rep;
}

} // namespace permpat
