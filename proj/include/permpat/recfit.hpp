#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permpat/bigint.hpp"
#include "permpat/errors.hpp"
#include "permpat/sequence.hpp"

namespace permpat {

/// Integer-coefficient polynomial in the index variable m, constant term
/// first; no trailing zero coefficients (the zero polynomial is empty).
struct Polynomial {
    std::vector<BigInt> c;

    static Polynomial from(std::vector<BigInt> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return Polynomial{std::move(v)};
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    const BigInt& leading() const {
        if (is_zero()) throw InternalError("Polynomial::leading: zero polynomial");
        return c.back();
    }

    BigInt eval(long long m) const {
        BigInt acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * m + c[i];
        return acc;
    }

    Polynomial negated() const {
        Polynomial p = *this;
        for (auto& k : p.c) k = -k;
        return p;
    }

    /// Descending powers with internal signs, e.g. "2m+4", "m^2-3m", "-m".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int p = degree(); p >= 0; --p) {
            const BigInt& k = c[static_cast<std::size_t>(p)];
            if (k == 0) continue;
            const BigInt a = boost::multiprecision::abs(k);
            if (!out.empty()) out += k < 0 ? "-" : "+";
            else if (k < 0) out += "-";
            if (p == 0) {
                out += a.str();
            } else {
                if (a != 1) out += a.str();
                out += "m";
                if (p >= 2) out += "^" + std::to_string(p);
            }
        }
        return out;
    }
};

/// Linear recurrence with polynomial coefficients, in operator form:
/// sum_{t=0..r} coeffs[t](m) * a_{m+t} = 0 at every valid index m.
/// Invariants: coeffs[r] is not the zero polynomial; the integer content
/// across all coefficients is 1; the leading coefficient of coeffs[r] is
/// positive.
struct PolyRecurrence {
    std::vector<Polynomial> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    int degree() const {
        int d = 0;
        for (const auto& p : coeffs) d = std::max(d, std::max(p.degree(), 0));
        return d;
    }

    /// Human form, e.g. "4 a(m) - 4 a(m+1) + a(m+2) = 0". Terms ascend in t;
    /// for display only, the relation is negated when the first printed term
    /// would lead with a negative coefficient.
    std::string human() const {
        int first = -1;
        for (std::size_t t = 0; t < coeffs.size(); ++t)
            if (!coeffs[t].is_zero()) {
                first = static_cast<int>(t);
                break;
            }
        if (first < 0) return "0 = 0";
        const bool flip = coeffs[static_cast<std::size_t>(first)].leading() < 0;
        std::string out;
        bool started = false;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            if (coeffs[t].is_zero()) continue;
            Polynomial p = flip ? coeffs[t].negated() : coeffs[t];
            const bool neg = p.leading() < 0;
            if (neg) p = p.negated();
            std::string term;
            if (p.degree() == 0) {
                if (p.c[0] != 1) term += p.c[0].str() + " ";
            } else {
                term += "(" + p.str() + ") ";
            }
            term += t == 0 ? "a(m)" : "a(m+" + std::to_string(t) + ")";
            if (!started) {
                out += (neg ? "-" : "") + term;
                started = true;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
        return out + " = 0";
    }

    /// Canonical JSON: coefficient lists constant term first, exact decimal.
    std::string to_json() const {
        nlohmann::ordered_json j;
        j["order"] = order();
        j["degree"] = degree();
        auto cs = nlohmann::ordered_json::array();
        for (const auto& p : coeffs) {
            auto one = nlohmann::ordered_json::array();
            for (const auto& k : p.c) one.push_back(k.str());
            if (p.is_zero()) one.push_back("0");
            cs.push_back(std::move(one));
        }
        j["coefficients"] = std::move(cs);
        return j.dump();
    }
};

namespace detail {

using RatMatrix = std::vector<std::vector<BigRat>>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(RatMatrix& a, int cols) {
    std::vector<int> pivots;
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int row = rank; row < rows; ++row)
            if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(sel)]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        const BigRat inv = prow[static_cast<std::size_t>(col)];
        for (int j = col; j < cols; ++j) prow[static_cast<std::size_t>(j)] /= inv;
        for (int row = 0; row < rows; ++row) {
            if (row == rank) continue;
            auto& r = a[static_cast<std::size_t>(row)];
            const BigRat f = r[static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < cols; ++j)
                r[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

/// Canonical nullspace basis (one vector per free column, ascending).
inline std::vector<std::vector<BigRat>> nullspace(RatMatrix a, int cols) {
    const auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<BigRat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<BigRat> x(static_cast<std::size_t>(cols), BigRat(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<std::size_t>(pivots[i])] = -a[i][static_cast<std::size_t>(free)];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Scale a rational vector to a primitive integer vector, then orient it so
/// the highest nonzero entry of the trailing (c_r) block is positive.
inline std::vector<BigInt> normalize_solution(const std::vector<BigRat>& x, int block) {
    BigInt lcm_den = 1;
    for (const auto& q : x)
        lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(boost::multiprecision::denominator(q)));
    std::vector<BigInt> v;
    v.reserve(x.size());
    for (const auto& q : x)
        v.push_back(BigInt(boost::multiprecision::numerator(q)) * (lcm_den / BigInt(boost::multiprecision::denominator(q))));
    BigInt g = 0;
    for (const auto& k : v) g = boost::multiprecision::gcd(g, k);
    if (g > 1)
        for (auto& k : v) k /= g;
    for (std::size_t i = v.size(); i-- > v.size() - static_cast<std::size_t>(block);) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            for (auto& k : v) k = -k;
        break;
    }
    return v;
}

inline std::optional<PolyRecurrence> fit_shape(const Sequence& seq, int r, int d) {
    const int cols = (r + 1) * (d + 1);
    const long long rows = static_cast<long long>(seq.terms.size()) - r;
    RatMatrix a(static_cast<std::size_t>(rows),
                std::vector<BigRat>(static_cast<std::size_t>(cols)));
    for (long long e = 0; e < rows; ++e) {
        const long long m = seq.start_index + e;
        for (int t = 0; t <= r; ++t) {
            const BigInt& term = seq.terms[static_cast<std::size_t>(e + t)];
            BigInt mp = 1;
            for (int p = 0; p <= d; ++p) {
                a[static_cast<std::size_t>(e)][static_cast<std::size_t>(t * (d + 1) + p)] =
                    BigRat(term * mp);
                mp *= m;
            }
        }
    }
    const auto basis = nullspace(std::move(a), cols);
    if (basis.empty()) return std::nullopt;

    // candidates must have c_r not identically zero; among them, pick the
    // vector with the fewest trailing zeros (first on ties)
    int best = -1;
    std::size_t best_tz = 0;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto& x = basis[b];
        bool cr_nonzero = false;
        for (int p = 0; p <= d; ++p)
            if (x[static_cast<std::size_t>(r * (d + 1) + p)] != 0) {
                cr_nonzero = true;
                break;
            }
        if (!cr_nonzero) continue;
        std::size_t tz = 0;
        for (std::size_t i = x.size(); i-- > 0 && x[i] == 0;) ++tz;
        if (best < 0 || tz < best_tz) {
            best = static_cast<int>(b);
            best_tz = tz;
        }
    }
    if (best < 0) return std::nullopt;

    const auto flat = normalize_solution(basis[static_cast<std::size_t>(best)], d + 1);
    PolyRecurrence rec;
    for (int t = 0; t <= r; ++t) {
        std::vector<BigInt> pc(flat.begin() + t * (d + 1), flat.begin() + (t + 1) * (d + 1));
        rec.coeffs.push_back(Polynomial::from(std::move(pc)));
    }
    return rec;
}

} // namespace detail

/// Searches shapes in ascending (order, degree) and returns the normalized
/// recurrence for the first shape whose exact homogeneous system — one
/// equation per available index, guard equations included — has a nonzero
/// solution with c_r not identically zero. nullopt when no shape fits.
inline std::optional<PolyRecurrence> fit(const Sequence& seq, int max_order, int max_degree,
                                         int guard = 2) {
    if (max_order < 1) throw DomainError("fit: max_order must be >= 1");
    if (max_degree < 0) throw DomainError("fit: max_degree must be >= 0");
    if (guard < 0) throw DomainError("fit: guard must be >= 0");
    const long long have = static_cast<long long>(seq.terms.size());
    const long long smallest = 2 + 1 + guard;  // (r+1)(d+1) + r + guard at r=1, d=0
    if (have < smallest)
        throw InsufficientData("fit: sequence has " + std::to_string(have) +
                               " terms; the smallest shape (r=1, d=0) needs " +
                               std::to_string(smallest));
    for (int r = 1; r <= max_order; ++r)
        for (int d = 0; d <= max_degree; ++d) {
            const long long need = static_cast<long long>(r + 1) * (d + 1) + r + guard;
            if (have < need) continue;
            if (auto rec = detail::fit_shape(seq, r, d)) return rec;
        }
    return std::nullopt;
}

/// Extends seed exactly to index n_target by solving the relation for its
/// top term; truncates if the seed already extends past n_target.
inline Sequence apply(const PolyRecurrence& rec, const Sequence& seed, long long n_target) {
    const int r = rec.order();
    if (r < 0 || rec.coeffs[static_cast<std::size_t>(r)].is_zero())
        throw DomainError("apply: recurrence has a zero leading coefficient polynomial");
    if (static_cast<long long>(seed.terms.size()) < r)
        throw InsufficientData("apply: seed supplies fewer than order=" + std::to_string(r) +
                               " terms");
    if (n_target < seed.start_index)
        throw DomainError("apply: n_target precedes the seed start index");
    Sequence out = seed;
    while (out.end_index() < n_target) {
        const long long m = out.end_index() - r + 1;
        const BigInt cr = rec.coeffs[static_cast<std::size_t>(r)].eval(m);
        if (cr == 0)
            throw SingularLeadingCoefficient(
                "apply: leading coefficient vanishes at index m=" + std::to_string(m));
        BigInt acc = 0;
        for (int t = 0; t < r; ++t)
            acc += rec.coeffs[static_cast<std::size_t>(t)].eval(m) *
                   out.terms[out.terms.size() - static_cast<std::size_t>(r) +
                             static_cast<std::size_t>(t)];
        const BigInt num = -acc;
        if (num % cr != 0)
            throw DomainError("apply: non-integral extension at index m=" + std::to_string(m));
        out.terms.push_back(num / cr);
    }
    if (out.end_index() > n_target)
        out.terms.resize(static_cast<std::size_t>(n_target - out.start_index + 1));
    return out;
}

/// True iff the relation holds exactly at every index where all needed terms
/// exist (vacuously true when the sequence is shorter than order+1).
inline bool verify(const PolyRecurrence& rec, const Sequence& seq) {
    const int r = rec.order();
    const long long have = static_cast<long long>(seq.terms.size());
    for (long long e = 0; e + r < have; ++e) {
        const long long m = seq.start_index + e;
        BigInt acc = 0;
        for (int t = 0; t <= r; ++t)
            acc += rec.coeffs[static_cast<std::size_t>(t)].eval(m) *
                   seq.terms[static_cast<std::size_t>(e + t)];
        if (acc != 0) return false;
    }
    return true;
}

} // namespace permpat
