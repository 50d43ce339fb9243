#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permpat/bigint.hpp"
#include "permpat/counting.hpp"
#include "permpat/errors.hpp"
#include "permpat/permutation.hpp"

namespace permpat {

/// Default ceiling on census size (n! enumeration); ~4e7 permutations.
inline constexpr int kDefaultCensusBudget = 11;

/// Per-pattern membership rule. Avoid is semantically Exactly(0); the two are
/// evaluated identically.
struct ClassConstraint {
    enum class Kind { Avoid, Exactly, Any };
    Kind kind = Kind::Any;
    long long r = 0;

    static ClassConstraint avoid() { return {Kind::Avoid, 0}; }
    static ClassConstraint exactly(long long r) {
        if (r < 0) throw DomainError("ClassConstraint: r must be nonnegative");
        return {Kind::Exactly, r};
    }
    static ClassConstraint any() { return {Kind::Any, 0}; }
};

using ConstraintList = std::vector<std::pair<Pattern, ClassConstraint>>;

/// Streams S_n in lexicographic order, one permutation at a time. With a
/// fixed first value, streams just that shard; shards taken in first-value
/// order concatenate to the full lexicographic stream.
class PermutationStream {
public:
    explicit PermutationStream(int n, std::optional<int> first = std::nullopt) {
        if (n < 0) throw DomainError("PermutationStream: n must be >= 0");
        v_.resize(static_cast<std::size_t>(n));
        std::iota(v_.begin(), v_.end(), 1);
        if (first) {
            if (*first < 1 || *first > n)
                throw DomainError("PermutationStream: first value out of range");
            v_.erase(std::find(v_.begin(), v_.end(), *first));
            v_.insert(v_.begin(), *first);
            fixed_ = 1;
        }
    }

    bool valid() const { return live_; }
    const std::vector<int>& current() const { return v_; }
    void advance() { live_ = std::next_permutation(v_.begin() + fixed_, v_.end()); }

private:
    std::vector<int> v_;
    std::ptrdiff_t fixed_ = 0;
    bool live_ = true;
};

/// Joint occurrence-count table over S_n: realized count vectors (one entry
/// per pattern, in pattern order) mapped to class cardinalities. Rows are
/// kept sorted, so iteration is lexicographic by count vector.
struct CensusTable {
    int n = 0;
    std::vector<Pattern> patterns;
    std::map<std::vector<long long>, BigInt> rows;

    BigInt total_mass() const {
        BigInt s = 0;
        for (const auto& [key, card] : rows) s += card;
        return s;
    }

    /// Pointwise-additive merge of a table over the same (n, patterns).
    void merge(const CensusTable& other) {
        if (other.n != n || other.patterns != patterns)
            throw InternalError("CensusTable::merge: incompatible tables");
        for (const auto& [key, card] : other.rows) rows[key] += card;
    }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n;
        auto pats = nlohmann::ordered_json::array();
        for (const auto& p : patterns) pats.push_back(p.str());
        j["patterns"] = std::move(pats);
        auto rws = nlohmann::ordered_json::array();
        for (const auto& [key, card] : rows) {
            nlohmann::ordered_json row;
            row["counts"] = key;
            row["cardinality"] = card.str();
            rws.push_back(std::move(row));
        }
        j["rows"] = std::move(rws);
        return j.dump();
    }

    std::string to_csv() const {
        std::ostringstream out;
        for (const auto& p : patterns) out << p.str() << ',';
        out << "cardinality\n";
        for (const auto& [key, card] : rows) {
            for (long long c : key) out << c << ',';
            out << card.str() << '\n';
        }
        return out.str();
    }
};

namespace detail {

inline void check_budget(int n, int budget, const char* op) {
    if (n > budget)
        throw BudgetExceeded(std::string(op) + ": n=" + std::to_string(n) +
                             " exceeds census budget " + std::to_string(budget));
}

struct PatternPlan {
    enum class Kind { Len1, Len2, Len3, General };
    Kind kind = Kind::General;
    int index = 0;
    const Pattern* pattern = nullptr;
};

inline PatternPlan make_pattern_plan(const Pattern& p) {
    const auto s = p.span();
    switch (p.size()) {
        case 1: return {PatternPlan::Kind::Len1, 0, &p};
        case 2: return {PatternPlan::Kind::Len2, s[0] < s[1] ? 0 : 1, &p};
        case 3: return {PatternPlan::Kind::Len3, length3_index(s), &p};
        default: return {PatternPlan::Kind::General, 0, &p};
    }
}

/// Computes one count vector per permutation; the shared length-3 and
/// length-2 kernels run at most once each regardless of pattern count.
struct JointCounter {
    std::vector<PatternPlan> plans;
    bool need3 = false;
    bool need2 = false;
    std::vector<int> scratch;

    explicit JointCounter(const std::vector<Pattern>& patterns) {
        for (const auto& p : patterns) {
            plans.push_back(make_pattern_plan(p));
            need3 = need3 || plans.back().kind == PatternPlan::Kind::Len3;
            need2 = need2 || plans.back().kind == PatternPlan::Kind::Len2;
        }
    }

    void counts(std::span<const int> v, std::vector<long long>& out) {
        std::array<long long, 6> c3{};
        std::array<long long, 2> c2{};
        if (need3) c3 = count3_all(v, scratch);
        if (need2) c2 = count2_all(v);
        out.clear();
        for (const auto& pl : plans) {
            switch (pl.kind) {
                case PatternPlan::Kind::Len1:
                    out.push_back(static_cast<long long>(v.size()));
                    break;
                case PatternPlan::Kind::Len2:
                    out.push_back(c2[static_cast<std::size_t>(pl.index)]);
                    break;
                case PatternPlan::Kind::Len3:
                    out.push_back(c3[static_cast<std::size_t>(pl.index)]);
                    break;
                case PatternPlan::Kind::General:
                    out.push_back(
                        naive_general(v, pl.pattern->span()).convert_to<long long>());
                    break;
            }
        }
    }
};

/// Compiled constraint set: avoid-style checks run first with early exit,
/// then exact-count checks share the joint kernels.
struct ClassPlan {
    std::vector<const Pattern*> avoid;
    std::vector<std::pair<PatternPlan, long long>> exact;
    bool need3 = false;
    bool need2 = false;
    std::vector<int> scratch;

    explicit ClassPlan(const ConstraintList& constraints) {
        for (const auto& [p, c] : constraints) {
            if (c.kind == ClassConstraint::Kind::Any) continue;
            if (c.kind == ClassConstraint::Kind::Avoid || c.r == 0) {
                avoid.push_back(&p);
            } else {
                exact.emplace_back(make_pattern_plan(p), c.r);
                need3 = need3 || exact.back().first.kind == PatternPlan::Kind::Len3;
                need2 = need2 || exact.back().first.kind == PatternPlan::Kind::Len2;
            }
        }
    }

    bool satisfied(std::span<const int> v) {
        for (const Pattern* p : avoid)
            if (contains_span(v, p->span())) return false;
        if (exact.empty()) return true;
        std::array<long long, 6> c3{};
        std::array<long long, 2> c2{};
        if (need3) c3 = count3_all(v, scratch);
        if (need2) c2 = count2_all(v);
        for (const auto& [pl, r] : exact) {
            long long got = 0;
            switch (pl.kind) {
                case PatternPlan::Kind::Len1:
                    got = static_cast<long long>(v.size());
                    break;
                case PatternPlan::Kind::Len2:
                    got = c2[static_cast<std::size_t>(pl.index)];
                    break;
                case PatternPlan::Kind::Len3:
                    got = c3[static_cast<std::size_t>(pl.index)];
                    break;
                case PatternPlan::Kind::General:
                    got = naive_general(v, pl.pattern->span()).convert_to<long long>();
                    break;
            }
            if (got != r) return false;
        }
        return true;
    }
};

} // namespace detail

/// Exhaustive joint occurrence census of S_n. Patterns longer than n are
/// tolerated (their count is identically 0). jobs > 1 shards by first
/// element; the merge is additive, so output is identical to serial.
inline CensusTable joint_census(int n, const std::vector<Pattern>& patterns,
                                int budget = kDefaultCensusBudget, int jobs = 1) {
    if (n < 0) throw DomainError("joint_census: n must be >= 0");
    if (patterns.empty()) throw DomainError("joint_census: at least one pattern required");
    detail::check_budget(n, budget, "joint_census");

    CensusTable table;
    table.n = n;
    table.patterns = patterns;

    const int workers = std::clamp(jobs, 1, std::max(n, 1));
    if (n == 0 || workers == 1) {
        detail::JointCounter counter(patterns);
        std::vector<long long> key;
        for (PermutationStream s(n); s.valid(); s.advance()) {
            counter.counts(s.current(), key);
            table.rows[key] += 1;
        }
        return table;
    }

    std::vector<CensusTable> shards(static_cast<std::size_t>(n));
    std::atomic<int> next_first{1};
    auto work = [&]() {
        detail::JointCounter counter(patterns);
        std::vector<long long> key;
        for (int f = next_first.fetch_add(1); f <= n; f = next_first.fetch_add(1)) {
            CensusTable& t = shards[static_cast<std::size_t>(f - 1)];
            t.n = n;
            t.patterns = patterns;
            for (PermutationStream s(n, f); s.valid(); s.advance()) {
                counter.counts(s.current(), key);
                t.rows[key] += 1;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (const auto& t : shards) table.merge(t);
    return table;
}

/// Number of permutations in S_n satisfying every constraint simultaneously.
inline BigInt count_class(int n, const ConstraintList& constraints,
                          int budget = kDefaultCensusBudget, int jobs = 1) {
    if (n < 0) throw DomainError("count_class: n must be >= 0");
    detail::check_budget(n, budget, "count_class");

    const int workers = std::clamp(jobs, 1, std::max(n, 1));
    if (n == 0 || workers == 1) {
        detail::ClassPlan plan(constraints);
        BigInt total = 0;
        for (PermutationStream s(n); s.valid(); s.advance())
            if (plan.satisfied(s.current())) ++total;
        return total;
    }

    std::vector<BigInt> shards(static_cast<std::size_t>(n), BigInt(0));
    std::atomic<int> next_first{1};
    auto work = [&]() {
        detail::ClassPlan plan(constraints);
        for (int f = next_first.fetch_add(1); f <= n; f = next_first.fetch_add(1)) {
            BigInt local = 0;
            for (PermutationStream s(n, f); s.valid(); s.advance())
                if (plan.satisfied(s.current())) ++local;
            shards[static_cast<std::size_t>(f - 1)] = std::move(local);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    BigInt total = 0;
    for (const auto& s : shards) total += s;
    return total;
}

namespace detail {

inline void build_double_avoiders(int t, std::vector<int>& prefix,
                                  std::vector<Permutation>& out) {
    if (t == 0) {
        out.emplace_back(prefix);
        return;
    }
    // place the maximum t at position i (1-based within the remaining block),
    // preceded by the next i-1 values in decreasing order
    for (int i = 1; i <= t; ++i) {
        for (int v = t - 1; v >= t - i + 1; --v) prefix.push_back(v);
        prefix.push_back(t);
        build_double_avoiders(t - i, prefix, out);
        prefix.resize(prefix.size() - static_cast<std::size_t>(i));
    }
}

} // namespace detail

/// Constructs (never filters) exactly the permutations avoiding both 123 and
/// 132: elements before the maximum are decreasing and all larger than
/// everything after it, recursing on the suffix. 2^(n-1) members, returned
/// in lexicographic order.
inline std::vector<Permutation> generate_double_avoiders(int n) {
    if (n < 1) throw DomainError("generate_double_avoiders: n must be >= 1");
    std::vector<Permutation> out;
    if (n <= 30) out.reserve(std::size_t{1} << (n - 1));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    detail::build_double_avoiders(n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Greedy decomposition into powers of two (descending); this is exactly the
/// binary expansion. No combinatorial meaning is claimed.
inline std::vector<BigInt> greedy_binary_decomposition(BigInt x) {
    if (x < 0) throw DomainError("greedy_binary_decomposition: negative input");
    std::vector<BigInt> parts;
    while (x > 0) {
        BigInt p = BigInt(1) << boost::multiprecision::msb(x);
        parts.push_back(p);
        x -= p;
    }
    return parts;
}

struct ConjectureRow {
    int n = 0;
    long long r = 0;
    BigInt count;
    std::vector<BigInt> decomposition;
};

/// Counts of 132-avoiding permutations by exact number of 123-occurrences,
/// with greedy binary decompositions. totals[i] is the full 132-avoider
/// count at n = i+1. Makes no truth claim about the decompositions.
struct ConjectureReport {
    int n_max = 0;
    long long r_max = 0;
    std::vector<ConjectureRow> rows;
    std::vector<std::pair<int, BigInt>> totals;

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["n_max"] = n_max;
        j["r_max"] = r_max;
        auto rws = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json r;
            r["n"] = row.n;
            r["r"] = row.r;
            r["count"] = row.count.str();
            auto dec = nlohmann::ordered_json::array();
            for (const auto& p : row.decomposition) dec.push_back(p.str());
            r["decomposition"] = std::move(dec);
            rws.push_back(std::move(r));
        }
        j["rows"] = std::move(rws);
        auto tot = nlohmann::ordered_json::array();
        for (const auto& [n, t] : totals) {
            nlohmann::ordered_json e;
            e["n"] = n;
            e["total"] = t.str();
            tot.push_back(std::move(e));
        }
        j["totals"] = std::move(tot);
        return j.dump();
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "n,r,count,decomposition\n";
        for (const auto& row : rows) {
            out << row.n << ',' << row.r << ',' << row.count.str() << ',';
            for (std::size_t i = 0; i < row.decomposition.size(); ++i) {
                if (i) out << '+';
                out << row.decomposition[i].str();
            }
            out << '\n';
        }
        return out.str();
    }
};

/// For each n <= n_max and r <= r_max, the number of 132-avoiding
/// permutations of S_n with exactly r 123-occurrences.
inline ConjectureReport conjecture_report(int n_max, long long r_max,
                                          int budget = kDefaultCensusBudget,
                                          int jobs = 1) {
    if (n_max < 1) throw DomainError("conjecture_report: n_max must be >= 1");
    if (r_max < 0) throw DomainError("conjecture_report: r_max must be >= 0");
    detail::check_budget(n_max, budget, "conjecture_report");

    const std::vector<Pattern> pats = {Pattern::parse("123"), Pattern::parse("132")};
    ConjectureReport rep;
    rep.n_max = n_max;
    rep.r_max = r_max;
    for (int n = 1; n <= n_max; ++n) {
        const CensusTable table = joint_census(n, pats, budget, jobs);
        std::map<long long, BigInt> tally;
        BigInt total = 0;
        for (const auto& [key, card] : table.rows) {
            if (key[1] != 0) continue;  // keep 132-avoiders only
            total += card;
            tally[key[0]] += card;
        }
        rep.totals.emplace_back(n, total);
        for (long long r = 0; r <= r_max; ++r) {
            BigInt count = 0;
            if (auto it = tally.find(r); it != tally.end()) count = it->second;
            rep.rows.push_back({n, r, count, greedy_binary_decomposition(count)});
        }
    }
    return rep;
}

} // namespace permpat
