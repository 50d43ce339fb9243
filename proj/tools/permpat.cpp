// permpat — command-line front end for the permutation-pattern toolkit.
//
// Exit codes: 0 = success/verified, 1 = verification mismatch or no
// recurrence found, 2 = usage/input/budget error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpat/permpat.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permpat;

struct Options {
    bool json = false;
    bool csv = false;
    int jobs = 1;
    int budget = kDefaultCensusBudget;
};

std::vector<Pattern> parse_pattern_list(const std::string& arg) {
    std::vector<Pattern> pats;
    std::size_t start = 0;
    while (start <= arg.size()) {
        const std::size_t comma = arg.find(',', start);
        const std::string tok =
            arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw Error("empty pattern in list '" + arg + "'");
        pats.push_back(Pattern::parse(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (pats.empty()) throw Error("no patterns given");
    return pats;
}

Sequence parse_sequence(const std::string& arg, long long start_index) {
    Sequence seq;
    seq.start_index = start_index;
    std::size_t start = 0;
    while (start <= arg.size()) {
        const std::size_t comma = arg.find(',', start);
        std::string tok =
            arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw Error("empty term in sequence '" + arg + "'");
        try {
            seq.terms.emplace_back(tok);
        } catch (const std::exception&) {
            throw Error("bad integer '" + tok + "' in sequence");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return seq;
}

int cmd_count(const Options& opt, const std::string& perm_s, const std::string& pat_s) {
    const Permutation perm = Permutation::parse(perm_s);
    const Pattern pat = Pattern::parse(pat_s);
    const BigInt count = pat.size() <= 3 ? count_occurrences_fast(perm, pat)
                                         : count_occurrences_naive(perm, pat);
    if (opt.json) {
        ordered_json j;
        j["perm"] = perm.str();
        j["pattern"] = pat.str();
        j["count"] = count.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << count.str() << '\n';
    }
    return 0;
}

int cmd_census(const Options& opt, int n, const std::string& patterns_s) {
    const auto pats = parse_pattern_list(patterns_s);
    const CensusTable table = joint_census(n, pats, opt.budget, opt.jobs);
    if (opt.json) {
        std::cout << table.to_json() << '\n';
    } else if (opt.csv) {
        std::cout << table.to_csv();
    } else {
        std::cout << "n=" << table.n << " patterns=[";
        for (std::size_t i = 0; i < table.patterns.size(); ++i)
            std::cout << (i ? "," : "") << table.patterns[i].str();
        std::cout << "] rows=" << table.rows.size() << " total=" << table.total_mass().str()
                  << '\n';
        for (const auto& [key, card] : table.rows) {
            std::cout << '(';
            for (std::size_t i = 0; i < key.size(); ++i) std::cout << (i ? "," : "") << key[i];
            std::cout << ") -> " << card.str() << '\n';
        }
    }
    return 0;
}

ConstraintList build_constraints(const std::vector<std::string>& avoid,
                                 const std::vector<std::string>& exactly) {
    ConstraintList cs;
    for (const auto& a : avoid) cs.emplace_back(Pattern::parse(a), ClassConstraint::avoid());
    for (const auto& e : exactly) {
        const std::size_t eq = e.find('=');
        if (eq == std::string::npos)
            throw Error("--exactly expects PATTERN=R, got '" + e + "'");
        const Pattern p = Pattern::parse(e.substr(0, eq));
        long long r = 0;
        try {
            std::size_t used = 0;
            r = std::stoll(e.substr(eq + 1), &used);
            if (used != e.size() - eq - 1) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw Error("bad count in '" + e + "'");
        }
        cs.emplace_back(p, ClassConstraint::exactly(r));
    }
    if (cs.empty()) throw Error("class: give at least one --avoid or --exactly constraint");
    return cs;
}

int cmd_class(const Options& opt, int n, const std::vector<std::string>& avoid,
              const std::vector<std::string>& exactly) {
    const ConstraintList cs = build_constraints(avoid, exactly);
    const BigInt count = count_class(n, cs, opt.budget, opt.jobs);
    if (opt.json) {
        ordered_json j;
        j["n"] = n;
        auto arr = ordered_json::array();
        for (const auto& [p, c] : cs) {
            ordered_json e;
            e["pattern"] = p.str();
            e["rule"] = c.kind == ClassConstraint::Kind::Avoid
                            ? "avoid"
                            : "exactly " + std::to_string(c.r);
            arr.push_back(std::move(e));
        }
        j["constraints"] = std::move(arr);
        j["count"] = count.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << count.str() << '\n';
    }
    return 0;
}

int cmd_generate(const Options& opt, int n) {
    const auto perms = generate_double_avoiders(n);
    if (opt.json) {
        ordered_json j;
        j["n"] = n;
        j["count"] = std::to_string(perms.size());
        auto arr = ordered_json::array();
        for (const auto& p : perms) arr.push_back(p.str());
        j["permutations"] = std::move(arr);
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& p : perms) std::cout << p.str() << '\n';
    }
    return 0;
}

int cmd_bijection_map(const Options& opt, const std::string& perm_s, bool inverse) {
    const Permutation in = Permutation::parse(perm_s);
    const Permutation out = inverse ? phi_inverse(in) : phi(in);
    if (opt.json) {
        ordered_json j;
        j["input"] = in.str();
        j["direction"] = inverse ? "phi_inverse" : "phi";
        j["output"] = out.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << out.str() << '\n';
    }
    return 0;
}

int cmd_bijection_verify(const Options& opt, int n) {
    const BijectionReport rep = verify_bijection(n, opt.budget);
    if (opt.json) {
        std::cout << rep.to_json() << '\n';
    } else {
        std::cout << "n=" << rep.n << " |S|=" << rep.size_s.str()
                  << " |T|=" << rep.size_t_class.str() << " failures=" << rep.failures.size()
                  << '\n';
        for (const auto& f : rep.failures) std::cout << "failure: " << f << '\n';
    }
    return rep.ok() ? 0 : 1;
}

struct VerifyRow {
    long long n = 0;
    BigInt formula;
    BigInt oracle;
    bool match = false;
    bool expected_divergence = false;
};

ConstraintList census_class_for(const std::string& id) {
    const Pattern p12 = Pattern::parse("12");
    const Pattern p123 = Pattern::parse("123");
    const Pattern p132 = Pattern::parse("132");
    if (id == "lemma1") return {{p12, ClassConstraint::exactly(1)}};
    if (id == "lemma2")
        return {{p123, ClassConstraint::avoid()}, {p132, ClassConstraint::avoid()}};
    if (id == "thm1")
        return {{p123, ClassConstraint::exactly(1)}, {p132, ClassConstraint::avoid()}};
    if (id == "thm2")
        return {{p132, ClassConstraint::exactly(1)}, {p123, ClassConstraint::avoid()}};
    if (id == "thm3" || id == "thm3-printed")
        return {{p123, ClassConstraint::exactly(1)}, {p132, ClassConstraint::exactly(1)}};
    if (id == "noonan") return {{p123, ClassConstraint::exactly(1)}};
    if (id == "bona") return {{p132, ClassConstraint::exactly(1)}};
    throw Error("no census class for formula id '" + id + "'");
}

void default_range(const std::string& id, const std::string& oracle, long long& n_min,
                   long long& n_max) {
    const bool census = oracle == "census";
    if (id == "lemma1") {
        n_min = 2;
        n_max = 10;
    } else if (id == "lemma2") {
        n_min = 1;
        n_max = census ? 10 : 64;
    } else if (id == "thm1" || id == "thm2") {
        n_min = 3;
        n_max = census ? 10 : 64;
    } else if (id == "thm3") {
        n_min = 5;
        n_max = census ? 10 : 64;
    } else if (id == "thm3-printed") {
        n_min = 5;
        n_max = 8;
    } else if (id == "noonan" || id == "bona") {
        n_min = 3;
        n_max = 9;
    } else if (id == "bijection") {
        n_min = 3;
        n_max = 8;
    }
}

int cmd_verify(const Options& opt, const std::string& id, std::optional<long long> n_min_opt,
               std::optional<long long> n_max_opt, const std::string& oracle) {
    if (oracle != "census" && oracle != "closed-form")
        throw Error("verify: oracle must be 'census' or 'closed-form'");

    long long n_min = 0, n_max = 0;
    default_range(id, oracle, n_min, n_max);
    if (n_min_opt) n_min = *n_min_opt;
    if (n_max_opt) n_max = *n_max_opt;
    if (n_min > n_max) throw Error("verify: n-min exceeds n-max");

    // bijection target: exhaustive round-trip verification per n
    if (id == "bijection") {
        bool pass = true;
        std::vector<std::string> lines;
        auto rows = ordered_json::array();
        for (long long n = n_min; n <= n_max; ++n) {
            const BijectionReport rep = verify_bijection(static_cast<int>(n), opt.budget);
            pass = pass && rep.ok();
            lines.push_back("n=" + std::to_string(n) + " |S|=" + rep.size_s.str() +
                            " |T|=" + rep.size_t_class.str() +
                            " failures=" + std::to_string(rep.failures.size()));
            for (const auto& f : rep.failures) lines.push_back("  failure: " + f);
            if (opt.json) {
                ordered_json r;
                r["n"] = n;
                r["sizeS"] = rep.size_s.str();
                r["sizeT"] = rep.size_t_class.str();
                r["failures"] = rep.failures;
                rows.push_back(std::move(r));
            }
        }
        if (opt.json) {
            ordered_json j;
            j["target"] = id;
            j["oracle"] = "census";
            j["n_min"] = n_min;
            j["n_max"] = n_max;
            j["rows"] = std::move(rows);
            j["pass"] = pass;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "verify bijection range=" << n_min << ".." << n_max << '\n';
            for (const auto& l : lines) std::cout << l << '\n';
            std::cout << (pass ? "PASS zero round-trip failures" : "FAIL round-trip failures")
                      << '\n';
        }
        return pass ? 0 : 1;
    }

    const FormulaInfo* info = find_formula(id);
    if (!info)
        throw Error("verify: unknown identifier '" + id +
                    "' (expected lemma1, lemma2, thm1, thm2, thm3, thm3-printed, noonan, "
                    "bona, or bijection)");
    if (n_min < info->min_n)
        throw Error("verify: " + id + " requires n >= " + std::to_string(info->min_n));

    const bool printed_form = id == "thm3-printed";
    std::vector<VerifyRow> rows;
    for (long long n = n_min; n <= n_max; ++n) {
        VerifyRow row;
        row.n = n;
        row.formula = evaluate_formula(id, n);
        if (oracle == "census") {
            row.oracle = count_class(static_cast<int>(n), census_class_for(id), opt.budget,
                                     opt.jobs);
        } else {
            if (id == "lemma2") {
                row.oracle = lemma2(n);
                row.formula = lemma2_recurrence(n_max).at(n);
            } else if (id == "thm1") {
                row.oracle = theorem1_closed(n);
                row.formula = theorem1_recurrence(n_max).at(n);
            } else if (id == "thm3") {
                row.oracle = theorem3_closed(n);
                row.formula = theorem3_recurrence_subcases(n_max).at(n);
            } else if (id == "thm3-printed") {
                row.oracle = theorem3_closed(n);
            } else {
                throw Error("verify: no closed-form cross-check for '" + id +
                            "'; use --oracle census");
            }
        }
        row.match = row.formula == row.oracle;
        row.expected_divergence = printed_form && n >= 6;
        rows.push_back(std::move(row));
    }

    bool pass = true;
    if (printed_form) {
        // PASS iff values agree below n=6 and the n=6 divergence is exactly
        // the documented 15-vs-12; later indices are reported, not judged
        bool saw6 = false;
        for (const auto& row : rows) {
            if (row.n < 6 && !row.match) pass = false;
            if (row.n == 6) {
                saw6 = true;
                if (row.formula != 15 || row.oracle != 12) pass = false;
            }
        }
        if (!saw6) pass = false;
    } else {
        for (const auto& row : rows) pass = pass && row.match;
    }

    if (opt.json) {
        ordered_json j;
        j["target"] = id;
        j["oracle"] = oracle;
        j["n_min"] = n_min;
        j["n_max"] = n_max;
        auto arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["n"] = row.n;
            r["formula"] = row.formula.str();
            r["oracle"] = row.oracle.str();
            r["match"] = row.match;
            if (row.expected_divergence) r["expected_divergence"] = true;
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        j["pass"] = pass;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "verify " << id << " oracle=" << oracle << " range=" << n_min << ".."
                  << n_max << '\n';
        std::size_t matches = 0;
        for (const auto& row : rows) {
            std::cout << "n=" << row.n << " formula=" << row.formula.str()
                      << " oracle=" << row.oracle.str();
            if (row.match) {
                std::cout << " ok";
                ++matches;
            } else if (row.expected_divergence) {
                std::cout << " diverges(expected)";
            } else {
                std::cout << " MISMATCH";
            }
            std::cout << '\n';
        }
        if (printed_form) {
            std::cout << (pass ? "PASS divergence at n=6 reproduced (15 vs 12)"
                               : "FAIL documented divergence not reproduced")
                      << '\n';
        } else {
            std::cout << (pass ? "PASS " : "FAIL ") << matches << '/' << rows.size()
                      << " values equal" << '\n';
        }
    }
    return pass ? 0 : 1;
}

int cmd_fit(const Options& opt, const std::string& seq_s, long long start_index, int max_order,
            int max_degree, int guard) {
    const Sequence seq = parse_sequence(seq_s, start_index);
    const auto rec = fit(seq, max_order, max_degree, guard);
    if (!rec) {
        std::cerr << "no recurrence found with order <= " << max_order << ", degree <= "
                  << max_degree << '\n';
        return 1;
    }
    if (opt.json) {
        ordered_json j = ordered_json::parse(rec->to_json());
        j["human"] = rec->human();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << rec->human() << '\n';
    }
    return 0;
}

int cmd_conjecture(const Options& opt, int n_max, long long r_max) {
    const ConjectureReport rep = conjecture_report(n_max, r_max, opt.budget, opt.jobs);
    if (opt.json) {
        std::cout << rep.to_json() << '\n';
    } else if (opt.csv) {
        std::cout << rep.to_csv();
    } else {
        std::size_t row = 0;
        for (const auto& [n, total] : rep.totals) {
            std::cout << "n=" << n << " total-132-avoiders=" << total.str() << '\n';
            for (; row < rep.rows.size() && rep.rows[row].n == n; ++row) {
                const auto& r = rep.rows[row];
                std::cout << "  r=" << r.r << ": " << r.count.str();
                if (!r.decomposition.empty()) {
                    std::cout << " = ";
                    for (std::size_t i = 0; i < r.decomposition.size(); ++i) {
                        if (i) std::cout << '+';
                        std::cout << r.decomposition[i].str();
                    }
                }
                std::cout << '\n';
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permpat — exact permutation-pattern analysis toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit machine-readable JSON");
    app.add_flag("--csv", opt.csv, "emit CSV where applicable");
    app.add_option("--jobs", opt.jobs, "worker threads for census sharding (default 1)");
    auto* budget_opt = app.add_option("--budget", opt.budget,
                                      "census ceiling on n (default 11); overrides are logged");

    std::string arg_perm, arg_patterns, arg_id, arg_seq;
    int arg_n = 0;
    std::vector<std::string> arg_avoid, arg_exactly;
    bool arg_inverse = false;
    std::optional<long long> arg_nmin, arg_nmax;
    std::string arg_oracle = "census";
    long long arg_start = 1, arg_rmax = 3;
    int arg_maxorder = 3, arg_maxdegree = 2, arg_guard = 2;

    auto* c_count = app.add_subcommand("count", "count occurrences of a pattern");
    c_count->add_option("perm", arg_perm, "permutation, e.g. 2,3,1,4")->required();
    c_count->add_option("pattern", arg_patterns, "pattern, e.g. 123 or 1,2,3")->required();

    auto* c_census = app.add_subcommand("census", "joint occurrence census of S_n");
    c_census->add_option("n", arg_n, "permutation length")->required();
    c_census->add_option("patterns", arg_patterns, "comma-separated patterns, e.g. 123,132")
        ->required();

    auto* c_class = app.add_subcommand("class", "count permutations under constraints");
    c_class->add_option("n", arg_n, "permutation length")->required();
    c_class->add_option("--avoid", arg_avoid, "pattern that must not occur (repeatable)");
    c_class->add_option("--exactly", arg_exactly,
                        "PATTERN=R exact occurrence constraint (repeatable)");

    auto* c_generate = app.add_subcommand("generate", "structural 123/132 double-avoiders");
    c_generate->add_option("n", arg_n, "permutation length")->required();

    auto* c_bij = app.add_subcommand("bijection", "Theorem 2 bijection phi");
    c_bij->require_subcommand(1);
    auto* c_map = c_bij->add_subcommand("map", "apply phi (or its inverse) to one permutation");
    c_map->add_option("perm", arg_perm, "permutation in S (or T with --inverse)")->required();
    c_map->add_flag("--inverse", arg_inverse, "apply phi_inverse instead");
    auto* c_bver = c_bij->add_subcommand("verify", "exhaustively verify phi on S_n");
    c_bver->add_option("n", arg_n, "permutation length")->required();

    auto* c_verify = app.add_subcommand("verify", "check a formula against an oracle");
    c_verify
        ->add_option("id", arg_id,
                     "lemma1|lemma2|thm1|thm2|thm3|thm3-printed|noonan|bona|bijection")
        ->required();
    auto* nmin_opt = c_verify->add_option("--n-min", "range start (default per formula)");
    auto* nmax_opt = c_verify->add_option("--n-max", "range end (default per formula)");
    c_verify->add_option("--oracle", arg_oracle, "census | closed-form (default census)");

    auto* c_fit = app.add_subcommand("fit", "fit a polynomial-coefficient linear recurrence");
    c_fit->add_option("sequence", arg_seq, "comma-separated integers")->required();
    c_fit->add_option("--start-index", arg_start, "index of the first term (default 1)");
    c_fit->add_option("--max-order", arg_maxorder, "largest order r to try (default 3)");
    c_fit->add_option("--max-degree", arg_maxdegree, "largest degree d to try (default 2)");
    c_fit->add_option("--guard", arg_guard, "extra equations required beyond unknowns (default 2)");

    auto* c_conj = app.add_subcommand("conjecture", "132-avoiders by exact 123-count");
    c_conj->add_option("n-max", arg_n, "largest permutation length")->required();
    c_conj->add_option("--r-max", arg_rmax, "largest r to report (default 3)");

    for (CLI::App* sub : {c_count, c_census, c_class, c_generate, c_bij, c_verify, c_fit,
                          c_conj, c_map, c_bver})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (budget_opt->count() > 0)
        std::cerr << "note: census budget set to n <= " << opt.budget << '\n';

    try {
        if (c_count->parsed()) return cmd_count(opt, arg_perm, arg_patterns);
        if (c_census->parsed()) return cmd_census(opt, arg_n, arg_patterns);
        if (c_class->parsed()) return cmd_class(opt, arg_n, arg_avoid, arg_exactly);
        if (c_generate->parsed()) return cmd_generate(opt, arg_n);
        if (c_bij->parsed()) {
            if (c_map->parsed()) return cmd_bijection_map(opt, arg_perm, arg_inverse);
            if (c_bver->parsed()) return cmd_bijection_verify(opt, arg_n);
        }
        if (c_verify->parsed()) {
            if (nmin_opt->count()) arg_nmin = nmin_opt->as<long long>();
            if (nmax_opt->count()) arg_nmax = nmax_opt->as<long long>();
            return cmd_verify(opt, arg_id, arg_nmin, arg_nmax, arg_oracle);
        }
        if (c_fit->parsed())
            return cmd_fit(opt, arg_seq, arg_start, arg_maxorder, arg_maxdegree, arg_guard);
        if (c_conj->parsed()) return cmd_conjecture(opt, arg_n, arg_rmax);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
