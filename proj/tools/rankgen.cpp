// rankgen: command-line front end for the protection-rank toolkit.
// Subcommands: series, oracle, asym, verify. Exit codes: 0 success,
// 1 verification mismatch, 2 usage error, 3 size-cap refusal.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankgen/asymptotics.hpp"
#include "rankgen/errors.hpp"
#include "rankgen/genfun.hpp"
#include "rankgen/oracle.hpp"
#include "rankgen/rational.hpp"
#include "rankgen/series.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rankgen;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

bool valid_format(const std::string& f) { return f == "json" || f == "csv" || f == "bfile"; }

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- series ----

struct SeriesArgs {
    std::string family;
    int k = 0;
    int order = 60;
    std::string format = "json";
};

int run_series(const SeriesArgs& args) {
    if (!valid_format(args.format)) return usage_error("unknown format '" + args.format + "'");
    if (args.order < 0) return usage_error("order must be nonnegative");
    auto id = genfun::parse_family(args.family, args.k);
    if (!id) {
        return usage_error("unknown family '" + args.family +
                           "' (or missing --k for R/Tk); expected T, V, L, R, Tk, RootRankSum, "
                           "VertexRankSum");
    }
    const TruncatedSeries s = genfun::make_series(*id, args.order);

    if (args.format == "bfile") {
        // OEIS b-file: "n value" per line, 1-indexed, leading zeros omitted.
        const int start = std::max(1, s.valuation() < 0 ? args.order + 1 : s.valuation());
        for (int n = start; n <= args.order; ++n) {
            std::cout << n << " " << s.at(n).to_string() << "\n";
        }
        return kExitOk;
    }
    if (args.format == "csv") {
        std::cout << "index,value,decimal_approx\n";
        for (int n = 0; n <= args.order; ++n) {
            std::cout << n << "," << s.at(n).to_string() << ",\n";
        }
        return kExitOk;
    }
    ordered_json out;
    out["command"] = "series";
    out["params"] = {{"family", args.family}, {"order", args.order}};
    if (id->tag == genfun::SeriesFamilyId::Tag::R || id->tag == genfun::SeriesFamilyId::Tag::Tk) {
        out["params"]["k"] = args.k;
    }
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= args.order; ++n) {
        rows.push_back({{"n", n}, {"value", s.at(n).to_string()}});
    }
    out["rows"] = rows;
    print_json(out);
    return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
    int n = 0;
    int cap = oracle::kDefaultSizeCap;
    bool force = false;
    std::string format = "json";
};

void tally_rows(const oracle::RankTally& t,
                const std::function<void(const std::string&, int, const BigInt&)>& emit) {
    emit("tree_count", t.n, t.tree_count);
    for (const auto& [k, v] : t.vertex_counts) emit("vertex_counts", k, v);
    for (const auto& [k, v] : t.root_counts) emit("root_counts", k, v);
    for (const auto& [k, v] : t.rank_histogram) emit("rank_histogram", k, v);
    for (const auto& [m, v] : t.bivariate) emit("bivariate", m, v);
    emit("leaf_total", t.n, t.leaf_total);
    emit("root_rank_sum", t.n, t.root_rank_sum);
    emit("vertex_rank_sum", t.n, t.vertex_rank_sum);
}

int run_oracle(const OracleArgs& args) {
    if (args.format == "bfile") return usage_error("oracle output has no b-file form");
    if (!valid_format(args.format)) return usage_error("unknown format '" + args.format + "'");
    if (args.n < 1) return usage_error("--n must be at least 1");

    oracle::RankTally t;
    try {
        t = oracle::tally(args.n, args.force ? std::max(args.n, args.cap) : args.cap);
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << " (pass --force to override)\n";
        return kExitCapExceeded;
    }

    if (args.format == "csv") {
        std::cout << "field,index,value\n";
        tally_rows(t, [](const std::string& field, int idx, const BigInt& v) {
            std::cout << field << "," << idx << "," << v.get_str() << "\n";
        });
        return kExitOk;
    }
    ordered_json out;
    out["command"] = "oracle";
    out["params"] = {{"n", args.n}, {"cap", args.cap}, {"force", args.force}};
    ordered_json rows = ordered_json::array();
    tally_rows(t, [&rows](const std::string& field, int idx, const BigInt& v) {
        rows.push_back({{"field", field}, {"n", idx}, {"value", v.get_str()}});
    });
    out["rows"] = rows;
    print_json(out);
    return kExitOk;
}

// ---- asym ----

struct AsymArgs {
    std::string what;
    std::optional<int> k;
    std::string tol = "1e-6";
    int converge = 0;
    std::string format = "json";
};

int run_asym(const AsymArgs& args) {
    if (args.format == "bfile") return usage_error("asym output has no b-file form");
    if (!valid_format(args.format)) return usage_error("unknown format '" + args.format + "'");

    asym::Family family;
    bool needs_k = true;
    if (args.what == "pk") {
        family = asym::Family::pk;
    } else if (args.what == "rk") {
        family = asym::Family::rk;
    } else if (args.what == "rankk") {
        family = asym::Family::rank_k;
    } else if (args.what == "ER") {
        family = asym::Family::ER;
        needs_k = false;
    } else if (args.what == "ET") {
        family = asym::Family::ET;
        needs_k = false;
    } else {
        return usage_error("unknown --what '" + args.what + "'; expected pk, rk, rankk, ER, ET");
    }
    if (needs_k && !args.k) return usage_error("--k is required for " + args.what);
    const int k = args.k.value_or(0);
    if (args.what == "rk" && k < 1) return usage_error("--k must be >= 1 for rk");
    if (needs_k && k < 0) return usage_error("--k must be nonnegative");

    BigRational tol;
    try {
        tol = BigRational::parse_decimal(args.tol);
    } catch (const std::invalid_argument&) {
        return usage_error("cannot parse --tol '" + args.tol + "'");
    }
    if (tol.sign() <= 0) return usage_error("--tol must be positive");
    const int places = asym::decimal_places_for_tolerance(tol);

    asym::LimitValue limit;
    switch (family) {
        case asym::Family::pk: limit = asym::protected_fraction_limit(k); break;
        case asym::Family::rk: limit = asym::root_protected_limit(k); break;
        case asym::Family::rank_k: limit = asym::rank_fraction_limit(k); break;
        case asym::Family::ER: limit = asym::expected_root_rank_constant(tol); break;
        case asym::Family::ET: limit = asym::expected_vertex_rank_constant(tol); break;
    }

    std::vector<asym::ConvergenceRow> rows;
    if (args.converge > 0) {
        rows = asym::convergence_report(family, k, args.converge, tol);
    }

    if (args.format == "csv") {
        std::cout << "index,value,decimal_approx\n";
        if (rows.empty()) {
            std::cout << k << "," << limit.value.to_string() << "," << limit.decimal(places)
                      << "\n";
        } else {
            for (const auto& row : rows) {
                std::cout << row.n << "," << row.exact_ratio.to_string() << ","
                          << row.exact_ratio.decimal_fixed(places) << "\n";
            }
        }
        return kExitOk;
    }

    ordered_json out;
    out["command"] = "asym";
    out["params"] = {{"what", args.what}, {"tol", args.tol}};
    if (needs_k) out["params"]["k"] = k;
    ordered_json lim;
    if (limit.exact) lim["exact"] = limit.exact->to_string();
    lim["value"] = limit.value.to_string();
    lim["tail_bound"] = limit.tail_bound.to_string();
    lim["decimal"] = limit.decimal(places);
    out["limit"] = lim;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
        jrows.push_back({{"n", row.n},
                         {"value", row.exact_ratio.to_string()},
                         {"approx", row.exact_ratio.decimal_fixed(places)},
                         {"gap", row.abs_gap.decimal_significant(6)}});
    }
    out["rows"] = jrows;
    print_json(out);
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite;
    std::string format = "text";
};

VerificationReport run_suite(const std::string& name) {
    VerificationReport rep;
    if (name == "identities" || name == "all") {
        rep.merge(genfun::check_d_recurrence(50));
        rep.merge(genfun::check_nd_identity(50));
        rep.merge(genfun::check_rk_equivalence(20, 200));
    }
    if (name == "oracle" || name == "all") {
        rep.merge(oracle::cross_check(12, 11));
    }
    if (name == "paper50" || name == "all") {
        rep.merge(asym::paper50_report());
    }
    return rep;
}

int run_verify(const VerifyArgs& args) {
    if (args.suite != "identities" && args.suite != "oracle" && args.suite != "paper50" &&
        args.suite != "all") {
        return usage_error("unknown suite '" + args.suite +
                           "'; expected identities, oracle, paper50, all");
    }
    if (args.format != "text" && args.format != "json") {
        return usage_error("verify supports --format text or json");
    }

    const VerificationReport rep = run_suite(args.suite);
    if (args.format == "json") {
        ordered_json out;
        out["command"] = "verify";
        out["params"] = {{"suite", args.suite}};
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks()) {
            ordered_json item = {{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) item["detail"] = c.detail;
            checks.push_back(item);
        }
        out["checks"] = checks;
        out["all_pass"] = rep.all_pass();
        print_json(out);
    } else {
        for (const auto& c : rep.checks()) {
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
            if (!c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "OK" : "FAILURES") << ": " << rep.checks().size()
                  << " checks, " << rep.failure_count() << " failed\n";
    }
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating functions, brute-force tallies and asymptotics for "
                 "protection ranks in rooted plane trees"};
    app.require_subcommand(1);

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "emit coefficients of a named series");
    series->add_option("--family", series_args.family,
                       "T, V, L, R, Tk, RootRankSum, VertexRankSum")
        ->required();
    series->add_option("--k", series_args.k, "protection level (required for R and Tk)");
    series->add_option("--order", series_args.order, "truncation order (default 60)")
        ->envname("RANKGEN_ORDER");
    series->add_option("--format", series_args.format, "json, csv or bfile (default json)");

    OracleArgs oracle_args;
    auto* orc = app.add_subcommand("oracle", "exhaustive rank tally for one tree size");
    orc->add_option("--n", oracle_args.n, "tree size")->required();
    orc->add_option("--cap", oracle_args.cap, "enumeration size cap (default 15)")
        ->envname("RANKGEN_CAP");
    orc->add_flag("--force", oracle_args.force, "enumerate past the size cap");
    orc->add_option("--format", oracle_args.format, "json or csv (default json)");

    AsymArgs asym_args;
    auto* asy = app.add_subcommand("asym", "limit constants and convergence tables");
    asy->add_option("--what", asym_args.what, "pk, rk, rankk, ER or ET")->required();
    int asym_k = -1;
    auto* kopt = asy->add_option("--k", asym_k, "protection level");
    asy->add_option("--tol", asym_args.tol, "tail tolerance (default 1e-6)")
        ->envname("RANKGEN_TOL");
    asy->add_option("--converge", asym_args.converge, "emit exact ratios for n = 1..N");
    asy->add_option("--format", asym_args.format, "json or csv (default json)");

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", verify_args.suite, "identities, oracle, paper50 or all")
        ->required();
    ver->add_option("--format", verify_args.format, "text or json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (kopt->count() > 0) asym_args.k = asym_k;

    try {
        if (series->parsed()) return run_series(series_args);
        if (orc->parsed()) return run_oracle(oracle_args);
        if (asy->parsed()) return run_asym(asym_args);
        if (ver->parsed()) return run_verify(verify_args);
    } catch (const UnsupportedIndex& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return usage_error("no subcommand given");
}
