// naples: simulate parking rules, emit coefficient tables, extract
// sequences, verify recursions against the exhaustive oracle, and report
// on the conjectured OEIS matches.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/validation error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "naples/engine.hpp"
#include "naples/oracle.hpp"
#include "naples/preference.hpp"

namespace {

using naples::BigInt;
using naples::CoefficientKey;
using naples::Engine;
using naples::Kind;
using naples::Oracle;
using naples::ParkingPreference;

std::optional<Kind> table_kind(const std::string& coef) {
    if (coef == "theta-eq") return Kind::ThetaEq;
    if (coef == "theta-leq") return Kind::ThetaLeq;
    if (coef == "T") return Kind::T;
    if (coef == "t") return Kind::t;
    if (coef == "v0") return Kind::V0Complete;
    return std::nullopt;
}

BigInt table_value(Engine& engine, Kind kind, int n, int k) {
    switch (kind) {
        case Kind::ThetaEq: return engine.theta_eq(n, k);
        case Kind::ThetaLeq: return engine.theta_leq(n, k);
        case Kind::T: return engine.T_coeff(n, k);
        case Kind::t: return engine.t_coeff(n, k);
        case Kind::V0Complete: return engine.v0_complete(n, k);
        default: throw std::invalid_argument("unsupported table kind");
    }
}

int cmd_simulate(const std::string& pref_text, int k, bool want_trace) {
    ParkingPreference pref;
    try {
        pref = ParkingPreference::parse(pref_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto result = naples::simulate(pref, k, want_trace);
    if (result.success) {
        // slot<-car pairs in car order
        std::vector<int> slot_of_car(pref.length() + 1, 0);
        for (int slot = 1; slot <= pref.length(); ++slot) {
            slot_of_car[result.assignment[slot - 1]] = slot;
        }
        std::cout << "success; slots:";
        for (int car = 1; car <= pref.length(); ++car) {
            std::cout << (car == 1 ? " " : ", ") << slot_of_car[car] << "<-car" << car;
        }
        std::cout << "\n";
    } else {
        std::cout << "failure at car " << result.failed_car << "\n";
    }
    if (want_trace) {
        for (size_t i = 0; i < result.trace->size(); ++i) {
            std::cout << "car " << i + 1 << ": probed";
            const auto& probes = (*result.trace)[i];
            for (size_t j = 0; j < probes.size(); ++j) {
                std::cout << (j == 0 ? " " : ",") << probes[j];
            }
            if (!result.success && i + 1 == result.trace->size()) {
                std::cout << "; exited\n";
            } else {
                std::cout << "; parked at " << probes.back() << "\n";
            }
        }
    }
    return 0;
}

void render_table(Engine& engine, Kind kind, int n_max, int k_max, const std::string& format,
                  std::ostream& out) {
    if (format == "markdown") {
        out << "| n\\k |";
        for (int k = 1; k <= k_max; ++k) out << " k=" << k << " |";
        out << "\n|---|";
        for (int k = 1; k <= k_max; ++k) out << "---|";
        out << "\n";
        for (int n = 2; n <= n_max; ++n) {
            out << "| n=" << n << " |";
            for (int k = 1; k <= k_max; ++k) {
                if (k >= n) out << "  |";
                else out << " " << table_value(engine, kind, n, k).str() << " |";
            }
            out << "\n";
        }
        return;
    }
    const char sep = format == "tsv" ? '\t' : ',';
    out << "n" << sep << "k" << sep << "value\n";
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k <= std::min(k_max, n - 1); ++k) {
            out << n << sep << k << sep << table_value(engine, kind, n, k).str() << "\n";
        }
    }
}

// --bind forms: k=c, k=n-c, k=n+c
std::optional<int> bound_k(const std::string& bind, int n) {
    if (bind.rfind("k=", 0) != 0) return std::nullopt;
    const std::string expr = bind.substr(2);
    try {
        size_t pos = 0;
        if (expr.rfind("n-", 0) == 0) {
            const int c = std::stoi(expr.substr(2), &pos);
            if (pos + 2 != expr.size()) return std::nullopt;
            return n - c;
        }
        if (expr.rfind("n+", 0) == 0) {
            const int c = std::stoi(expr.substr(2), &pos);
            if (pos + 2 != expr.size()) return std::nullopt;
            return n + c;
        }
        const int c = std::stoi(expr, &pos);
        if (pos != expr.size()) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::pair<int, int>> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return std::make_pair(n, n);
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) return std::nullopt;
        return std::make_pair(lo, hi);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct Mismatch {
    CoefficientKey key;
    BigInt oracle_value;
    BigInt engine_value;
};

int cmd_verify(Engine& engine, int n_max, int cap, bool slow) {
    if (n_max > cap) {
        std::cerr << "error: n-max " << n_max << " exceeds oracle cap " << cap
                  << " (raise with --cap)\n";
        return 2;
    }
    Oracle oracle(cap);
    std::vector<Mismatch> mismatches;
    auto compare = [&](const CoefficientKey& key) {
        const BigInt expected = oracle.coefficient(key);
        const BigInt actual = engine.coefficient(key);
        if (expected != actual) mismatches.push_back({key, expected, actual});
        return expected == actual;
    };

    struct KindReport {
        Kind kind;
        long keys = 0;
        long failures = 0;
    };
    std::vector<KindReport> reports;
    auto sweep = [&](Kind kind, auto&& keys_for_n) {
        KindReport report{kind};
        for (int n = 0; n <= n_max; ++n) {
            for (const CoefficientKey& key : keys_for_n(kind, n)) {
                ++report.keys;
                if (!compare(key)) ++report.failures;
            }
        }
        reports.push_back(report);
    };
    auto simple_keys = [](Kind kind, int n) {
        std::vector<CoefficientKey> keys;
        const int n_min = kind == Kind::t ? 1 : kind == Kind::V0Complete ? 2 : 0;
        const int k_min = kind == Kind::V0Complete ? 1 : 0;
        if (n < n_min) return keys;
        for (int k = k_min; k <= n; ++k) keys.push_back({kind, n, k});
        return keys;
    };
    auto theta_keys = [](Kind kind, int n) {
        std::vector<CoefficientKey> keys;
        for (int k = 0; k <= n; ++k) {
            for (int m = 1; m <= std::max(n, 1); ++m) {
                for (int h = 1; h <= k + 2; ++h) keys.push_back({kind, n, k, m, h});
            }
        }
        return keys;
    };
    auto vm_keys = [](Kind kind, int n) {
        std::vector<CoefficientKey> keys;
        for (int k = 1; k <= n; ++k) {
            for (int m = 1; m <= k; ++m) keys.push_back({kind, n, k, m});
        }
        return keys;
    };
    sweep(Kind::T, simple_keys);
    sweep(Kind::t, simple_keys);
    sweep(Kind::ThetaEq, simple_keys);
    sweep(Kind::ThetaLeq, simple_keys);
    sweep(Kind::Theta, theta_keys);
    sweep(Kind::V, vm_keys);
    sweep(Kind::V0, vm_keys);
    sweep(Kind::V0Complete, simple_keys);

    for (const auto& report : reports) {
        std::cout << naples::kind_name(report.kind) << ": "
                  << (report.failures == 0 ? "PASS" : "FAIL") << " (" << report.keys << " keys";
        if (report.failures) std::cout << ", " << report.failures << " mismatches";
        std::cout << ")\n";
    }

    // rearrangement equivalence sweep (interval predicate vs all rearrangements)
    long rearrangement_failures = 0;
    const int sweep_n = std::min(n_max, 5);
    for (int n = 0; n <= sweep_n; ++n) {
        for (int k = 1; k <= 4; ++k) {
            naples::enumerate({n, 0, naples::preference_count(n)},
                              [&](const ParkingPreference& alpha) {
                                  const bool by_intervals =
                                      naples::classify(alpha, k).is_permutation_invariant;
                                  if (by_intervals != naples::rearrangement_check(alpha, k)) {
                                      ++rearrangement_failures;
                                  }
                              });
        }
    }
    if (slow) {
        for (int k = 1; k <= 4; ++k) {
            naples::enumerate({6, 0, naples::preference_count(6)},
                              [&](const ParkingPreference& alpha) {
                                  const bool by_intervals =
                                      naples::classify(alpha, k).is_permutation_invariant;
                                  if (by_intervals != naples::rearrangement_check(alpha, k)) {
                                      ++rearrangement_failures;
                                  }
                              });
        }
    }
    std::cout << "rearrangement equivalence (n <= " << (slow ? 6 : sweep_n)
              << "): " << (rearrangement_failures == 0 ? "PASS" : "FAIL") << "\n";

    if (!mismatches.empty() || rearrangement_failures) {
        const size_t shown = std::min<size_t>(mismatches.size(), 20);
        for (size_t i = 0; i < shown; ++i) {
            std::cout << "mismatch " << naples::to_string(mismatches[i].key)
                      << ": oracle=" << mismatches[i].oracle_value.str()
                      << " engine=" << mismatches[i].engine_value.str() << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_conjecture(Engine& engine, const std::string& name, int n_max) {
    bool all_match = true;
    if (name == "a071720") {
        std::cout << "a071720 [CONJECTURE]: theta_leq(n,n-1) vs (n-1)(n+1)^(n-2)\n";
        for (int n = 2; n <= n_max; ++n) {
            const BigInt lhs = engine.theta_leq(n, n - 1);
            const BigInt rhs = Engine::a071720_conjecture(n);
            const bool match = lhs == rhs;
            all_match = all_match && match;
            std::cout << "n=" << n << ": engine=" << lhs.str() << " closed=" << rhs.str() << " "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    } else if (name == "a101334") {
        std::cout << "a101334 [PROVED]: v0_complete(n,n-2) vs (n-1)^(n-1) - n^(n-2)\n";
        for (int n = 3; n <= n_max; ++n) {
            const BigInt lhs = engine.v0_complete(n, n - 2);
            const BigInt rhs = Engine::a101334(n);
            const bool match = lhs == rhs;
            all_match = all_match && match;
            std::cout << "n=" << n << ": engine=" << lhs.str() << " closed=" << rhs.str() << " "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    } else {
        std::cerr << "error: unknown conjecture '" << name << "'\n";
        return 2;
    }
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Naples parking function toolkit"};
    app.require_subcommand(1);

    std::string cache_path;
    app.add_option("--cache", cache_path, "coefficient cache file (env: NAPLES_CACHE)")
        ->envname("NAPLES_CACHE");

    auto* sim = app.add_subcommand("simulate", "run the k-Naples parking rule on a preference");
    std::string pref_text;
    int sim_k = 0;
    bool sim_trace = false;
    sim->add_option("--pref", pref_text, "comma-separated preference, e.g. 2,2,3")->required();
    sim->add_option("--k", sim_k, "backward window size")->check(CLI::NonNegativeNumber);
    sim->add_flag("--trace", sim_trace, "print per-car probe sequences");

    auto* table = app.add_subcommand("table", "emit a coefficient table");
    std::string table_coef = "theta-eq", table_format = "csv", table_out;
    int table_n_max = 8, table_k_max = 7;
    table->add_option("--coef", table_coef, "theta-eq | theta-leq | T | t | v0");
    table->add_option("--n-max", table_n_max, "last row");
    table->add_option("--k-max", table_k_max, "last column");
    table->add_option("--format", table_format, "csv | tsv | markdown")
        ->check(CLI::IsMember({"csv", "tsv", "markdown"}));
    table->add_option("--out", table_out, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "compare the recursions against the oracle");
    int verify_n_max = 5, verify_cap = 6;
    bool verify_slow = false;
    verify->add_option("--n-max", verify_n_max, "largest length to verify");
    verify->add_option("--cap", verify_cap, "oracle resource cap (default 6)");
    verify->add_flag("--slow", verify_slow, "include the n=6 rearrangement sweep");

    auto* seq = app.add_subcommand("seq", "print a coefficient sequence for OEIS lookup");
    std::string seq_coef = "theta-eq", seq_bind = "k=1", seq_range = "2..8";
    bool seq_lines = false;
    seq->add_option("--coef", seq_coef, "theta-eq | theta-leq | T | t | v0");
    seq->add_option("--bind", seq_bind, "k=c, k=n-c or k=n+c");
    seq->add_option("--n", seq_range, "n range, e.g. 2..8");
    seq->add_flag("--lines", seq_lines, "one value per line");

    auto* conj = app.add_subcommand("conjecture", "evaluate a reported OEIS match");
    std::string conj_name;
    int conj_n_max = 12;
    conj->add_option("--name", conj_name, "a071720 | a101334")->required();
    conj->add_option("--n-max", conj_n_max, "largest length to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Engine engine;
    if (!cache_path.empty()) {
        std::ifstream in(cache_path);
        if (in) engine.table().load(in, &std::cerr);
    }
    auto save_cache = [&] {
        if (cache_path.empty()) return;
        std::ofstream out(cache_path);
        engine.table().save(out);
    };

    try {
        if (sim->parsed()) return cmd_simulate(pref_text, sim_k, sim_trace);

        if (table->parsed()) {
            const auto kind = table_kind(table_coef);
            if (!kind) {
                std::cerr << "error: unknown coefficient '" << table_coef << "'\n";
                return 2;
            }
            std::ostringstream buffer;
            render_table(engine, *kind, table_n_max, table_k_max, table_format, buffer);
            if (table_out.empty()) {
                std::cout << buffer.str();
            } else {
                std::ofstream out(table_out);
                if (!out) {
                    std::cerr << "error: cannot write " << table_out << "\n";
                    return 2;
                }
                out << buffer.str();
            }
            save_cache();
            return 0;
        }

        if (verify->parsed()) {
            const int code = cmd_verify(engine, verify_n_max, verify_cap, verify_slow);
            if (code == 0) save_cache();
            return code;
        }

        if (seq->parsed()) {
            const auto kind = table_kind(seq_coef);
            if (!kind) {
                std::cerr << "error: unknown coefficient '" << seq_coef << "'\n";
                return 2;
            }
            const auto range = parse_n_range(seq_range);
            if (!range) {
                std::cerr << "error: bad n range '" << seq_range << "'\n";
                return 2;
            }
            std::vector<std::string> values;
            for (int n = range->first; n <= range->second; ++n) {
                const auto k = bound_k(seq_bind, n);
                if (!k) {
                    std::cerr << "error: bad binding '" << seq_bind << "'\n";
                    return 2;
                }
                try {
                    values.push_back(table_value(engine, *kind, n, *k).str());
                } catch (const std::exception& e) {
                    std::cerr << "error: inconsistent binding at n=" << n << ": " << e.what()
                              << "\n";
                    return 2;
                }
            }
            for (size_t i = 0; i < values.size(); ++i) {
                if (seq_lines) std::cout << values[i] << "\n";
                else std::cout << (i == 0 ? "" : ", ") << values[i];
            }
            if (!seq_lines) std::cout << "\n";
            save_cache();
            return 0;
        }

        if (conj->parsed()) {
            const int code = cmd_conjecture(engine, conj_name, conj_n_max);
            if (code == 0) save_cache();
            return code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
