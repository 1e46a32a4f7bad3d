// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact integer equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "naples/engine.hpp"
#include "naples/oracle.hpp"
#include "paper_tables.hpp"

using namespace naples;

namespace {

int g_failures = 0;
Engine g_engine;

void run_criterion(int number, const std::string& label,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    if (!ok) ++g_failures;
    std::cout << "criterion " << number << " (" << label << "): " << (ok ? "PASS" : "FAIL")
              << " [" << elapsed.count() << " ms]";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
}

bool check_triangle(const std::vector<std::vector<std::int64_t>>& expected,
                    const std::function<BigInt(int, int)>& value, std::string& detail) {
    long checked = 0;
    for (size_t row = 0; row < expected.size(); ++row) {
        const int n = static_cast<int>(row) + 2;
        for (size_t col = 0; col < expected[row].size(); ++col) {
            const int k = static_cast<int>(col) + 1;
            const BigInt actual = value(n, k);
            ++checked;
            if (actual != expected[row][col]) {
                detail = "mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         ": got " + actual.str() + ", expected " +
                         std::to_string(expected[row][col]);
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " entries";
    return true;
}

bool oracle_equivalence(std::string& detail) {
    Oracle oracle(6);
    std::vector<CoefficientKey> keys;
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            keys.push_back({Kind::T, n, k});
            keys.push_back({Kind::ThetaEq, n, k});
            keys.push_back({Kind::ThetaLeq, n, k});
            if (n >= 1) keys.push_back({Kind::t, n, k});
        }
        for (int k = 0; k <= n; ++k) {
            for (int m = 1; m <= std::max(n, 1); ++m) {
                for (int h = 1; h <= k + 2; ++h) keys.push_back({Kind::Theta, n, k, m, h});
            }
        }
        for (int k = 1; k <= n; ++k) {
            for (int m = 1; m <= k; ++m) {
                keys.push_back({Kind::V, n, k, m});
                keys.push_back({Kind::V0, n, k, m});
            }
            if (n >= 2) keys.push_back({Kind::V0Complete, n, k});
        }
    }
    long mismatches = 0;
    std::string first;
    for (const CoefficientKey& key : keys) {
        const BigInt expected = oracle.coefficient(key);
        const BigInt actual = g_engine.coefficient(key);
        if (expected != actual) {
            ++mismatches;
            if (first.empty()) {
                first = to_string(key) + ": oracle=" + expected.str() +
                        " engine=" + actual.str();
            }
        }
    }
    detail = std::to_string(keys.size()) + " keys";
    if (mismatches) detail += ", " + std::to_string(mismatches) + " mismatches, first: " + first;
    return mismatches == 0;
}

bool rearrangement_sweep(std::string& detail) {
    long counterexamples = 0;
    for (int n = 0; n <= 5; ++n) {
        enumerate({n, 0, preference_count(n)}, [&](const ParkingPreference& alpha) {
            for (int k = 1; k <= 4; ++k) {
                if (classify(alpha, k).is_permutation_invariant !=
                    rearrangement_check(alpha, k)) {
                    ++counterexamples;
                }
            }
        });
    }
    detail = std::to_string(counterexamples) + " counterexamples";
    return counterexamples == 0;
}

bool closed_forms(std::string& detail) {
    for (int n = 2; n <= 12; ++n) {
        if (g_engine.theta_eq(n, 1) != ipow(n - 1, n - 1)) {
            detail = "theta_eq(n,1) at n=" + std::to_string(n);
            return false;
        }
        if (g_engine.T_coeff(n, n - 1) != ipow(n, n)) {
            detail = "T(n,n-1) at n=" + std::to_string(n);
            return false;
        }
        if (g_engine.T_coeff(n, n - 2) != ipow(n, n) - ipow(n - 1, n - 1)) {
            detail = "T(n,n-2) at n=" + std::to_string(n);
            return false;
        }
        if (n >= 3 &&
            g_engine.v0_complete(n, n - 2) != ipow(n - 1, n - 1) - ipow(n, n - 2)) {
            detail = "v0_complete(n,n-2) at n=" + std::to_string(n);
            return false;
        }
        for (int k = 1; k <= n - 1; ++k) {
            if (g_engine.theta_eq(n, k) != g_engine.theta_eq(n, n - k)) {
                detail = "symmetry at n=" + std::to_string(n) + ", k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool cross_formulas(std::string& detail) {
    for (int n = 0; n <= 9; ++n) {
        for (int k = 1; k <= std::max(n - 1, 1); ++k) {
            if (g_engine.T_coeff(n, k) != g_engine.T_composition(n, k)) {
                detail = "T vs composition at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k);
                return false;
            }
        }
    }
    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            BigInt sum = 0;
            for (int m = 1; m <= k; ++m) sum += g_engine.v_m(n, k, m);
            if (g_engine.v0_complete(n + 1, k) != sum) {
                detail = "v0(n+1,k) vs sum of v(m) at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool conjecture_report(std::string& detail) {
    for (int n = 2; n <= 12; ++n) {
        if (g_engine.theta_leq(n, n - 1) != Engine::a071720_conjecture(n)) {
            detail = "a071720 [CONJECTURE] fails at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 3; n <= 12; ++n) {
        if (g_engine.v0_complete(n, n - 2) != Engine::a101334(n)) {
            detail = "a101334 [PROVED] fails at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "a071720 labeled CONJECTURE, a101334 labeled PROVED";
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "Theta^{(=)} golden table, n <= 8", [](std::string& detail) {
        return check_triangle(naples_tables::kThetaEq,
                              [](int n, int k) { return g_engine.theta_eq(n, k); }, detail);
    });
    run_criterion(2, "T golden table, n <= 8", [](std::string& detail) {
        return check_triangle(naples_tables::kT,
                              [](int n, int k) { return g_engine.T_coeff(n, k); }, detail);
    });
    run_criterion(3, "v0 golden table, n <= 9", [](std::string& detail) {
        return check_triangle(naples_tables::kV0,
                              [](int n, int k) { return g_engine.v0_complete(n, k); }, detail);
    });
    run_criterion(4, "oracle equivalence, n <= 6", oracle_equivalence);
    run_criterion(5, "rearrangement equivalence sweep, n <= 5, k <= 4", rearrangement_sweep);
    run_criterion(6, "closed forms and symmetry, n <= 12", closed_forms);
    run_criterion(7, "cross-formula agreement, n <= 9", cross_formulas);
    run_criterion(8, "conjecture report, n <= 12", conjecture_report);
    run_criterion(9, "exact division integrity", [](std::string& detail) {
        detail = std::to_string(g_engine.division_remainder_events()) + " remainder events";
        return g_engine.division_remainder_events() == 0;
    });

    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
