#pragma once

#include <atomic>
#include <string>

#include "naples/coefficient.hpp"

namespace naples {

// Recursive computation of every coefficient family with exact integer
// arithmetic. All results are memoized in a CoefficientTable, which doubles
// as the in-memory face of the persistent cache.
class Engine {
public:
    Engine() = default;

    CoefficientTable& table() { return table_; }
    const CoefficientTable& table() const { return table_; }

    // theta(n,k,m,h): preferences with U = [2,k+1] (empty for k = 0), no
    // entry below h, and exactly m entries equal to h.
    BigInt theta(int n, int k, int m, int h);

    BigInt theta_eq(int n, int k);   // U = [2,k+1] exactly; k = 0 counts parking functions
    BigInt theta_leq(int n, int k);  // sum of theta_eq(n,i) for i = 1..k

    BigInt t_coeff(int n, int k);  // permutation-invariant k-Naples with 2 in U
    BigInt T_coeff(int n, int k);  // permutation-invariant k-Naples

    // Independent route to T via the composition formula; cross-checks T_coeff.
    BigInt T_composition(int n, int k);

    BigInt v0_complete(int n, int k);        // complete k-Naples parking functions, n >= 2
    BigInt v0_m(int n, int k, int m);        // requires 1 <= m <= k <= n
    BigInt v_m(int n, int k, int m);         // sum of v0_m(n,k,i), i = 1..m

    // Dispatch by key, for verification and cache warming.
    BigInt coefficient(const CoefficientKey& key);

    // Inexact divisions seen in the theta(m,h) step recursion; any nonzero
    // count is an integrity failure (the computation also throws).
    long long division_remainder_events() const { return remainder_events_.load(); }

    // Closed forms: primeCount / completePreferences = (n-1)^(n-1),
    // a101334 = (n-1)^(n-1) - n^(n-2), a071720conjecture = (n-1)(n+1)^(n-2).
    static BigInt prime_count(int n);
    static BigInt complete_preferences(int n);
    static BigInt a101334(int n);
    static BigInt a071720_conjecture(int n);
    BigInt closed_form(const std::string& name, int n) const;

    // Difference of the two sides of Abel's binomial identity
    // (z+w+m)^m = sum_i C(m,i) w (w+i)^{i-1} (z+m-i)^{m-i}; zero when it holds.
    static BigInt abel_identity(long long z, long long w, int m);

private:
    BigInt v0_complete_internal(int n, int k);  // admits n = 1 (value 1)
    static bool theta_vanishes(int n, int k, int m, int h);

    CoefficientTable table_;
    std::atomic<long long> remainder_events_{0};
};

}  // namespace naples
