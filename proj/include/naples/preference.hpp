#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace naples {

// An n-tuple (a_1,...,a_n) with 1 <= a_i <= n; car i prefers slot a_i.
// The empty tuple is the unique preference of length 0.
class ParkingPreference {
public:
    ParkingPreference() = default;
    explicit ParkingPreference(std::vector<int> entries);

    // Comma-separated decimal entries, e.g. "2,2,3"; "" is the empty preference.
    static ParkingPreference parse(const std::string& text);
    std::string to_string() const;

    int length() const { return static_cast<int>(entries_.size()); }
    int entry(int car) const { return entries_[car - 1]; }  // 1-based
    const std::vector<int>& entries() const { return entries_; }

    // multiplicities()[i] = #{j : a_j = i}, valid indices 1..n (index 0 unused).
    std::vector<int> multiplicities() const;

    bool operator==(const ParkingPreference&) const = default;

private:
    std::vector<int> entries_;
};

// Excess function u(j) = #cars preferring slot >= j minus #slots >= j,
// the excess set U = { j : u(j) >= 1 } and its maximal runs.
struct ExcessProfile {
    std::vector<int> values;                           // values[j-1] = u(j)
    std::vector<int> excess_set;                       // increasing, subset of [2,n]
    std::vector<std::pair<int, int>> maximal_intervals;  // closed intervals [p,q]

    int u(int j) const { return values[j - 1]; }
    bool empty() const { return excess_set.empty(); }
};

ExcessProfile excess_profile(const ParkingPreference& alpha);

struct SimulationResult {
    bool success = true;
    std::vector<int> assignment;  // slot -> car, 1-based; bijection on success
    int failed_car = 0;           // first car that exits, 0 on success
    std::optional<std::vector<std::vector<int>>> trace;  // probed slots per car
};

// k-Naples rule: car i probes a_i, then a_i-1 .. a_i-k (nearest first,
// probes below slot 1 skipped), then a_i+1 .. n. k = 0 is the classical rule.
SimulationResult simulate(const ParkingPreference& alpha, int k, bool want_trace = false);

struct ClassificationReport {
    bool is_parking_function = false;
    bool is_k_naples = false;
    bool is_permutation_invariant = false;
    bool is_complete = false;
    ExcessProfile profile;
};

ClassificationReport classify(const ParkingPreference& alpha, int k);

// Decomposition at a position j with u(j) = 0: low keeps the cars with
// a_i < j, high is the shift by j-1 of the cars with a_i >= j.
std::pair<ParkingPreference, ParkingPreference> shift_restrict(const ParkingPreference& alpha,
                                                               int j);

// (n+2-a_1, ..., n+2-a_n); requires every entry >= 2. Involution.
ParkingPreference complement(const ParkingPreference& alpha);

// True iff the nondecreasing rearrangement (b_1,...,b_n) has b_1 = 1 and
// b_i < i for all i >= 2.
bool is_prime_parking_function(const ParkingPreference& alpha);

// Bijection from preferences with excess set exactly {2} onto prime parking
// functions of the same length: subtract 1 entrywise.
ParkingPreference prime_map(const ParkingPreference& alpha);

// Inverse of prime_map: add 1 entrywise.
ParkingPreference prime_unmap(const ParkingPreference& beta);

}  // namespace naples
