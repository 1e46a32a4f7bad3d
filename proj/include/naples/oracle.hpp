#pragma once

#include <cstdint>
#include <functional>

#include "naples/coefficient.hpp"
#include "naples/preference.hpp"

namespace naples {

// Half-open block [begin, end) of preferences of length n in lexicographic
// (odometer) order: the preference at rank r has entries given by the
// base-n digits of r, each plus 1.
struct EnumerationRange {
    int n = 0;
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

std::uint64_t preference_count(int n);  // n^n, with 0^0 = 1
ParkingPreference preference_at_rank(int n, std::uint64_t rank);

// Calls fn once per preference in the range, in lexicographic order.
void enumerate(const EnumerationRange& range,
               const std::function<void(const ParkingPreference&)>& fn);

// Counts preferences of length n satisfying pred, splitting the full range
// into independent blocks processed in parallel and merged additively.
// block_size = 0 picks a size from the hardware concurrency. The result is
// independent of the block decomposition.
std::uint64_t count_matching(int n, const std::function<bool(const ParkingPreference&)>& pred,
                             std::uint64_t block_size = 0);

// True iff every distinct rearrangement of the multiset of entries parks
// under the k-Naples rule.
bool rearrangement_check(const ParkingPreference& alpha, int k);

// Ground truth by definition: enumerates all n^n preferences and counts
// with parking-core predicates only, never the recursions.
class Oracle {
public:
    explicit Oracle(int cap = 6) : cap_(cap) {}

    int cap() const { return cap_; }

    // Throws std::invalid_argument when key.n exceeds the cap or the
    // parameters are outside the kind's domain (see in_domain).
    BigInt coefficient(const CoefficientKey& key) const;

    // The parameter domain shared with the engine:
    //   T, ThetaEq, ThetaLeq: n >= 0, k >= 0
    //   t:                    n >= 1, k >= 0
    //   theta:                n >= 0, k >= 0, m >= 1, h >= 1
    //   v, v0:                1 <= m <= k <= n
    //   v0complete:           n >= 2, k >= 1
    static bool in_domain(const CoefficientKey& key);

private:
    int cap_;
};

}  // namespace naples
