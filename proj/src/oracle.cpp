#include "naples/oracle.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

namespace naples {

std::uint64_t preference_count(int n) {
    if (n < 0) throw std::invalid_argument("preference_count: negative n");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
    return total;
}

ParkingPreference preference_at_rank(int n, std::uint64_t rank) {
    if (rank >= preference_count(n)) throw std::invalid_argument("preference rank out of range");
    std::vector<int> entries(n);
    for (int i = n - 1; i >= 0; --i) {
        entries[i] = static_cast<int>(rank % n) + 1;
        rank /= n;
    }
    return ParkingPreference(std::move(entries));
}

void enumerate(const EnumerationRange& range,
               const std::function<void(const ParkingPreference&)>& fn) {
    if (range.begin > range.end || range.end > preference_count(range.n)) {
        throw std::invalid_argument("enumerate: bad range");
    }
    if (range.begin == range.end) return;
    ParkingPreference current = preference_at_rank(range.n, range.begin);
    fn(current);
    std::vector<int> entries = current.entries();
    for (std::uint64_t rank = range.begin + 1; rank < range.end; ++rank) {
        // odometer increment, carrying past entries equal to n
        int pos = range.n - 1;
        while (entries[pos] == range.n) entries[pos--] = 1;
        entries[pos] += 1;
        fn(ParkingPreference(entries));
    }
}

std::uint64_t count_matching(int n, const std::function<bool(const ParkingPreference&)>& pred,
                             std::uint64_t block_size) {
    const std::uint64_t total = preference_count(n);
    if (block_size == 0) {
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        block_size = std::max<std::uint64_t>(1, total / (4 * workers));
    }
    std::vector<EnumerationRange> blocks;
    for (std::uint64_t begin = 0; begin < total; begin += block_size) {
        blocks.push_back({n, begin, std::min(begin + block_size, total)});
    }
    auto count_block = [&pred](const EnumerationRange& block) {
        std::uint64_t count = 0;
        enumerate(block, [&](const ParkingPreference& alpha) { count += pred(alpha); });
        return count;
    };
    if (blocks.size() <= 1 || std::thread::hardware_concurrency() <= 1) {
        std::uint64_t count = 0;
        for (const auto& block : blocks) count += count_block(block);
        return count;
    }
    std::vector<std::future<std::uint64_t>> futures;
    futures.reserve(blocks.size());
    for (const auto& block : blocks) {
        futures.push_back(std::async(std::launch::async, count_block, block));
    }
    std::uint64_t count = 0;
    for (auto& future : futures) count += future.get();
    return count;
}

bool rearrangement_check(const ParkingPreference& alpha, int k) {
    std::vector<int> sorted = alpha.entries();
    std::sort(sorted.begin(), sorted.end());
    // next_permutation over the sorted multiset visits each distinct
    // rearrangement exactly once
    do {
        if (!simulate(ParkingPreference(sorted), k).success) return false;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return true;
}

namespace {

bool excess_set_is_prefix_interval(const ExcessProfile& profile, int k) {
    // U = [2, k+1] exactly; for k = 0 this is U empty.
    if (static_cast<int>(profile.excess_set.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (profile.excess_set[i] != i + 2) return false;
    }
    return true;
}

bool intervals_within(const ExcessProfile& profile, int k) {
    for (const auto& [p, q] : profile.maximal_intervals) {
        if (q - p + 1 > k) return false;
    }
    return true;
}

}  // namespace

bool Oracle::in_domain(const CoefficientKey& key) {
    switch (key.kind) {
        case Kind::T:
        case Kind::ThetaEq:
        case Kind::ThetaLeq:
            return key.n >= 0 && key.k >= 0;
        case Kind::t:
            return key.n >= 1 && key.k >= 0;
        case Kind::Theta:
            return key.n >= 0 && key.k >= 0 && key.m >= 1 && key.h >= 1;
        case Kind::V:
        case Kind::V0:
            return key.m >= 1 && key.m <= key.k && key.k <= key.n;
        case Kind::V0Complete:
            return key.n >= 2 && key.k >= 1;
    }
    return false;
}

BigInt Oracle::coefficient(const CoefficientKey& key) const {
    if (!in_domain(key)) {
        throw std::invalid_argument("oracle: parameters out of domain for " + to_string(key));
    }
    if (key.n > cap_) {
        throw std::invalid_argument("oracle: n=" + std::to_string(key.n) +
                                    " exceeds oracle cap " + std::to_string(cap_));
    }
    const int k = key.k, m = key.m, h = key.h;
    std::function<bool(const ParkingPreference&)> pred;
    switch (key.kind) {
        case Kind::T:
            pred = [k](const ParkingPreference& alpha) {
                return intervals_within(excess_profile(alpha), k);
            };
            break;
        case Kind::t:
            pred = [k](const ParkingPreference& alpha) {
                const ExcessProfile profile = excess_profile(alpha);
                return alpha.length() >= 2 && profile.u(2) >= 1 && intervals_within(profile, k);
            };
            break;
        case Kind::ThetaEq:
            pred = [k](const ParkingPreference& alpha) {
                return excess_set_is_prefix_interval(excess_profile(alpha), k);
            };
            break;
        case Kind::ThetaLeq:
            pred = [k](const ParkingPreference& alpha) {
                const ExcessProfile profile = excess_profile(alpha);
                const int size = static_cast<int>(profile.excess_set.size());
                return size >= 1 && size <= k && excess_set_is_prefix_interval(profile, size);
            };
            break;
        case Kind::Theta:
            pred = [k, m, h](const ParkingPreference& alpha) {
                const ExcessProfile profile = excess_profile(alpha);
                if (!excess_set_is_prefix_interval(profile, k)) return false;
                const std::vector<int> mult = alpha.multiplicities();
                const int n = alpha.length();
                for (int i = 1; i < h && i <= n; ++i) {
                    if (mult[i] != 0) return false;
                }
                const int at_h = h <= n ? mult[h] : 0;
                return at_h == m;
            };
            break;
        case Kind::V:
        case Kind::V0:
        case Kind::V0Complete: {
            const int m_bound = key.kind == Kind::V0Complete ? 1 : m;
            const bool require_zero = key.kind != Kind::V;
            pred = [k, m_bound, require_zero](const ParkingPreference& alpha) {
                const int n = alpha.length();
                const ExcessProfile profile = excess_profile(alpha);
                for (int i = m_bound + 1; i <= n; ++i) {
                    if (profile.u(i) < 1) return false;
                }
                for (int i = 1; i <= m_bound; ++i) {
                    if (profile.u(i) < 0) return false;
                }
                if (require_zero && profile.u(m_bound) != 0) return false;
                return simulate(alpha, k).success;
            };
            break;
        }
    }
    return BigInt(count_matching(key.n, pred));
}

}  // namespace naples
