#include "naples/preference.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace naples {

ParkingPreference::ParkingPreference(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    for (int a : entries_) {
        if (a < 1 || a > n) {
            throw std::invalid_argument("parking preference: entry out of range [1," +
                                        std::to_string(n) + "]: " + std::to_string(a));
        }
    }
}

ParkingPreference ParkingPreference::parse(const std::string& text) {
    std::vector<int> entries;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ',')) {
            size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(token, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("parking preference: bad entry '" + token + "'");
            }
            if (pos != token.size()) {
                throw std::invalid_argument("parking preference: bad entry '" + token + "'");
            }
            entries.push_back(value);
        }
        if (text.back() == ',') {
            throw std::invalid_argument("parking preference: trailing comma");
        }
    }
    return ParkingPreference(std::move(entries));
}

std::string ParkingPreference::to_string() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::vector<int> ParkingPreference::multiplicities() const {
    std::vector<int> mult(entries_.size() + 1, 0);
    for (int a : entries_) mult[a] += 1;
    return mult;
}

ExcessProfile excess_profile(const ParkingPreference& alpha) {
    const int n = alpha.length();
    ExcessProfile profile;
    profile.values.resize(n);
    const std::vector<int> mult = alpha.multiplicities();
    int suffix = 0;  // #cars with preference >= j
    for (int j = n; j >= 1; --j) {
        suffix += mult[j];
        profile.values[j - 1] = suffix - (n - j + 1);
    }
    for (int j = 2; j <= n; ++j) {
        if (profile.values[j - 1] >= 1) {
            profile.excess_set.push_back(j);
            if (!profile.maximal_intervals.empty() && profile.maximal_intervals.back().second == j - 1) {
                profile.maximal_intervals.back().second = j;
            } else {
                profile.maximal_intervals.emplace_back(j, j);
            }
        }
    }
    return profile;
}

SimulationResult simulate(const ParkingPreference& alpha, int k, bool want_trace) {
    if (k < 0) throw std::invalid_argument("simulate: k must be >= 0");
    const int n = alpha.length();
    SimulationResult result;
    result.assignment.assign(n, 0);
    if (want_trace) result.trace.emplace();
    std::vector<char> occupied(n + 1, 0);
    for (int car = 1; car <= n; ++car) {
        const int pref = alpha.entry(car);
        std::vector<int>* probes = nullptr;
        if (want_trace) probes = &result.trace->emplace_back();
        int parked_slot = 0;
        auto probe = [&](int slot) {
            if (probes) probes->push_back(slot);
            if (!occupied[slot]) parked_slot = slot;
            return parked_slot != 0;
        };
        if (!probe(pref)) {
            for (int slot = pref - 1; slot >= std::max(1, pref - k) && parked_slot == 0; --slot) {
                probe(slot);
            }
            for (int slot = pref + 1; slot <= n && parked_slot == 0; ++slot) {
                probe(slot);
            }
        }
        if (parked_slot == 0) {
            result.success = false;
            result.failed_car = car;
            result.assignment.clear();
            return result;
        }
        occupied[parked_slot] = 1;
        result.assignment[parked_slot - 1] = car;
    }
    return result;
}

ClassificationReport classify(const ParkingPreference& alpha, int k) {
    if (k < 0) throw std::invalid_argument("classify: k must be >= 0");
    ClassificationReport report;
    report.profile = excess_profile(alpha);
    report.is_parking_function = report.profile.empty();
    report.is_k_naples = simulate(alpha, k).success;
    report.is_permutation_invariant = true;
    for (const auto& [p, q] : report.profile.maximal_intervals) {
        if (q - p + 1 > k) report.is_permutation_invariant = false;
    }
    const int n = alpha.length();
    report.is_complete = static_cast<int>(report.profile.excess_set.size()) == std::max(n - 1, 0);
    return report;
}

std::pair<ParkingPreference, ParkingPreference> shift_restrict(const ParkingPreference& alpha,
                                                               int j) {
    const int n = alpha.length();
    if (j < 1 || j > n) throw std::invalid_argument("shift_restrict: j out of range");
    if (excess_profile(alpha).u(j) != 0) {
        throw std::invalid_argument("shift_restrict: u(j) must be 0");
    }
    std::vector<int> low, high;
    for (int car = 1; car <= n; ++car) {
        const int a = alpha.entry(car);
        if (a >= j) high.push_back(a - (j - 1));
        else low.push_back(a);
    }
    return {ParkingPreference(std::move(low)), ParkingPreference(std::move(high))};
}

ParkingPreference complement(const ParkingPreference& alpha) {
    const int n = alpha.length();
    std::vector<int> out;
    out.reserve(n);
    for (int a : alpha.entries()) {
        if (a == 1) throw std::invalid_argument("complement: entry 1 not allowed");
        out.push_back(n + 2 - a);
    }
    return ParkingPreference(std::move(out));
}

bool is_prime_parking_function(const ParkingPreference& alpha) {
    const int n = alpha.length();
    if (n == 0) return false;
    std::vector<int> sorted = alpha.entries();
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != 1) return false;
    for (int i = 2; i <= n; ++i) {
        if (sorted[i - 1] >= i) return false;
    }
    return true;
}

ParkingPreference prime_map(const ParkingPreference& alpha) {
    const ExcessProfile profile = excess_profile(alpha);
    if (profile.excess_set != std::vector<int>{2}) {
        throw std::invalid_argument("prime_map: excess set must be exactly {2}");
    }
    std::vector<int> out;
    out.reserve(alpha.length());
    for (int a : alpha.entries()) out.push_back(a - 1);
    return ParkingPreference(std::move(out));
}

ParkingPreference prime_unmap(const ParkingPreference& beta) {
    std::vector<int> out;
    out.reserve(beta.length());
    for (int a : beta.entries()) out.push_back(a + 1);
    return ParkingPreference(std::move(out));
}

}  // namespace naples
