#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>

#include "naples/arith.hpp"

namespace naples {

// The counted families: T (permutation-invariant k-Naples), t (those with
// 2 in the excess set), Theta^{(=)}, Theta^{(<=)}, the refinement theta(m,h),
// v(m), v0(m) and v0complete = v0(1).
enum class Kind { T, t, ThetaEq, ThetaLeq, Theta, V, V0, V0Complete };

enum class Provenance { Recursion, Oracle, ClosedForm };

const std::string& kind_name(Kind kind);
std::optional<Kind> parse_kind(const std::string& name);
const std::string& provenance_name(Provenance provenance);
std::optional<Provenance> parse_provenance(const std::string& name);

bool kind_uses_m(Kind kind);  // V, V0, Theta
bool kind_uses_h(Kind kind);  // Theta

struct CoefficientKey {
    Kind kind;
    int n = 0;
    int k = 0;
    int m = -1;  // -1 when the kind takes no m
    int h = -1;  // -1 when the kind takes no h

    auto operator<=>(const CoefficientKey&) const = default;
};

std::string to_string(const CoefficientKey& key);

// Store of computed values with per-entry provenance. Get-or-store is
// atomic; storing a key twice with different values is an integrity error.
class CoefficientTable {
public:
    std::optional<BigInt> find(const CoefficientKey& key) const;
    void store(const CoefficientKey& key, const BigInt& value, Provenance provenance);
    std::size_t size() const;
    void clear();

    // Line-oriented text: kind<TAB>n<TAB>k<TAB>m<TAB>h<TAB>value<TAB>provenance,
    // "-" for absent m/h, "#" starts a comment. An entry with several
    // provenances is written as one line per provenance.
    void save(std::ostream& out) const;
    // Unknown kinds are skipped with a warning on `warnings`; malformed
    // lines are rejected.
    void load(std::istream& in, std::ostream* warnings = nullptr);

private:
    struct Entry {
        BigInt value;
        std::set<Provenance> provenance;
    };

    mutable std::mutex mutex_;
    std::map<CoefficientKey, Entry> entries_;
};

}  // namespace naples
