#include "naples/coefficient.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace naples {

namespace {

const std::array<std::string, 8> kKindNames = {"T",  "t", "ThetaEq", "ThetaLeq",
                                               "theta", "v", "v0",      "v0complete"};
const std::array<std::string, 3> kProvenanceNames = {"recursion", "oracle", "closedForm"};

}  // namespace

const std::string& kind_name(Kind kind) { return kKindNames[static_cast<int>(kind)]; }

std::optional<Kind> parse_kind(const std::string& name) {
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<Kind>(i);
    }
    return std::nullopt;
}

const std::string& provenance_name(Provenance provenance) {
    return kProvenanceNames[static_cast<int>(provenance)];
}

std::optional<Provenance> parse_provenance(const std::string& name) {
    for (size_t i = 0; i < kProvenanceNames.size(); ++i) {
        if (kProvenanceNames[i] == name) return static_cast<Provenance>(i);
    }
    return std::nullopt;
}

bool kind_uses_m(Kind kind) { return kind == Kind::Theta || kind == Kind::V || kind == Kind::V0; }

bool kind_uses_h(Kind kind) { return kind == Kind::Theta; }

std::string to_string(const CoefficientKey& key) {
    std::string out = kind_name(key.kind) + "(n=" + std::to_string(key.n) +
                      ",k=" + std::to_string(key.k);
    if (kind_uses_m(key.kind)) out += ",m=" + std::to_string(key.m);
    if (kind_uses_h(key.kind)) out += ",h=" + std::to_string(key.h);
    return out + ")";
}

std::optional<BigInt> CoefficientTable::find(const CoefficientKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

void CoefficientTable::store(const CoefficientKey& key, const BigInt& value,
                             Provenance provenance) {
    if (value < 0) throw std::invalid_argument("coefficient table: negative value");
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, Entry{value, {provenance}});
    if (!inserted) {
        if (it->second.value != value) {
            throw std::logic_error("coefficient table: conflicting values for " + to_string(key) +
                                   ": " + it->second.value.str() + " vs " + value.str());
        }
        it->second.provenance.insert(provenance);
    }
}

std::size_t CoefficientTable::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

void CoefficientTable::clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
}

void CoefficientTable::save(std::ostream& out) const {
    std::lock_guard lock(mutex_);
    for (const auto& [key, entry] : entries_) {
        const std::string m = kind_uses_m(key.kind) ? std::to_string(key.m) : "-";
        const std::string h = kind_uses_h(key.kind) ? std::to_string(key.h) : "-";
        for (Provenance provenance : entry.provenance) {
            out << kind_name(key.kind) << '\t' << key.n << '\t' << key.k << '\t' << m << '\t' << h
                << '\t' << entry.value.str() << '\t' << provenance_name(provenance) << '\n';
        }
    }
}

void CoefficientTable::load(std::istream& in, std::ostream* warnings) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string kind_field, n_field, k_field, m_field, h_field, value_field, prov_field;
        if (!(std::getline(fields, kind_field, '\t') && std::getline(fields, n_field, '\t') &&
              std::getline(fields, k_field, '\t') && std::getline(fields, m_field, '\t') &&
              std::getline(fields, h_field, '\t') && std::getline(fields, value_field, '\t') &&
              std::getline(fields, prov_field))) {
            throw std::invalid_argument("cache line " + std::to_string(line_no) +
                                        ": expected 7 tab-separated fields");
        }
        const auto kind = parse_kind(kind_field);
        if (!kind) {
            if (warnings) {
                *warnings << "warning: cache line " << line_no << ": unknown kind '" << kind_field
                          << "', skipped\n";
            }
            continue;
        }
        const auto provenance = parse_provenance(prov_field);
        if (!provenance) {
            throw std::invalid_argument("cache line " + std::to_string(line_no) +
                                        ": unknown provenance '" + prov_field + "'");
        }
        auto parse_int = [&](const std::string& field, bool optional) {
            if (optional && field == "-") return -1;
            size_t pos = 0;
            int value = std::stoi(field, &pos);
            if (pos != field.size()) {
                throw std::invalid_argument("cache line " + std::to_string(line_no) +
                                            ": bad integer '" + field + "'");
            }
            return value;
        };
        CoefficientKey key{*kind, parse_int(n_field, false), parse_int(k_field, false),
                           parse_int(m_field, true), parse_int(h_field, true)};
        BigInt value;
        try {
            value = BigInt(value_field);
        } catch (const std::exception&) {
            throw std::invalid_argument("cache line " + std::to_string(line_no) +
                                        ": bad value '" + value_field + "'");
        }
        store(key, value, *provenance);
    }
}

}  // namespace naples
