#include "naples/engine.hpp"

#include <stdexcept>
#include <vector>

namespace naples {

bool Engine::theta_vanishes(int n, int k, int m, int h) {
    if (m > n) return true;
    if (k == 0) return h != 1;
    // U = [2,k+1] needs k+1 <= n
    if (n <= k) return true;
    if (h > k + 1) return true;            // no entry reaches past the interval
    if (h == 1) return true;               // an entry 1 would kill u(2)
    if (h == k + 1 && m < k + 1) return true;
    if (h <= k && m >= h) return true;
    return false;
}

BigInt Engine::theta(int n, int k, int m, int h) {
    if (n < 0 || k < 0 || m < 1 || h < 1) {
        throw std::invalid_argument("theta: need n,k >= 0 and m,h >= 1");
    }
    if (theta_vanishes(n, k, m, h)) return 0;
    if (k == 0) return binomial(n - 1, m - 1) * ipow(n, n - m);

    const CoefficientKey key{Kind::Theta, n, k, m, h};
    if (auto cached = table_.find(key)) return *cached;

    BigInt result;
    if (m == 1) {
        // remove the unique minimal entry: sums theta over length n-1, window k-1
        BigInt sum = 0;
        for (int hp = h; hp <= k; ++hp) {
            for (int mp = 1; mp <= n - 1; ++mp) {
                if (!theta_vanishes(n - 1, k - 1, mp, hp)) sum += theta(n - 1, k - 1, mp, hp);
            }
        }
        result = n * sum;
    } else {
        const BigInt numerator = n * theta(n - 1, k - 1, m - 1, h - 1);
        if (numerator % m != 0) {
            remainder_events_.fetch_add(1);
            throw std::logic_error("theta: inexact division at " + to_string(key));
        }
        result = numerator / m;
    }
    table_.store(key, result, Provenance::Recursion);
    return result;
}

BigInt Engine::theta_eq(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("theta_eq: need n,k >= 0");
    if (k == 0) return n == 0 ? BigInt(1) : powc(n + 1, n - 1);
    if (n < 2 || n <= k) return 0;

    const CoefficientKey key{Kind::ThetaEq, n, k};
    if (auto cached = table_.find(key)) return *cached;

    BigInt result = 0;
    for (int h = 2; h <= k; ++h) {
        for (int m = 1; m <= h - 1; ++m) result += theta(n, k, m, h);
    }
    for (int m = k + 1; m <= n; ++m) result += theta(n, k, m, k + 1);
    table_.store(key, result, Provenance::Recursion);
    return result;
}

BigInt Engine::theta_leq(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("theta_leq: need n,k >= 0");
    BigInt result = 0;
    for (int i = 1; i <= k; ++i) result += theta_eq(n, i);
    return result;
}

BigInt Engine::t_coeff(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("t_coeff: need n,k >= 0");
    if (n == 0) return 1;  // recursion convention
    if (k == 0 || n == 1) return 0;

    const CoefficientKey key{Kind::t, n, k};
    if (auto cached = table_.find(key)) return *cached;

    // i = 0 and i = 1 terms vanish since ThetaLeq(0,k) = ThetaLeq(1,k) = 0
    BigInt result = 0;
    for (int i = 2; i <= n; ++i) {
        result += binomial(n, i) * theta_leq(i, k) * t_coeff(n - i, k);
    }
    table_.store(key, result, Provenance::Recursion);
    return result;
}

BigInt Engine::T_coeff(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("T_coeff: need n,k >= 0");
    if (k == 0) return powc(n + 1, n - 1);  // classical parking functions

    const CoefficientKey key{Kind::T, n, k};
    if (auto cached = table_.find(key)) return *cached;

    BigInt result = 0;
    for (int j = 0; j <= n; ++j) {
        result += binomial(n, j) * powc(j + 1, j - 1) * t_coeff(n - j, k);
    }
    table_.store(key, result, Provenance::Recursion);
    return result;
}

BigInt Engine::T_composition(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("T_composition: need n >= 0, k >= 1");
    BigInt total = 0;
    // ordered compositions (b_0, b_1, ..., b_m) of n with b_0 >= 0, b_i >= 2;
    // the multinomial is accumulated as a product of binomials
    auto rec = [&](auto&& self, int remaining, const BigInt& weight) -> void {
        if (remaining == 0) {
            total += weight;
            return;
        }
        for (int b = 2; b <= remaining; ++b) {
            self(self, remaining - b, weight * binomial(remaining, b) * theta_leq(b, k));
        }
    };
    for (int b0 = 0; b0 <= n; ++b0) {
        rec(rec, n - b0, binomial(n, b0) * powc(b0 + 1, b0 - 1));
    }
    return total;
}

BigInt Engine::v0_complete_internal(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("v0_complete: need n >= 1, k >= 1");
    if (n <= k + 1) return ipow(n - 1, n - 1);  // 0^0 = 1 covers n = 1

    const CoefficientKey key{Kind::V0Complete, n, k};
    if (auto cached = table_.find(key)) return *cached;

    BigInt result = 0;
    for (int i = 1; i <= k; ++i) {
        result += binomial(n - 1, i - 1) * powc(i, i - 2) * (k - i + 1) *
                  v0_complete_internal(n - i, k);
    }
    table_.store(key, result, Provenance::Recursion);
    return result;
}

BigInt Engine::v0_complete(int n, int k) {
    if (n < 2) throw std::invalid_argument("v0_complete: need n >= 2");
    return v0_complete_internal(n, k);
}

BigInt Engine::v0_m(int n, int k, int m) {
    if (m < 1 || m > k || k > n) {
        throw std::invalid_argument("v0_m: need 1 <= m <= k <= n");
    }
    return binomial(n, m - 1) * powc(m, m - 2) * v0_complete_internal(n - m + 1, k);
}

BigInt Engine::v_m(int n, int k, int m) {
    if (m < 1 || m > k || k > n) {
        throw std::invalid_argument("v_m: need 1 <= m <= k <= n");
    }
    BigInt result = 0;
    for (int i = 1; i <= m; ++i) result += v0_m(n, k, i);
    return result;
}

BigInt Engine::coefficient(const CoefficientKey& key) {
    switch (key.kind) {
        case Kind::T: return T_coeff(key.n, key.k);
        case Kind::t: return t_coeff(key.n, key.k);
        case Kind::ThetaEq: return theta_eq(key.n, key.k);
        case Kind::ThetaLeq: return theta_leq(key.n, key.k);
        case Kind::Theta: return theta(key.n, key.k, key.m, key.h);
        case Kind::V: return v_m(key.n, key.k, key.m);
        case Kind::V0: return v0_m(key.n, key.k, key.m);
        case Kind::V0Complete: return v0_complete(key.n, key.k);
    }
    throw std::invalid_argument("coefficient: unknown kind");
}

BigInt Engine::prime_count(int n) {
    if (n < 1) throw std::invalid_argument("prime_count: need n >= 1");
    return ipow(n - 1, n - 1);
}

BigInt Engine::complete_preferences(int n) {
    if (n < 2) throw std::invalid_argument("complete_preferences: need n >= 2");
    return ipow(n - 1, n - 1);
}

BigInt Engine::a101334(int n) {
    if (n < 2) throw std::invalid_argument("a101334: need n >= 2");
    return ipow(n - 1, n - 1) - ipow(n, n - 2);
}

BigInt Engine::a071720_conjecture(int n) {
    if (n < 2) throw std::invalid_argument("a071720: need n >= 2");
    return (n - 1) * ipow(n + 1, n - 2);
}

BigInt Engine::closed_form(const std::string& name, int n) const {
    if (name == "primeCount") return prime_count(n);
    if (name == "completePreferences") return complete_preferences(n);
    if (name == "a101334") return a101334(n);
    if (name == "a071720conjecture") return a071720_conjecture(n);
    throw std::invalid_argument("closed_form: unknown name '" + name + "'");
}

BigInt Engine::abel_identity(long long z, long long w, int m) {
    if (w < 1 || m < 0) throw std::invalid_argument("abel_identity: need w >= 1, m >= 0");
    const BigInt lhs = ipow(z + w + m, m);
    BigInt rhs = 0;
    for (int i = 0; i <= m; ++i) {
        // the i = 0 term w(w+i)^{i-1} collapses to 1 exactly
        const BigInt w_part = i == 0 ? BigInt(1) : w * ipow(w + i, i - 1);
        rhs += binomial(m, i) * w_part * ipow(z + m - i, m - i);
    }
    return lhs - rhs;
}

}  // namespace naples
