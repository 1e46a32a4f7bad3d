#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <stdexcept>

namespace naples {

using BigInt = boost::multiprecision::cpp_int;

// Signed integer power with the 0^0 = 1 convention. exponent must be >= 0.
inline BigInt ipow(BigInt base, long long exponent) {
    if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt result = 1;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

// Power under the convention used throughout the recursions: base 1 absorbs
// a symbolically negative exponent, i.e. powc(1, -1) = 1. Shows up as
// (j+1)^{j-1} at j = 0, i^{i-2} at i = 1 and m^{m-2} at m = 1.
inline BigInt powc(long long base, long long exponent) {
    if (base < 1) throw std::invalid_argument("powc: base must be >= 1");
    if (base == 1) {
        if (exponent < -1) throw std::invalid_argument("powc: exponent below -1");
        return 1;
    }
    if (exponent < 0) throw std::invalid_argument("powc: negative exponent with base >= 2");
    return ipow(base, exponent);
}

// binomial(n, r) = 0 when r > n or r < 0.
inline BigInt binomial(long long n, long long r) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;  // exact at every step
    }
    return result;
}

inline BigInt multinomial(long long n, std::span<const long long> parts) {
    BigInt result = 1;
    long long rest = n;
    for (long long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        result *= binomial(rest, p);
        rest -= p;
    }
    if (rest != 0) throw std::invalid_argument("multinomial: parts do not sum to n");
    return result;
}

}  // namespace naples
