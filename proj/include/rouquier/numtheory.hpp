#pragma once

#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rouquier::nt {

// (prime, exponent) pairs, increasing primes
inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long inv_mod(long a, long m) {
    if (m == 1) return 0;
    long r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1) throw DomainError("inv_mod: not invertible");
    return mod(s0, m);
}

// multiplicative order of a modulo m (gcd(a,m)=1)
inline long order_mod(long a, long m) {
    if (m == 1) return 1;
    long x = mod(a, m), k = 1;
    while (x != 1) x = x * a % m, ++k;
    return k;
}

// p-adic valuation of a nonzero long
inline int vp(long n, long p) {
    int v = 0;
    while (n % p == 0) n /= p, ++v;
    return v;
}

}  // namespace rouquier::nt
