#pragma once

// Integer factorization for the multiplicative factor basis: Miller-Rabin +
// Pollard rho.  Inputs here are numerators/denominators of small-height
// rationals and stay well inside 128 bits in practice.

#include <algorithm>
#include <map>
#include <vector>

#include "rational.hpp"

namespace adilog {

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

inline Int powmod(Int b, Int e, const Int& m) {
    Int acc(1);
    b %= m;
    while (e > 0) {
        if (bit_test(e, 0)) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

inline bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (!bit_test(d, 0)) { d >>= 1; ++r; }
    // deterministic base set for < 3.3e24, ample here
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    // Brent's variant with deterministic parameter sweep.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int diff_prod = 1;
        int lim = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            diff_prod = diff_prod * diff % n;
            if (++lim % 32 == 0) {
                d = gcd(diff_prod, n);
                if (d != 1 && d != n) return d;
                if (d == n) break;
            }
        }
        d = gcd(diff_prod, n);
        if (d != 1 && d != n) return d;
    }
}

inline void factor_rec(Int n, std::map<Int, long>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) { out[n] += 1; return; }
    for (int p : {2, 3, 5, 7, 11, 13}) {
        if (n % p == 0) {
            out[Int(p)] += 1;
            factor_rec(n / p, out);
            return;
        }
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

// n != 0; returns prime -> exponent, sign separately.
inline std::map<Int, long> factor_int(Int n, int* sign = nullptr) {
    require(n != 0, errc::zero_element, "factor_int(0)");
    if (sign) *sign = n < 0 ? -1 : 1;
    if (n < 0) n = -n;
    std::map<Int, long> out;
    detail::factor_rec(n, out);
    return out;
}

// Exponent map of a nonzero rational over the primes, sign recorded separately.
inline std::map<Int, long> factor_rat(const Rat& q, int* sign = nullptr) {
    require(q != 0, errc::zero_element, "factor_rat(0)");
    auto out = factor_int(rat_num(q), sign);
    for (auto& [p, e] : factor_int(rat_den(q))) out[p] -= e;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace adilog
