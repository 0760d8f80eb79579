// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared scalar types and integer utilities: arbitrary-precision integers and
// rationals, error type with stable codes, primality testing and integer
// factorization (trial division + Brent's rho), perfect-square tests.

#ifndef ISOLAB_BASE_HPP
#define ISOLAB_BASE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace isolab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All library failures carry a stable machine-readable code (used verbatim as
// the CLI error code) plus a human-readable message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw error(code, msg);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Largest e with p^e | a (a != 0).
inline long valuation(Int a, const Int& p) {
    if (a == 0) fail("ZeroInput", "valuation of zero");
    a = abs_int(a);
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// ---------------------------------------------------------------------------
// Modular arithmetic on Int.

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int mod_pow(Int base, Int e, const Int& m) {
    Int r = 1;
    base = mod_pos(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a, m) = 1; throws NotInvertible otherwise.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_pos(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) fail("NotInvertible", "element not invertible in Z/m");
    return mod_pos(s0, m);
}

// ---------------------------------------------------------------------------
// Primality and factorization.

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3.3e24; overwhelming confidence beyond.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

inline Int pollard_brent(const Int& n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        Int y = Int(rng() % 0xffffffffULL) % n;
        Int c = Int(rng() % 0xffffffffULL) % n;
        if (c == 0) c = 1;
        Int x = y, d = 1, q = 1, ys = y;
        const int m = 64;
        int r = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = (y * y + c) % n;
            for (int k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (int i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_int(x - y) % n;
                }
                d = gcd_int(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd_int(abs_int(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

// Full factorization n = prod p^e (n != 0); sign ignored.
inline std::map<Int, long> factor_integer(Int n) {
    std::map<Int, long> out;
    n = abs_int(n);
    if (n <= 1) return out;
    for (long p = 2; p < 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    std::vector<Int> stack{n};
    std::uint64_t seed = 0x5eed;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        Int d = pollard_brent(m, seed++);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

// Distinct prime divisors of n, ascending.
inline std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (auto& [p, e] : factor_integer(n)) out.push_back(p);
    return out;
}

inline std::vector<long> primes_up_to(long bound) {
    std::vector<bool> sieve(bound + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

}  // namespace isolab

#endif  // ISOLAB_BASE_HPP
