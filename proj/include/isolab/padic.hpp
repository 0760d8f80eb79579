// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Local arithmetic over Q_p and R: square classes, Hilbert symbols, and
// Hasse-Witt invariants of diagonal quadratic forms.

#ifndef ISOLAB_PADIC_HPP
#define ISOLAB_PADIC_HPP

#include <set>

#include "isolab/base.hpp"

namespace isolab {

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    Int p = 0;

    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;  // finite places first
        return p < o.p;
    }
};

inline Place place_infinity() { return Place{true, 0}; }

inline Place place_at(const Int& p) {
    if (!is_prime(p)) fail("NotPrime", "finite places are indexed by primes");
    return Place{false, p};
}

inline long rat_valuation(const Rat& a, const Int& p) {
    if (a == 0) fail("ZeroInput", "valuation of zero");
    return valuation(numerator(a), p) - valuation(denominator(a), p);
}

namespace detail {

// Unit part of a at p, as a residue mod p^k (k >= 1); a must be nonzero.
inline Int unit_residue(const Rat& a, const Int& p, const Int& pk) {
    Int num = numerator(a), den = denominator(a);
    long vn = valuation(num, p), vd = valuation(den, p);
    Int un = num / pow_int(p, static_cast<unsigned long>(vn));
    Int ud = den / pow_int(p, static_cast<unsigned long>(vd));
    return mod_pos(mod_pos(un, pk) * mod_inverse(mod_pos(ud, pk), pk), pk);
}

// Legendre symbol of a p-adic unit residue, odd p.
inline int legendre(const Int& u, const Int& p) {
    Int r = mod_pow(mod_pos(u, p), (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

}  // namespace detail

// Canonical representative of the square class of a in Q_v^* / (Q_v^*)^2.
// Odd p: {1, u, p, u*p} with u the least quadratic non-residue mod p;
// p = 2: {+-1, +-2, +-5, +-10}; real place: {+1, -1}.
struct QpSquareClass {
    Place v;
    Int class_id = 1;

    bool operator==(const QpSquareClass& o) const { return v == o.v && class_id == o.class_id; }
};

inline QpSquareClass square_class(const Rat& a, const Place& v) {
    if (a == 0) fail("ZeroInput", "square class of zero");
    QpSquareClass out;
    out.v = v;
    if (v.infinite) {
        out.class_id = a > 0 ? 1 : -1;
        return out;
    }
    const Int& p = v.p;
    if (p == 2) {
        long val = rat_valuation(a, 2);
        Int u8 = detail::unit_residue(a, 2, 8);
        // unit square classes mod 8: 1 -> 1, 3 -> -5, 5 -> 5, 7 -> -1
        Int rep = u8 == 1 ? Int(1) : u8 == 3 ? Int(-5) : u8 == 5 ? Int(5) : Int(-1);
        out.class_id = (val % 2 != 0) ? rep * 2 : rep;
        return out;
    }
    long val = rat_valuation(a, p);
    Int u = detail::unit_residue(a, p, p);
    Int nonres = 2;
    while (detail::legendre(nonres, p) == 1) ++nonres;
    Int rep = detail::legendre(u, p) == 1 ? Int(1) : nonres;
    out.class_id = (val % 2 != 0) ? rep * p : rep;
    return out;
}

// Standard local Hilbert symbol (a, b)_v in {+1, -1}.
inline int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) fail("ZeroInput", "Hilbert symbol needs nonzero arguments");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.p;
    long alpha = rat_valuation(a, p), beta = rat_valuation(b, p);
    if (p == 2) {
        // (a,b)_2 = (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u)),
        // u, w the odd unit parts, eps = (u-1)/2, omega = (u^2-1)/8 mod 2.
        Int u = detail::unit_residue(a, 2, 8), w = detail::unit_residue(b, 2, 8);
        long eps_u = ((u - 1) / 2) % 2 != 0 ? 1 : 0;
        long eps_w = ((w - 1) / 2) % 2 != 0 ? 1 : 0;
        long om_u = ((u * u - 1) / 8) % 2 != 0 ? 1 : 0;
        long om_w = ((w * w - 1) / 8) % 2 != 0 ? 1 : 0;
        long e = eps_u * eps_w + alpha * om_w + beta * om_u;
        return e % 2 == 0 ? 1 : -1;
    }
    // odd p: (a,b)_p = legendre((-1)^(alpha beta) u^beta w^alpha)
    Int u = detail::unit_residue(a, p, p), w = detail::unit_residue(b, p, p);
    int s = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && detail::legendre(p - 1, p) == -1) s = -s;
    if (beta % 2 != 0 && detail::legendre(u, p) == -1) s = -s;
    if (alpha % 2 != 0 && detail::legendre(w, p) == -1) s = -s;
    return s;
}

// Hasse-Witt invariant of <a_1, ..., a_n> at v, additively in {0, 1}:
// the number of indices i < j with (a_i, a_j)_v = -1, mod 2.
inline int hasse_witt(const std::vector<Rat>& diag, const Place& v) {
    int e = 0;
    for (const Rat& a : diag)
        if (a == 0) fail("ZeroEntry", "diagonal entries must be nonzero");
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            if (hilbert_symbol(diag[i], diag[j], v) == -1) e ^= 1;
    return e;
}

// The finite places that can support a nontrivial symbol or square-class
// datum for the given nonzero rationals: primes dividing 2 or any numerator
// or denominator.
inline std::vector<Place> supporting_places(const std::vector<Rat>& vals) {
    std::set<Int> primes{2};
    for (const Rat& a : vals) {
        if (a == 0) fail("ZeroEntry", "support of zero");
        for (const Int& q : prime_divisors(abs_int(numerator(a)))) primes.insert(q);
        for (const Int& q : prime_divisors(abs_int(denominator(a)))) primes.insert(q);
    }
    std::vector<Place> out;
    for (const Int& q : primes) out.push_back(place_at(q));
    out.push_back(place_infinity());
    return out;
}

}  // namespace isolab

#endif  // ISOLAB_PADIC_HPP
