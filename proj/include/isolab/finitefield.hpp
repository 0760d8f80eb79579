// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Polynomials over F_p: arithmetic, squarefree / distinct-degree /
// equal-degree (Cantor-Zassenhaus) factorization with deterministic seeding,
// reciprocal-symmetry test, and the Witt-group arithmetic of finite fields.

#ifndef ISOLAB_FINITEFIELD_HPP
#define ISOLAB_FINITEFIELD_HPP

#include "isolab/intpoly.hpp"

namespace isolab {

// Dense polynomial over F_p, coefficients in [0, p), ascending.
struct FpPoly {
    Int p;
    std::vector<Int> c;

    FpPoly() : p(0) {}
    FpPoly(Int prime, std::vector<Int> coeffs) : p(std::move(prime)), c(std::move(coeffs)) {
        reduce();
    }

    void reduce() {
        for (auto& x : c) x = mod_pos(x, p);
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return 0;
        return c[i];
    }
    const Int& lc() const {
        static const Int zero = 0;
        return c.empty() ? zero : c.back();
    }

    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

inline bool fp_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

inline FpPoly fp_from(const IntPoly& f, const Int& p) {
    return FpPoly(p, f.c);
}

inline FpPoly fp_const(const Int& p, const Int& a) { return FpPoly(p, {a}); }
inline FpPoly fp_x(const Int& p) { return FpPoly(p, {0, 1}); }

inline FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return FpPoly(a.p, std::move(r));
}

inline FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return FpPoly(a.p, std::move(r));
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p.is_zero() ? b.p : a.p, {});
    std::vector<Int> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = (r[i + j] + a.c[i] * b.c[j]) % a.p;
    }
    return FpPoly(a.p, std::move(r));
}

inline FpPoly fp_scale(const FpPoly& a, const Int& s) {
    FpPoly r = a;
    for (auto& x : r.c) x = x * s % r.p;
    r.reduce();
    return r;
}

inline FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return fp_scale(a, mod_inverse(a.lc(), a.p));
}

inline std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) fail("DivideByZero", "F_p division by zero");
    long db = b.degree();
    Int inv = mod_inverse(b.lc(), b.p);
    std::vector<Int> rem = a.c;
    long da = a.degree();
    if (da < db) return {FpPoly(a.p, {}), a};
    std::vector<Int> q(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        Int f = mod_pos(rem[i], a.p);
        if (f == 0) continue;
        f = f * inv % a.p;
        q[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] = mod_pos(rem[i - db + j] - f * b.c[j], a.p);
    }
    return {FpPoly(a.p, std::move(q)), FpPoly(a.p, std::move(rem))};
}

inline FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }
inline FpPoly fp_div(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).first; }

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = b;
        b = r;
    }
    return fp_monic(a);
}

// g = gcd(a,b) together with u,v: u*a + v*b = g.
inline std::tuple<FpPoly, FpPoly, FpPoly> fp_ext_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_const(a.p, 1), s1 = fp_const(a.p, 0);
    FpPoly t0 = fp_const(a.p, 0), t1 = fp_const(a.p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = fp_divmod(r0, r1);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Int inv = mod_inverse(r0.lc(), a.p);
    return {fp_scale(r0, inv), fp_scale(s0, inv), fp_scale(t0, inv)};
}

inline FpPoly fp_derivative(const FpPoly& f) {
    if (f.degree() < 1) return FpPoly(f.p, {});
    std::vector<Int> r(f.degree());
    for (long i = 1; i <= f.degree(); ++i) r[i - 1] = Int(i) * f.c[i] % f.p;
    return FpPoly(f.p, std::move(r));
}

inline FpPoly fp_pow_mod(FpPoly base, Int e, const FpPoly& m) {
    FpPoly r = fp_const(base.p, 1);
    base = fp_mod(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mod(fp_mul(r, base), m);
        base = fp_mod(fp_mul(base, base), m);
        e >>= 1;
    }
    return r;
}

inline Int fp_eval(const FpPoly& f, const Int& x) {
    Int r = 0;
    for (long i = f.degree(); i >= 0; --i) r = mod_pos(r * x + f.c[i], f.p);
    return r;
}

// p-th root of a polynomial whose derivative vanishes: f(X) = g(X^p) -> g
// (over F_p, coefficients are their own p-th roots).
inline FpPoly fp_pth_root(const FpPoly& f) {
    long p = static_cast<long>(f.p);
    std::vector<Int> r;
    for (long i = 0; i <= f.degree(); i += p) r.push_back(f.coeff(i));
    return FpPoly(f.p, std::move(r));
}

// ---------------------------------------------------------------------------
// Factorization over F_p.

namespace detail {

// Squarefree decomposition over F_p: pairs (g, multiplicity).
inline void fp_squarefree(const FpPoly& f, long mult,
                          std::vector<std::pair<FpPoly, long>>& out) {
    if (f.degree() < 1) return;
    FpPoly fp = fp_derivative(f);
    if (fp.is_zero()) {
        fp_squarefree(fp_pth_root(f), mult * static_cast<long>(f.p), out);
        return;
    }
    FpPoly a = fp_gcd(f, fp);
    FpPoly w = fp_div(f, a);
    long i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, a);
        FpPoly g = fp_div(w, y);
        if (g.degree() > 0) out.emplace_back(fp_monic(g), mult * i);
        w = y;
        a = fp_div(a, y);
        ++i;
    }
    if (a.degree() > 0) fp_squarefree(a, mult, out);  // remaining p-th power part
}

// Distinct-degree decomposition of a squarefree monic f: (product, degree d).
inline std::vector<std::pair<FpPoly, long>> fp_distinct_degree(const FpPoly& f) {
    std::vector<std::pair<FpPoly, long>> out;
    FpPoly rem = f;
    FpPoly h = fp_mod(fp_x(f.p), rem);  // X^(p^d) mod rem, iterated
    long d = 0;
    while (rem.degree() > 0 && rem.degree() >= 2 * (d + 1)) {
        ++d;
        h = fp_pow_mod(h, f.p, rem);
        FpPoly g = fp_gcd(fp_sub(h, fp_x(f.p)), rem);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = fp_div(rem, g);
            h = fp_mod(h, rem);
        }
    }
    if (rem.degree() > 0) out.emplace_back(rem, rem.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map at p = 2) of a
// squarefree monic product of irreducibles all of degree d.
inline void fp_equal_degree(const FpPoly& f, long d, std::mt19937_64& rng,
                            std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(fp_monic(f));
        return;
    }
    const Int& p = f.p;
    while (true) {
        // random monic polynomial of degree < 2d (nonconstant helps)
        std::vector<Int> rc(2 * d, 0);
        for (auto& x : rc) x = Int(static_cast<long long>(rng() % 0x7fffffffULL)) % p;
        FpPoly a(p, std::move(rc));
        if (a.degree() < 1) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map: T(a) = a + a^2 + a^4 + ... + a^(2^(d-1)) mod f
                FpPoly t = fp_mod(a, f);
                FpPoly acc = t;
                for (long i = 1; i < d; ++i) {
                    t = fp_mod(fp_mul(t, t), f);
                    acc = fp_add(acc, t);
                }
                g = fp_gcd(acc, f);
            } else {
                Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
                FpPoly b = fp_pow_mod(a, e, f);
                g = fp_gcd(fp_sub(b, fp_const(p, 1)), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            fp_equal_degree(g, d, rng, out);
            fp_equal_degree(fp_div(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

// Full factorization of f mod p; canonical ascending order, with
// multiplicities. The equal-degree split uses an explicit seed so runs are
// reproducible.
inline std::vector<std::pair<FpPoly, long>> factor_mod_p(const IntPoly& f, const Int& p,
                                                         std::uint64_t seed = 0x15075ab) {
    FpPoly fp = fp_from(f, p);
    if (fp.is_zero()) fail("ZeroReduction", "polynomial vanishes mod p");
    std::vector<std::pair<FpPoly, long>> sf;
    detail::fp_squarefree(fp_monic(fp), 1, sf);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, long>> out;
    for (auto& [g, mult] : sf) {
        for (auto& [part, d] : detail::fp_distinct_degree(g)) {
            std::vector<FpPoly> irr;
            detail::fp_equal_degree(part, d, rng, irr);
            for (auto& h : irr) out.emplace_back(h, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return fp_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

// h(0)^{-1} X^{deg h} h(1/X) over F_p.
inline FpPoly fp_reciprocal_star(const FpPoly& h) {
    if (h.coeff(0) == 0) fail("ZeroConstant", "reciprocal needs h(0) != 0 mod p");
    std::vector<Int> r(h.c.rbegin(), h.c.rend());
    FpPoly rev(h.p, std::move(r));
    return fp_scale(rev, mod_inverse(h.coeff(0), h.p));
}

inline bool star_symmetric_mod_p(const FpPoly& h) {
    // Compare with the monic normalization so the test is scale-free.
    return fp_monic(h) == fp_reciprocal_star(fp_monic(h));
}

// ---------------------------------------------------------------------------
// Witt groups of finite fields.
//
// W(F_q) is Z/2 in characteristic 2 (dimension parity), Z/2 x Z/2 when
// q = 1 mod 4 and Z/4 when q = 3 mod 4. A class is determined by dimension
// parity and discriminant square class; the trivial class is the one with
// even dimension and discriminant 1.

enum class WittGroup { Z2, Z2xZ2, Z4 };

struct WittClassFq {
    Int q;
    int dim_parity = 0;   // dim mod 2
    int disc_class = 0;   // 0 = square class of 1, 1 = non-square (unused in char 2)

    bool operator==(const WittClassFq& o) const {
        return q == o.q && dim_parity == o.dim_parity && disc_class == o.disc_class;
    }
};

inline Int prime_of_prime_power(const Int& q) {
    if (q < 2) fail("NotPrimePower", "q must be a prime power >= 2");
    auto fac = factor_integer(q);
    if (fac.size() != 1) fail("NotPrimePower", "q is not a prime power");
    return fac.begin()->first;
}

inline WittGroup witt_group_structure(const Int& q) {
    Int p = prime_of_prime_power(q);
    if (p == 2) return WittGroup::Z2;
    if (q % 4 == 1) return WittGroup::Z2xZ2;
    return WittGroup::Z4;
}

// Is a a nonzero square in F_q (q odd prime here; extension fields only enter
// through the group table, not through element arithmetic)?
inline bool is_square_fq(const Int& a, const Int& q) {
    Int r = mod_pos(a, q);
    if (r == 0) fail("ZeroInput", "square test of zero");
    return mod_pow(r, (q - 1) / 2, q) == 1;
}

// Class of a 1-dimensional form <a> over F_q, q an odd prime.
inline WittClassFq witt_class_of_unit(const Int& a, const Int& q) {
    WittClassFq w;
    w.q = q;
    w.dim_parity = 1;
    // disc of <a> is a itself (dimension 1).
    w.disc_class = is_square_fq(a, q) ? 0 : 1;
    return w;
}

inline WittClassFq witt_zero(const Int& q) {
    WittClassFq w;
    w.q = q;
    return w;
}

inline WittClassFq witt_add(const WittClassFq& a, const WittClassFq& b) {
    if (a.q != b.q) fail("FieldMismatch", "witt_add over different fields");
    WittClassFq r;
    r.q = a.q;
    r.dim_parity = (a.dim_parity + b.dim_parity) % 2;
    Int p = prime_of_prime_power(a.q);
    if (p == 2) {
        r.disc_class = 0;
        return r;
    }
    // disc(u + v) = disc(u) disc(v) (-1)^(dim u * dim v) as square classes.
    bool minus_one_square = (a.q % 4 == 1);
    int flip = (a.dim_parity * b.dim_parity) % 2;
    r.disc_class = (a.disc_class + b.disc_class + (minus_one_square ? 0 : flip)) % 2;
    return r;
}

inline bool witt_is_trivial(const WittClassFq& w) {
    return w.dim_parity == 0 && w.disc_class == 0;
}

}  // namespace isolab

#endif  // ISOLAB_FINITEFIELD_HPP
