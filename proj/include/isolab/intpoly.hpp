// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Dense integer polynomials with exact arithmetic: the carrier type for
// characteristic polynomials, factors and trace polynomials. Includes
// *-symmetry classification, cyclotomic polynomials, trace polynomials,
// subresultant resultants and Yun squarefree decomposition.

#ifndef ISOLAB_INTPOLY_HPP
#define ISOLAB_INTPOLY_HPP

#include "isolab/base.hpp"

#include <compare>
#include <utility>

namespace isolab {

// Coefficients ascending (constant term first); normalized form has a nonzero
// trailing entry, the zero polynomial is the empty sequence.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : c(coeffs) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    const Int& lc() const {
        static const Int zero = 0;
        return c.empty() ? zero : c.back();
    }
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return 0;
        return c[i];
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

// Deterministic ordering: by degree, then lexicographic on coefficients from
// the leading term down.
inline bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

inline IntPoly poly_x() { return IntPoly{0, 1}; }
inline IntPoly poly_const(const Int& a) { return IntPoly{a}; }

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
}

inline IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return IntPoly(std::move(r));
}

inline IntPoly operator*(const Int& s, const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x *= s;
    r.normalize();
    return r;
}

inline IntPoly poly_pow(const IntPoly& a, long e) {
    IntPoly r{1};
    IntPoly base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Division by a monic divisor (exact quotient/remainder over Z).
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero() || !b.is_monic()) fail("NonMonic", "divmod_monic needs a monic divisor");
    std::vector<Int> rem = a.c;
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {IntPoly(), a};
    std::vector<Int> q(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        Int f = rem[i];
        if (f == 0) continue;
        q[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

// Exact division (throws if not divisible); divisor need not be monic.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail("DivideByZero", "exact division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    long da = a.degree(), db = b.degree();
    if (da < db) fail("NotDivisible", "degree too small in exact division");
    std::vector<Int> rem = a.c;
    std::vector<Int> q(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (rem[i] % b.lc() != 0) fail("NotDivisible", "leading coefficient does not divide");
        Int f = rem[i] / b.lc();
        q[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
    }
    for (const auto& x : rem)
        if (x != 0) fail("NotDivisible", "nonzero remainder in exact division");
    return IntPoly(std::move(q));
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
    try {
        divide_exact(a, b);
        return true;
    } catch (const error&) {
        return false;
    }
}

inline Int eval(const IntPoly& f, const Int& x) {
    Int r = 0;
    for (long i = f.degree(); i >= 0; --i) r = r * x + f.c[i];
    return r;
}

inline Rat eval_rat(const IntPoly& f, const Rat& x) {
    Rat r = 0;
    for (long i = f.degree(); i >= 0; --i) r = r * x + Rat(f.c[i]);
    return r;
}

inline IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<Int> r(f.degree());
    for (long i = 1; i <= f.degree(); ++i) r[i - 1] = Int(i) * f.c[i];
    return IntPoly(std::move(r));
}

inline Int content(const IntPoly& f) {
    Int g = 0;
    for (const auto& x : f.c) g = gcd_int(g, x);
    return g;
}

inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int ct = content(f);
    if (f.lc() < 0) ct = -ct;
    IntPoly r = f;
    for (auto& x : r.c) x /= ct;
    return r;
}

// f(X + a), in-place synthetic shifting.
inline IntPoly taylor_shift(const IntPoly& f, const Int& a) {
    IntPoly r = f;
    long n = r.degree();
    for (long k = 0; k < n; ++k) {
        for (long j = n - 1; j >= k; --j) r.c[j] += a * r.c[j + 1];
    }
    return r;
}

// X^{deg f} * f(1/X) — plain coefficient reversal (normalizes away nothing:
// caller must know f(0) != 0 to preserve degree).
inline IntPoly reverse_poly(const IntPoly& f) {
    std::vector<Int> r(f.c.rbegin(), f.c.rend());
    return IntPoly(std::move(r));
}

// ---------------------------------------------------------------------------
// *-symmetry

// F*(X) = F(0)^{-1} X^{deg F} F(1/X) for monic F with F(0) = ±1.
inline IntPoly reciprocal_star(const IntPoly& f) {
    if (!f.is_monic()) fail("NonMonic", "reciprocal_star needs a monic polynomial");
    if (f.coeff(0) == 0) fail("ZeroConstantTerm", "reciprocal_star needs f(0) != 0");
    IntPoly r = reverse_poly(f);
    if (f.coeff(0) == -1) r = -r;
    return r;
}

enum class Symmetry { PlusSymmetric, MinusSymmetric, NotStarSymmetric };

// PlusSymmetric iff f equals its reversal, MinusSymmetric iff f equals the
// negated reversal (then necessarily f(0) = -1).
inline Symmetry classify_symmetry(const IntPoly& f) {
    if (!f.is_monic()) fail("NonMonic", "classify_symmetry needs a monic polynomial");
    if (f.coeff(0) == 0) fail("ZeroConstantTerm", "classify_symmetry needs f(0) != 0");
    IntPoly rev = reverse_poly(f);
    if (f == rev) return Symmetry::PlusSymmetric;
    if (f == -rev) return Symmetry::MinusSymmetric;
    return Symmetry::NotStarSymmetric;
}

inline bool is_star_symmetric(const IntPoly& f) {
    return classify_symmetry(f) != Symmetry::NotStarSymmetric;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

inline IntPoly cyclotomic(long m) {
    if (m < 1) fail("BadIndex", "cyclotomic index must be >= 1");
    // X^m - 1 divided by Phi_d for all proper divisors d | m.
    std::vector<Int> xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    IntPoly num(std::move(xm));
    for (long d = 1; d < m; ++d) {
        if (m % d == 0) num = divmod_monic(num, cyclotomic(d)).first;
    }
    return num;
}

inline long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

// ---------------------------------------------------------------------------
// Trace polynomial: f(X) = X^m phi(X + 1/X) for +1-symmetric f of degree 2m.

inline IntPoly trace_polynomial(const IntPoly& f) {
    if (classify_symmetry(f) != Symmetry::PlusSymmetric)
        fail("NotPlusSymmetric", "trace polynomial needs a +1-symmetric input");
    if (f.degree() % 2 != 0) fail("OddDegree", "trace polynomial needs even degree");
    long m = f.degree() / 2;
    // P_k(Y) with X^k + X^{-k} = P_k(X + 1/X): P_0 = 2, P_1 = Y,
    // P_k = Y*P_{k-1} - P_{k-2}.
    std::vector<IntPoly> P(m + 1);
    P[0] = IntPoly{2};
    if (m >= 1) P[1] = poly_x();
    for (long k = 2; k <= m; ++k) P[k] = poly_x() * P[k - 1] - P[k - 2];
    IntPoly phi = poly_const(f.coeff(m));
    for (long k = 1; k <= m; ++k) phi = phi + f.coeff(m + k) * P[k];
    return phi;
}

// ---------------------------------------------------------------------------
// GCD over Z (primitive PRS) and Yun squarefree decomposition.

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, exact over Z.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    long db = b.degree();
    if (db < 0) fail("DivideByZero", "pseudo_rem by zero");
    if (a.degree() < db) return a;
    IntPoly r = a;
    const Int l = b.lc();
    long e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        long d = r.degree() - db;
        Int f = r.lc();
        for (auto& x : r.c) x *= l;
        for (long j = 0; j <= db; ++j) r.c[d + j] -= f * b.c[j];
        r.normalize();
        --e;
    }
    if (e > 0) {
        Int scale = pow_int(l, static_cast<unsigned long>(e));
        for (auto& x : r.c) x *= scale;
    }
    return r;
}

inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Int ca = content(a), cb = content(b);
    Int cg = gcd_int(ca, cb);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = b;
        b = primitive_part(r);
    }
    a = primitive_part(a);
    if (a.degree() == 0) return poly_const(cg == 0 ? 1 : cg);
    return cg * a;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    IntPoly p = primitive_part(f);
    if (p.degree() <= 0) return p;
    IntPoly g = gcd_poly(p, derivative(p));
    if (g.degree() <= 0) return p;
    return primitive_part(divide_exact(p, g));
}

// Yun's algorithm: returns pairs (g_i, i) with f = lc * prod g_i^i, g_i
// squarefree pairwise coprime (entries with g_i = 1 omitted).
inline std::vector<std::pair<IntPoly, long>> squarefree_decomposition(const IntPoly& f0) {
    std::vector<std::pair<IntPoly, long>> out;
    IntPoly f = primitive_part(f0);
    if (f.degree() <= 0) return out;
    IntPoly fp = derivative(f);
    IntPoly a = gcd_poly(f, fp);
    IntPoly b = divide_exact(f, a);
    IntPoly c = divide_exact(fp, a);
    IntPoly d = c - derivative(b);
    long i = 1;
    while (b.degree() > 0) {
        IntPoly g = gcd_poly(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divide_exact(b, g);
        c = divide_exact(d, g);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resultant / discriminant via the subresultant PRS (Cohen Alg. 3.3.7).

inline Int resultant(IntPoly A, IntPoly B) {
    if (A.is_zero() || B.is_zero()) return 0;
    if (A.degree() == 0) return pow_int(A.c[0], B.degree());
    if (B.degree() == 0) return pow_int(B.c[0], A.degree());
    Int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    Int a = content(A), b = content(B);
    Int t = pow_int(a, B.degree()) * pow_int(b, A.degree());
    for (auto& x : A.c) x /= a;
    for (auto& x : B.c) x /= b;
    Int g = 1, h = 1;
    while (true) {
        long dA = A.degree(), dB = B.degree();
        long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        B = R;
        if (B.is_zero()) return 0;
        Int div = g * pow_int(h, delta);
        for (auto& x : B.c) x /= div;
        g = A.lc();
        // h <- h^(1-delta) * g^delta
        if (delta == 0) {
            // unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int num = pow_int(g, delta);
            h = num / pow_int(h, delta - 1);
        }
        if (B.degree() == 0) {
            long dAf = A.degree();
            Int num = pow_int(B.c[0], dAf);
            Int res = num / pow_int(h, dAf - 1);
            return s * t * res;
        }
    }
}

inline Int discriminant(const IntPoly& f) {
    if (f.degree() < 1) fail("BadDegree", "discriminant needs degree >= 1");
    Int r = resultant(f, derivative(f));
    Int lead = f.lc();
    Int d = r / lead;
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

}  // namespace isolab

#endif  // ISOLAB_INTPOLY_HPP
