// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Factorization of squarefree integer polynomials over Z_p with certified
// ramification/residue invariants, and classification of the quadratic
// behavior (split / unramified / ramified) of reciprocal factors.
//
// Strategy: a squarefree reduction mod p is settled by Hensel lifting alone.
// Otherwise factors are grouped by their mod-p residual and split further by
// Newton polygons of the residual-adic expansion: a single polygon segment of
// slope a/e in lowest terms with e the full segment length certifies an
// irreducible factor with ramification index e; integral slopes are removed
// by the substitution X -> p^t X and recursion. Shapes beyond these (e.g.
// fractional-slope segments whose residual polynomial still factors) finish
// with status PrecisionExceeded instead of an uncertified guess.

#ifndef ISOLAB_ZPFACTOR_HPP
#define ISOLAB_ZPFACTOR_HPP

#include <cstdlib>

#include "isolab/zfactor.hpp"

namespace isolab {

struct PadicFactor {
    Int p;
    IntPoly lifted;           // representative mod p^precision, monic
    long precision = 0;       // k: coefficients certified mod p^k
    long degree = 0;
    FpPoly residual;          // irreducible mod-p residual
    long residual_mult = 0;   // e with factor = residual^e (mod p)
    bool star_symmetric = false;
    long ramification_index = 0;
    long residue_degree = 0;
};

enum class FactorStatus { Complete, PrecisionExceeded };

struct PadicFactorization {
    IntPoly input;
    Int p;
    std::vector<PadicFactor> factors;
    FactorStatus status = FactorStatus::Complete;
};

inline long default_precision_budget() {
    if (const char* env = std::getenv("ISOLAB_PRECISION_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 240;
}

namespace detail {

struct need_more_precision {};
struct unsupported_shape {};

// valuation of an integer representative, capped at k (0 counts as >= k)
inline long capped_valuation(const Int& a, const Int& p, long k) {
    if (a == 0) return k;
    long v = valuation(a, p);
    return v < k ? v : k;
}

inline long poly_capped_valuation(const IntPoly& f, const Int& p, long k) {
    long v = k;
    for (const auto& x : f.c) v = std::min(v, capped_valuation(x, p, k));
    return v;
}

// residual-adic expansion g = sum a_i phi^i (deg a_i < deg phi), returning
// the capped valuations v_i of the coefficients a_0 .. a_e.
inline std::vector<long> expansion_valuations(IntPoly g, const IntPoly& phi, const Int& p,
                                              long k) {
    std::vector<long> vals;
    while (g.degree() >= phi.degree()) {
        auto [q, r] = divmod_monic(g, phi);
        vals.push_back(poly_capped_valuation(r, p, k));
        g = q;
    }
    vals.push_back(poly_capped_valuation(g, p, k));
    return vals;
}

// Lower convex hull vertex indices of the points (i, v_i), left to right.
inline std::vector<size_t> lower_hull(const std::vector<long>& v) {
    std::vector<size_t> hull;
    for (size_t i = 0; i < v.size(); ++i) {
        while (hull.size() >= 2) {
            size_t a = hull[hull.size() - 2], b = hull.back();
            // drop b if it is above or on segment a-i
            if ((v[b] - v[a]) * static_cast<long>(i - a) >=
                (v[i] - v[a]) * static_cast<long>(b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }
    return hull;
}

struct LocalChunk {
    IntPoly rep;   // mod p^k
    long k;
};

// Split a monic chunk (known mod p^k) into certified irreducible-over-Z_p
// pieces; each output pair is (representative, (ramification, residue deg)).
// Throws need_more_precision / unsupported_shape.
inline void local_split(const LocalChunk& chunk, const Int& p,
                        std::vector<std::pair<LocalChunk, std::pair<long, long>>>& out) {
    const IntPoly& g = chunk.rep;
    long k = chunk.k;
    if (k < 2) throw need_more_precision{};
    if (g.degree() == 0) return;
    Int pk = pow_int(p, static_cast<unsigned long>(k));

    auto modfac = factor_mod_p(g, p);
    if (modfac.size() > 1 ||
        (modfac.size() == 1 && modfac[0].first.degree() < g.degree() && modfac[0].second == 1)) {
        // several residual groups (or one residual not filling the degree):
        // split along pairwise-coprime residual powers and recurse.
        std::vector<FpPoly> parts;
        for (auto& [h, e] : modfac) {
            FpPoly part = fp_const(p, 1);
            for (long j = 0; j < e; ++j) part = fp_mul(part, h);
            parts.push_back(part);
        }
        if (parts.size() == 1) {
            // lone residual power smaller than deg g: reduction dropped
            // degree (cannot happen for monic g) — treat as unsupported.
            throw unsupported_shape{};
        }
        auto chunks = multifactor_hensel(poly_mod(g, pk), parts, p, k);
        for (auto& c : chunks) local_split({c, k}, p, out);
        return;
    }

    // single residual group: g = hbar^e mod p
    const FpPoly& hbar = modfac[0].first;
    long e = modfac[0].second;
    long d = hbar.degree();
    if (e == 1) {
        // unramified: g is irreducible with residue degree = deg g
        out.push_back({chunk, {1, d}});
        return;
    }

    IntPoly phi(std::vector<Int>(hbar.c));  // monic integer lift of the residual
    auto vals = expansion_valuations(poly_mod(g, pk), phi, p, k);
    if (static_cast<long>(vals.size()) != e + 1 || vals[e] != 0) throw unsupported_shape{};
    auto hull = lower_hull(vals);
    for (size_t idx : hull)
        if (vals[idx] >= k && idx != static_cast<size_t>(e)) throw need_more_precision{};

    if (hull.size() == 2 && hull[0] == 0) {
        long v0 = vals[0];
        if (gcd_int(Int(v0), Int(e)) == 1) {
            // single segment, slope v0/e in lowest terms with denominator e:
            // totally-ramified-over-the-residual certificate.
            out.push_back({chunk, {e, d}});
            return;
        }
        if (d == 1 && v0 % e == 0) {
            // integral slope t: substitute X -> c + p^t Y and recurse on
            // g(c + p^t Y) / p^(t e), then map factors back.
            long t = v0 / e;
            long k2 = k - t * e;
            if (k2 < 2) throw need_more_precision{};
            Int c = phi.c[0] == 0 ? Int(0) : p - phi.c[0];  // phi = X - c
            IntPoly shifted = taylor_shift(poly_mod(g, pk), c);
            std::vector<Int> sc(e + 1, 0);
            Int pt = pow_int(p, static_cast<unsigned long>(t));
            Int scale = pow_int(pt, static_cast<unsigned long>(e));
            for (long i = 0; i <= e; ++i) {
                Int num = shifted.coeff(i) * pow_int(pt, static_cast<unsigned long>(i));
                if (num % scale != 0) throw need_more_precision{};
                sc[i] = num / scale;
            }
            Int pk2 = pow_int(p, static_cast<unsigned long>(k2));
            LocalChunk inner{poly_mod(IntPoly(std::move(sc)), pk2), k2};
            std::vector<std::pair<LocalChunk, std::pair<long, long>>> sub;
            local_split(inner, p, sub);
            for (auto& [piece, ed] : sub) {
                // map h(Y) back: H(X) = p^(t deg h) h((X - c) / p^t)
                long dh = piece.rep.degree();
                std::vector<Int> hc(dh + 1, 0);
                for (long i = 0; i <= dh; ++i)
                    hc[i] = piece.rep.coeff(i) *
                            pow_int(pt, static_cast<unsigned long>(dh - i));
                IntPoly H = taylor_shift(IntPoly(std::move(hc)), -c);
                Int pk3 = pow_int(p, static_cast<unsigned long>(piece.k));
                out.push_back({{poly_mod(H, pk3), piece.k}, ed});
            }
            return;
        }
        throw unsupported_shape{};
    }

    if (d == 1) {
        // multiple segments: peel off the shallowest slope when integral.
        size_t j = hull[hull.size() - 2];
        long rise = vals[j], run = e - static_cast<long>(j);
        if (rise % run != 0) throw unsupported_shape{};
        long t = rise / run;
        if (t <= 0) throw unsupported_shape{};
        long k2 = k - t * e;
        if (k2 < 2) throw need_more_precision{};
        Int c = phi.c[0] == 0 ? Int(0) : p - phi.c[0];
        IntPoly shifted = taylor_shift(poly_mod(g, pk), c);
        Int pt = pow_int(p, static_cast<unsigned long>(t));
        Int scale = pow_int(pt, static_cast<unsigned long>(e));
        std::vector<Int> sc(e + 1, 0);
        for (long i = 0; i <= e; ++i) {
            Int num = shifted.coeff(i) * pow_int(pt, static_cast<unsigned long>(i));
            if (num % scale != 0) throw need_more_precision{};
            sc[i] = num / scale;
        }
        Int pk2 = pow_int(p, static_cast<unsigned long>(k2));
        IntPoly g2 = poly_mod(IntPoly(std::move(sc)), pk2);
        // g2 mod p = Y^j * u(Y) with u(0) != 0: coprime split, then recurse.
        FpPoly g2bar = fp_from(g2, p);
        std::vector<Int> yj(j + 1, 0);
        yj[j] = 1;
        FpPoly ypart(p, std::move(yj));
        FpPoly upart = fp_div(g2bar, ypart);
        if (!fp_mod(g2bar, ypart).is_zero() || upart.coeff(0) == 0) throw need_more_precision{};
        auto pieces2 = multifactor_hensel(g2, {ypart, upart}, p, k2);
        std::vector<std::pair<LocalChunk, std::pair<long, long>>> sub;
        for (auto& c2 : pieces2) local_split({c2, k2}, p, sub);
        for (auto& [piece, ed] : sub) {
            long dh = piece.rep.degree();
            std::vector<Int> hc(dh + 1, 0);
            for (long i = 0; i <= dh; ++i)
                hc[i] = piece.rep.coeff(i) * pow_int(pt, static_cast<unsigned long>(dh - i));
            IntPoly H = taylor_shift(IntPoly(std::move(hc)), -c);
            Int pk3 = pow_int(p, static_cast<unsigned long>(piece.k));
            out.push_back({{poly_mod(H, pk3), piece.k}, ed});
        }
        return;
    }
    throw unsupported_shape{};
}

}  // namespace detail

// Is h (monic mod p^k) equal to its reciprocal h(0)^{-1} X^d h(1/X) mod p^k?
inline bool star_symmetric_mod_pk(const IntPoly& h, const Int& p, long k) {
    Int pk = pow_int(p, static_cast<unsigned long>(k));
    IntPoly r = poly_mod(h, pk);
    if (r.coeff(0) % p == 0) return false;  // reciprocal factors have unit constant
    Int inv = mod_inverse(mod_pos(r.coeff(0), pk), pk);
    std::vector<Int> rev(r.c.rbegin(), r.c.rend());
    IntPoly star(std::move(rev));
    return poly_mod(inv * star, pk) == r;
}

inline PadicFactorization factor_over_zp(const IntPoly& f, const Int& p,
                                         long precision_budget = default_precision_budget()) {
    if (precision_budget <= 0) fail("BudgetNonpositive", "precision budget must be positive");
    if (!f.is_monic()) fail("NonMonic", "Z_p factorization expects a monic polynomial");
    if (eval(f, 0) == 0) fail("ZeroConstantTerm", "f(0) must be nonzero");
    if (gcd_poly(f, derivative(f)).degree() != 0)
        fail("NotSquarefree", "Z_p factorization expects a squarefree polynomial");

    PadicFactorization result;
    result.input = f;
    result.p = p;

    Int disc = discriminant(f);
    long k = (disc == 0 ? 0 : 2 * valuation(disc, p)) + 8;
    for (;; k *= 2) {
        if (k > precision_budget) {
            result.status = FactorStatus::PrecisionExceeded;
            result.factors.clear();
            return result;
        }
        std::vector<std::pair<detail::LocalChunk, std::pair<long, long>>> raw;
        try {
            detail::local_split({poly_mod(f, pow_int(p, static_cast<unsigned long>(k))), k}, p,
                                raw);
        } catch (const detail::need_more_precision&) {
            continue;
        } catch (const detail::unsupported_shape&) {
            result.status = FactorStatus::PrecisionExceeded;
            result.factors.clear();
            return result;
        }
        result.factors.clear();
        for (auto& [chunk, ed] : raw) {
            PadicFactor pf;
            pf.p = p;
            pf.lifted = chunk.rep;
            pf.precision = chunk.k;
            pf.degree = chunk.rep.degree();
            auto rf = factor_mod_p(chunk.rep, p);
            pf.residual = rf[0].first;  // single residual by construction
            pf.residual_mult = rf[0].second;
            pf.ramification_index = ed.first;
            pf.residue_degree = ed.second;
            pf.star_symmetric = star_symmetric_mod_pk(chunk.rep, p, chunk.k);
            result.factors.push_back(std::move(pf));
        }
        std::sort(result.factors.begin(), result.factors.end(),
                  [](const PadicFactor& a, const PadicFactor& b) {
                      return poly_less(a.lifted, b.lifted);
                  });
        result.status = FactorStatus::Complete;
        return result;
    }
}

// ---------------------------------------------------------------------------
// Place classification for reciprocal factors at odd p.

enum class PlaceClass { Split, Unramified, Ramified };

namespace detail {

// Trace polynomial of a +1-symmetric representative mod p^k (no exact
// symmetry requirement; mirrors trace_polynomial on reduced coefficients).
inline IntPoly trace_polynomial_mod(const IntPoly& f, const Int& pk) {
    long n = f.degree();
    if (n % 2 != 0) fail("OddDegree", "trace polynomial needs even degree");
    long m = n / 2;
    // basis P_j with X^j + X^{-j} = P_j(X + 1/X); for a symmetric f,
    // phi = a_m + sum_{j>=1} a_{m+j} P_j.
    std::vector<IntPoly> P(m + 1);
    P[0] = IntPoly{2};
    if (m >= 1) P[1] = IntPoly{0, 1};
    for (long j = 2; j <= m; ++j) P[j] = IntPoly{0, 1} * P[j - 1] - P[j - 2];
    IntPoly phi = poly_const(f.coeff(m));
    for (long j = 1; j <= m; ++j) phi = phi + f.coeff(m + j) * P[j];
    return poly_mod(phi, pk);
}

}  // namespace detail

// Classify the quadratic behavior of the place attached to a reciprocal
// (star-symmetric) chunk at odd p, via the square class of beta^2 - 4 with
// beta = alpha + alpha^{-1}.
inline PlaceClass classify_place(const PadicFactor& factor, const Int& p) {
    if (p == 2) fail("PIsTwo", "place classification at p = 2 is not supported");
    if (!factor.star_symmetric)
        fail("NotStarSymmetric", "place classification needs a reciprocal factor");
    if (factor.degree % 2 != 0) fail("OddDegree", "reciprocal chunk must have even degree");
    long k = factor.precision;
    Int pk = pow_int(p, static_cast<unsigned long>(k));
    IntPoly phi = detail::trace_polynomial_mod(poly_mod(factor.lifted, pk), pk);

    // invariants (e, d) of the subfield Q_p(beta) from phi's own reduction
    auto modfac = factor_mod_p(phi, p);
    if (modfac.size() != 1)
        fail("UnsupportedCase", "trace polynomial reduction is not a single residual power");
    const FpPoly& gbar = modfac[0].first;
    long e_sub = 1, d_sub = phi.degree();
    if (modfac[0].second > 1) {
        IntPoly lift(std::vector<Int>(gbar.c));
        auto vals = detail::expansion_valuations(phi, lift, p, k);
        long e = modfac[0].second;
        auto hull = detail::lower_hull(vals);
        if (hull.size() == 2 && hull[0] == 0 && vals[0] < k &&
            gcd_int(Int(vals[0]), Int(e)) == 1) {
            e_sub = e;
            d_sub = gbar.degree();
        } else {
            fail("UnsupportedCase", "cannot certify invariants of the trace subfield");
        }
    }

    Int norm = mod_pos(eval(phi, 2) * eval(phi, -2), pk);
    if (norm == 0) fail("UnsupportedCase", "precision exhausted evaluating the trace norm");
    long v = valuation(norm, p);
    if (v % d_sub != 0) fail("UnsupportedCase", "norm valuation incompatible with residue degree");
    long vw = v / d_sub;
    if (vw % 2 != 0) return PlaceClass::Ramified;
    if (vw > 0)
        fail("UnsupportedCase",
             "even positive valuation of beta^2-4: unit-part analysis not implemented");
    // unit case: test whether beta^2 - 4 is a square in the residue field
    FpPoly z = fp_mod(fp_from(IntPoly{-4, 0, 1}, p), gbar);
    Int q = pow_int(p, static_cast<unsigned long>(d_sub));
    FpPoly pw = fp_pow_mod(z, (q - 1) / 2, gbar);
    if (pw.degree() == 0 && pw.coeff(0) == 1) return PlaceClass::Split;
    return PlaceClass::Unramified;
}

}  // namespace isolab

#endif  // ISOLAB_ZPFACTOR_HPP
