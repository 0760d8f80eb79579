// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact real-root machinery: Sturm chains over the rationals, Cauchy bounds,
// root isolation by bisection, unit-circle root counting through trace
// polynomials, and the invariant m(F) (roots outside the closed unit disk).

#ifndef ISOLAB_ROOTS_HPP
#define ISOLAB_ROOTS_HPP

#include "isolab/zfactor.hpp"

namespace isolab {

struct RationalInterval {
    Rat lo, hi;
    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// 1 + max |c_i / lc|: every real root lies strictly inside (-B, B).
inline Rat cauchy_bound(const IntPoly& f) {
    if (f.degree() < 0) fail("ZeroInput", "bound of zero polynomial");
    Rat mx = 0;
    for (long i = 0; i < f.degree(); ++i) {
        Rat v = Rat(abs_int(f.c[i]), abs_int(f.lc()));
        if (v > mx) mx = v;
    }
    return mx + 1;
}

namespace detail {

// Sturm chain of the squarefree part, kept integral via primitive
// pseudo-remainders with forced sign flips.
inline std::vector<IntPoly> sturm_chain(const IntPoly& f0) {
    IntPoly f = squarefree_part(f0);
    std::vector<IntPoly> chain;
    if (f.degree() < 0) return chain;
    // p_{k+1} = -prem(p_{k-1}, p_k) up to a positive constant; prem itself
    // scales by lc^(delta+1), which is a sign flip when lc < 0 and the
    // exponent is odd, so compensate before negating.
    chain.push_back(f);
    chain.push_back(derivative(f));
    while (!chain.back().is_zero()) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        long delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        // prem(a,b) = lc(b)^(delta+1) * (a mod b). If lc(b)^(delta+1) < 0 the
        // sign is flipped; compensate, then negate for the Sturm convention.
        Int scale_sign = (b.lc() < 0 && (delta + 1) % 2 == 1) ? -1 : 1;
        r = scale_sign * r;
        r = -r;
        // strip positive content to control growth
        Int ct = content(r);
        if (ct > 1)
            for (auto& x : r.c) x /= ct;
        chain.push_back(r);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

inline int sign_of(const Rat& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

inline long sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(eval_rat(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

// Exact count of distinct real roots of f in the open interval (lo, hi).
inline long sturm_count(const IntPoly& f, const RationalInterval& iv) {
    if (iv.lo >= iv.hi) fail("BadInterval", "need lo < hi");
    IntPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return 0;
    if (eval_rat(sf, iv.lo) == 0 || eval_rat(sf, iv.hi) == 0)
        fail("EndpointIsRoot", "Sturm endpoints must not be roots");
    auto chain = detail::sturm_chain(sf);
    return detail::sign_variations(chain, iv.lo) - detail::sign_variations(chain, iv.hi);
}

// Disjoint isolating intervals for all real roots of squarefree f in
// (lo, hi), in ascending order.
inline std::vector<RationalInterval> isolate_real_roots(const IntPoly& f,
                                                        const RationalInterval& iv) {
    IntPoly sf = squarefree_part(f);
    std::vector<RationalInterval> out;
    if (sf.degree() < 1) return out;
    auto chain = detail::sturm_chain(sf);
    struct Item {
        Rat lo, hi;
        long count;
    };
    auto count_in = [&](const Rat& lo, const Rat& hi) {
        return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
    };
    if (eval_rat(sf, iv.lo) == 0 || eval_rat(sf, iv.hi) == 0)
        fail("EndpointIsRoot", "isolation endpoints must not be roots");
    std::vector<Item> work{{iv.lo, iv.hi, count_in(iv.lo, iv.hi)}};
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.count == 0) continue;
        if (it.count == 1) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        Rat mid = (it.lo + it.hi) / 2;
        while (eval_rat(sf, mid) == 0) mid = (it.lo + mid) / 2;  // nudge off a root
        long left = count_in(it.lo, mid);
        work.push_back({it.lo, mid, left});
        work.push_back({mid, it.hi, it.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return out;
}

// Shrink an isolating interval below the given width (bisection).
inline RationalInterval refine_interval(const IntPoly& f, RationalInterval iv, const Rat& width) {
    IntPoly sf = squarefree_part(f);
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        Rat v = eval_rat(sf, mid);
        if (v == 0) {
            // exact rational root: shrink symmetrically around it
            Rat w = (iv.hi - iv.lo) / 4;
            iv = {mid - w, mid + w};
            if (iv.hi - iv.lo <= width) break;
            continue;
        }
        RationalInterval left{iv.lo, mid};
        if (sturm_count(sf, left) == 1)
            iv = left;
        else
            iv = {mid, iv.hi};
    }
    return iv;
}

// ---------------------------------------------------------------------------
// Unit-circle counting and m(F).

// Number of roots of F on |z| = 1, with multiplicity, computed without full
// factorization: strip X -+ 1, take the squarefree decomposition, and count
// trace-polynomial roots in (-2, 2) per squarefree piece.
inline long count_unit_circle_roots(const IntPoly& F) {
    if (classify_symmetry(F) == Symmetry::NotStarSymmetric)
        fail("NotStarSymmetric", "unit-circle count needs a *-symmetric polynomial");
    IntPoly G = F;
    long total = 0;
    while (eval(G, 1) == 0) {
        G = divmod_monic(G, IntPoly{-1, 1}).first;
        ++total;
    }
    while (eval(G, -1) == 0) {
        G = divmod_monic(G, IntPoly{1, 1}).first;
        ++total;
    }
    if (G.degree() == 0) return total;
    for (auto& [piece, mult] : squarefree_decomposition(G)) {
        // pieces of a +1-symmetric G with G(+-1) != 0 are +1-symmetric
        IntPoly tr = trace_polynomial(piece);
        long u = sturm_count(tr, {Rat(-2), Rat(2)});
        total += 2 * u * mult;
    }
    return total;
}

// m(F): number of roots with |lambda| > 1, with multiplicity — computed from
// the irreducible factorization (per-factor trace-polynomial formula).
inline long m_of(const IntPoly& F) {
    if (classify_symmetry(F) == Symmetry::NotStarSymmetric)
        fail("NotStarSymmetric", "m(F) needs a *-symmetric polynomial");
    long m2 = 0;       // twice m, to avoid fractional bookkeeping
    long type2deg = 0; // total degree of the type-2 part
    for (auto& [f, mult] : factor_over_z(F)) {
        if (f.degree() == 0) continue;
        if (f == IntPoly{-1, 1} || f == IntPoly{1, 1}) continue;
        if (is_star_symmetric(f)) {
            IntPoly tr = trace_polynomial(f);
            long u = sturm_count(tr, {Rat(-2), Rat(2)});
            m2 += mult * (f.degree() - 2 * u);
        } else {
            type2deg += mult * f.degree();
        }
    }
    m2 += type2deg;
    return m2 / 2;
}

}  // namespace isolab

#endif  // ISOLAB_ROOTS_HPP
