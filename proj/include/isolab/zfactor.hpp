// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Factorization over Z: squarefree decomposition, modular factorization with
// Hensel lifting to a Mignotte-style bound, and bounded Zassenhaus subset
// recombination. The multifactor Hensel driver is shared with the p-adic
// module (it only needs pairwise-coprime reductions mod p).

#ifndef ISOLAB_ZFACTOR_HPP
#define ISOLAB_ZFACTOR_HPP

#include "isolab/finitefield.hpp"

#include <numeric>
#include <set>

namespace isolab {

inline Int smod(const Int& a, const Int& m) {
    Int r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline IntPoly poly_mod(const IntPoly& f, const Int& m) {
    IntPoly r = f;
    for (auto& x : r.c) x = mod_pos(x, m);
    r.normalize();
    return r;
}

inline IntPoly poly_smod(const IntPoly& f, const Int& m) {
    IntPoly r = f;
    for (auto& x : r.c) x = smod(x, m);
    r.normalize();
    return r;
}

// ---------------------------------------------------------------------------
// Hensel lifting.

// One linear step: given monic f with f = g*h (mod p^j) and monic g, h coprime
// mod p with Bezout s*g + t*h = 1 (mod p), produce (g', h') mod p^{j+1}.
inline void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, const FpPoly& gbar,
                        const FpPoly& hbar, const FpPoly& s, const FpPoly& t, const Int& p,
                        const Int& pj) {
    IntPoly diff = f - g * h;
    std::vector<Int> ec(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i) ec[i] = diff.c[i] / pj;  // exact
    FpPoly e(p, std::move(ec));
    if (e.is_zero()) return;
    // u*h + v*g = e with deg u < deg g, deg v < deg h.
    FpPoly u = fp_mod(fp_mul(t, e), gbar);
    FpPoly v = fp_div(fp_sub(e, fp_mul(u, hbar)), gbar);
    for (long i = 0; i <= u.degree(); ++i) g.c[i] += pj * u.c[i];
    for (long i = 0; i <= v.degree(); ++i) h.c[i] += pj * v.c[i];
}

// Lift a pairwise-coprime monic factorization of monic f from mod p to mod
// p^k. Parts need not be squarefree, only coprime mod p.
inline std::vector<IntPoly> multifactor_hensel(const IntPoly& f, const std::vector<FpPoly>& parts,
                                               const Int& p, long k) {
    if (parts.size() == 1) {
        return {poly_mod(f, pow_int(p, static_cast<unsigned long>(k)))};
    }
    size_t half = parts.size() / 2;
    FpPoly gbar = fp_const(p, 1), hbar = fp_const(p, 1);
    for (size_t i = 0; i < half; ++i) gbar = fp_mul(gbar, parts[i]);
    for (size_t i = half; i < parts.size(); ++i) hbar = fp_mul(hbar, parts[i]);
    auto [one, s, t] = fp_ext_gcd(gbar, hbar);
    if (one.degree() != 0) fail("NotCoprime", "Hensel parts are not coprime mod p");
    IntPoly g(std::vector<Int>(gbar.c));
    IntPoly h(std::vector<Int>(hbar.c));
    Int pj = p;
    for (long j = 1; j < k; ++j) {
        hensel_step(f, g, h, gbar, hbar, s, t, p, pj);
        pj *= p;
    }
    std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<FpPoly> right(parts.begin() + half, parts.end());
    std::vector<IntPoly> out = multifactor_hensel(poly_mod(g, pj), left, p, k);
    std::vector<IntPoly> more = multifactor_hensel(poly_mod(h, pj), right, p, k);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus factorization of a primitive squarefree polynomial.

namespace detail {

// Achievable factor-degree set (subset sums of modular factor degrees).
inline std::vector<bool> degree_pattern(const std::vector<long>& degs, long n) {
    std::vector<bool> able(n + 1, false);
    able[0] = true;
    for (long d : degs) {
        for (long i = n; i >= d; --i)
            if (able[i - d]) able[i] = true;
    }
    return able;
}

struct ModularChoice {
    Int p;
    std::vector<FpPoly> factors;
};

// Coefficient bound for monic factors of a primitive G (Mignotte-flavored:
// any factor's coefficients are bounded by 2^n * l1-norm * |lc|).
inline Int factor_coeff_bound(const IntPoly& G) {
    Int l1 = 0;
    for (const auto& x : G.c) l1 += abs_int(x);
    return pow_int(Int(2), static_cast<unsigned long>(G.degree() + 1)) * l1;
}

inline std::vector<IntPoly> zassenhaus(const IntPoly& G0) {
    IntPoly G = primitive_part(G0);
    long n = G.degree();
    if (n <= 0) return {};
    if (n == 1) return {G};

    // Collect usable primes: p does not divide lc, reduction squarefree.
    std::vector<ModularChoice> choices;
    std::vector<bool> pattern(n + 1, true);
    for (long pl : primes_up_to(300)) {
        Int p = pl;
        if (G.lc() % p == 0) continue;
        FpPoly gm = fp_monic(fp_from(G, p));
        if (gm.degree() != n) continue;
        if (fp_gcd(gm, fp_derivative(gm)).degree() != 0) continue;
        auto fac = factor_mod_p(G, p);
        std::vector<FpPoly> irr;
        std::vector<long> degs;
        for (auto& [h, m] : fac) {
            irr.push_back(h);
            degs.push_back(h.degree());
        }
        auto able = degree_pattern(degs, n);
        for (long i = 0; i <= n; ++i)
            if (!able[i]) pattern[i] = false;
        choices.push_back({p, std::move(irr)});
        if (choices.size() >= 5) break;
    }
    if (choices.empty()) fail("NoUsablePrime", "no squarefree reduction found (unexpected)");

    bool maybe_reducible = false;
    for (long i = 1; i < n; ++i)
        if (pattern[i]) maybe_reducible = true;
    if (!maybe_reducible) return {G};  // irreducibility certificate

    // Pick the prime with the fewest modular factors.
    auto& best =
        *std::min_element(choices.begin(), choices.end(), [](const auto& a, const auto& b) {
            return a.factors.size() < b.factors.size();
        });
    const Int p = best.p;

    // Lift to p^k beyond twice the coefficient bound (times lc for non-monic).
    Int bound = 2 * factor_coeff_bound(G) * abs_int(G.lc()) + 1;
    long k = 1;
    Int pk = p;
    while (pk < bound) {
        pk *= p;
        ++k;
    }
    // Work with an lc-adjusted monic image so Hensel applies.
    Int lc = G.lc();
    std::vector<IntPoly> lifted;
    if (lc == 1) {
        lifted = multifactor_hensel(poly_mod(G, pk), best.factors, p, k);
    } else {
        // Classic trick: lift factors of monic  F(X) := lc^(n-1) * G(X/lc).
        IntPoly F;
        F.c.assign(n + 1, 0);
        for (long i = 0; i <= n; ++i) {
            if (i == n)
                F.c[i] = 1;
            else
                F.c[i] = G.c[i] * pow_int(lc, static_cast<unsigned long>(n - 1 - i));
        }
        F.normalize();
        std::vector<FpPoly> parts;
        for (auto& h : best.factors) {
            // h(X) of G mod p maps to the monic lc^d * h(X/lc) of F mod p
            long d = h.degree();
            std::vector<Int> hc(d + 1);
            for (long i = 0; i <= d; ++i)
                hc[i] = mod_pos(h.coeff(i) * pow_int(mod_pos(lc, p), static_cast<unsigned long>(d - i)), p);
            parts.push_back(fp_monic(FpPoly(p, std::move(hc))));
        }
        lifted = multifactor_hensel(poly_mod(F, pk), parts, p, k);
        G = F;  // recombine in the monicized world; undo per accepted factor
    }

    // Subset recombination (ascending cardinality) in the (possibly
    // monicized) world; accepted factors are primitive parts of symmetric
    // representatives.
    std::vector<IntPoly> result;
    std::vector<IntPoly> pool = lifted;
    IntPoly rem = G;  // monic if lc-adjusted

    auto undo_monicize = [&](const IntPoly& fac) -> IntPoly {
        if (lc == 1) return fac;
        // factor of F corresponds to factor of G via X -> lc*X then primitive part
        long d = fac.degree();
        IntPoly out;
        out.c.assign(d + 1, 0);
        for (long i = 0; i <= d; ++i)
            out.c[i] = fac.coeff(i) * pow_int(lc, static_cast<unsigned long>(i));
        out.normalize();
        return primitive_part(out);
    };

    bool restart = true;
    while (restart) {
        restart = false;
        long nrem = rem.degree();
        size_t m = pool.size();
        if (m == 0) break;
        if (m == 1) {
            result.push_back(primitive_part(rem));
            pool.clear();
            break;
        }
        for (size_t csize = 1; csize <= m / 2 && !restart; ++csize) {
            std::vector<size_t> idx(csize);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                long dsum = 0;
                for (size_t i : idx) dsum += pool[i].degree();
                bool degree_ok = dsum >= 1 && dsum <= nrem && pattern[dsum];
                if (degree_ok) {
                    // cheap constant-term test, then full product
                    Int ct = rem.lc();
                    for (size_t i : idx) ct = mod_pos(ct * pool[i].coeff(0), pk);
                    ct = smod(ct, pk);
                    Int ct_target = rem.lc() * rem.coeff(0);
                    bool ct_ok = (ct == 0) ? (rem.coeff(0) == 0) : (ct_target % ct == 0);
                    if (ct_ok) {
                        IntPoly prod = poly_const(1);
                        for (size_t i : idx) prod = poly_mod(prod * pool[i], pk);
                        IntPoly cand = primitive_part(poly_smod(prod, pk));
                        if (divides(cand, rem)) {
                            result.push_back(cand);
                            rem = divide_exact(rem, cand);
                            std::vector<IntPoly> np;
                            for (size_t i = 0; i < m; ++i) {
                                if (std::find(idx.begin(), idx.end(), i) == idx.end())
                                    np.push_back(pool[i]);
                            }
                            pool = np;
                            restart = true;
                            break;
                        }
                    }
                }
                // next combination
                long pos = static_cast<long>(csize) - 1;
                while (pos >= 0 && idx[pos] == m - csize + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t q = pos + 1; q < csize; ++q) idx[q] = idx[q - 1] + 1;
            }
        }
        if (!restart) {
            // remaining product is irreducible
            result.push_back(primitive_part(rem));
            pool.clear();
        }
    }

    // Undo the monicization substitution if applied.
    std::vector<IntPoly> out;
    for (auto& fac : result) out.push_back(undo_monicize(fac));
    return out;
}

}  // namespace detail

// Irreducible factorization over Z. Factors are primitive with positive
// leading coefficient; a constant entry carries content and sign so the
// product with multiplicity reconstructs f exactly.
inline std::vector<std::pair<IntPoly, long>> factor_over_z(const IntPoly& f) {
    if (f.is_zero()) fail("ZeroInput", "factor_over_z of zero");
    std::vector<std::pair<IntPoly, long>> out;
    Int ct = content(f);
    if (f.lc() < 0) ct = -ct;
    if (f.degree() == 0) {
        out.emplace_back(poly_const(f.c[0]), 1);
        return out;
    }
    auto sqf = squarefree_decomposition(f);
    for (auto& [piece, mult] : sqf) {
        for (auto& irr : detail::zassenhaus(piece)) out.emplace_back(irr, mult);
    }
    if (ct != 1) out.emplace_back(poly_const(ct), 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

inline bool is_irreducible_z(const IntPoly& f) {
    auto fac = factor_over_z(f);
    long count = 0;
    for (auto& [g, m] : fac) {
        if (g.degree() > 0) count += m;
    }
    return count == 1;
}

}  // namespace isolab

#endif  // ISOLAB_ZFACTOR_HPP
