// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Gram lattices, the even unimodular catalog, and the explicit-isometry
// witness checker: characteristic polynomial, semisimplicity, exact index
// map extraction, and the 2-adic spinor-norm parity test.

#ifndef ISOLAB_LATTICE_HPP
#define ISOLAB_LATTICE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isolab/matrix.hpp"
#include "isolab/padic.hpp"
#include "isolab/roots.hpp"
#include "isolab/structure.hpp"

namespace isolab {

struct GramLattice {
    IntMat gram;
    long r = 0, s = 0;  // signature, computed exactly
};

inline GramLattice make_lattice(IntMat gram) {
    size_t n = gram.size();
    for (auto& row : gram)
        if (row.size() != n) fail("NotSquare", "Gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) fail("NotSymmetric", "Gram matrix must be symmetric");
    Signature sig = mat_signature(rat_mat(gram));
    if (sig.zero != 0) fail("DegenerateForm", "Gram matrix is singular");
    return {std::move(gram), sig.plus, sig.minus};
}

inline IntMat direct_sum(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), m = b.size();
    IntMat r(n + m, std::vector<Int>(n + m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = a[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) r[n + i][n + j] = b[i][j];
    return r;
}

// Standard catalog: the hyperbolic plane U, the rank-2 even lattice V2 of
// discriminant -3, the E8 lattice, its negation, and the K3 lattice
// U + U + U + E8(-1) + E8(-1) of signature (3, 19).
inline GramLattice catalog(const std::string& name) {
    IntMat U{{0, 1}, {1, 0}};
    if (name == "U") return make_lattice(U);
    if (name == "V2") return make_lattice({{2, 1}, {1, 2}});
    IntMat e8(8, std::vector<Int>(8, 0));
    // Dynkin-diagram basis: a path 0-1-2-3-4-5-6 with node 7 attached to 4
    for (int i = 0; i < 8; ++i) e8[i][i] = 2;
    for (int i = 0; i + 1 < 7; ++i) e8[i][i + 1] = e8[i + 1][i] = -1;
    e8[4][7] = e8[7][4] = -1;
    if (name == "E8") return make_lattice(e8);
    IntMat e8m = e8;
    for (auto& row : e8m)
        for (auto& x : row) x = -x;
    if (name == "E8minus") return make_lattice(e8m);
    if (name == "K3") return make_lattice(direct_sum(direct_sum(U, direct_sum(U, U)),
                                                     direct_sum(e8m, e8m)));
    fail("UnknownName", "catalog knows U, V2, E8, E8minus, K3");
}

struct IsometryWitness {
    GramLattice lattice;
    IntMat t;
};

struct WitnessReport {
    IntPoly characteristic;
    bool is_semisimple = false;
    Int det_t;
    IndexMap index_map;
    bool spinor_parity_ok = false;
};

namespace detail {

// b restricted to the column span of V: V^T G V.
inline RatMat restricted_form(const RatMat& g, const RatMat& v) {
    return mat_mul(mat_transpose(v), mat_mul(g, v));
}

// Index values of the real quadratic factors of a type-1 factor f of
// multiplicity n_f, in ascending order of the root beta of the associated
// trace polynomial.  W spans the f-primary component; tau is t + t^{-1} on
// the ambient space.
inline std::vector<long> type1_indices(const RatMat& g, const RatMat& w, const RatMat& tau,
                                       const IntPoly& f) {
    // tau restricted to the span of W in W-coordinates
    RatMat m = mat_solve(w, mat_mul(tau, w));
    RatMat b0 = restricted_form(g, w);
    auto roots = isolate_real_roots(trace_polynomial(f), {Rat(-2), Rat(2)});
    size_t u = roots.size();
    // rationals strictly separating consecutive roots
    std::vector<Rat> cuts;
    for (size_t i = 0; i + 1 < u; ++i) cuts.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    // Signatures of x -> b(p_k(tau) x, x) for p_k(Y) = prod_{i<k} (Y - c_i).
    // On the beta_j eigenspace of tau the form is p_k(beta_j) * b, so each
    // signature is a +-1 combination of the unknown per-root index values.
    size_t dim = mat_cols(w);
    RatMat pk = rat_identity(dim);
    RatMat sys(u, std::vector<Rat>(u, Rat(0)));
    RatMat rhs(u, std::vector<Rat>(1, Rat(0)));
    for (size_t k = 0; k < u; ++k) {
        if (k > 0) {
            RatMat shifted = m;
            for (size_t i = 0; i < dim; ++i) shifted[i][i] -= cuts[k - 1];
            pk = mat_mul(pk, shifted);
        }
        Signature sig = mat_signature(mat_mul(mat_transpose(pk), b0));
        if (sig.zero != 0) fail("DegenerateForm", "degenerate restriction in index extraction");
        rhs[k][0] = Rat(sig.plus - sig.minus);
        for (size_t j = 0; j < u; ++j) {
            long neg = std::max<long>(0, static_cast<long>(k) - static_cast<long>(j));
            sys[k][j] = (neg % 2 == 0) ? Rat(1) : Rat(-1);
        }
    }
    RatMat sol = mat_solve(sys, rhs);
    std::vector<long> out(u);
    for (size_t j = 0; j < u; ++j) {
        if (denominator(sol[j][0]) != 1) fail("Internal", "non-integral index value");
        out[j] = static_cast<long>(numerator(sol[j][0]));
    }
    return out;
}

}  // namespace detail

// Checks t^T G t = G, then reports the characteristic polynomial,
// semisimplicity, the index map extracted from exact eigenspace signatures,
// and whether the 2-adic spinor-norm valuation matches det t as even
// unimodular theory requires.
inline WitnessReport verify_witness(const IsometryWitness& w) {
    const IntMat& g = w.lattice.gram;
    const IntMat& t = w.t;
    size_t n = g.size();
    if (t.size() != n) fail("NotAnIsometry", "dimension mismatch");
    for (auto& row : t)
        if (row.size() != n) fail("NotAnIsometry", "matrix not square");
    if (mat_mul(mat_mul(mat_transpose(t), g), t) != g)
        fail("NotAnIsometry", "t does not preserve the Gram matrix");

    WitnessReport rep;
    rep.characteristic = char_poly(t);
    rep.det_t = mat_det(t);

    // semisimple iff the radical of the characteristic polynomial kills t
    IntPoly radical = squarefree_part(rep.characteristic);
    rep.is_semisimple = mat_is_zero(mat_poly_eval(radical, t));

    auto pr = decompose(rep.characteristic);
    auto rq = real_quad_factors(pr);
    RatMat gr = rat_mat(g), tr = rat_mat(t);
    RatMat tinv = mat_solve(tr, rat_identity(n));
    RatMat tau = mat_add(tr, tinv);

    auto eigenspace_index = [&](const IntPoly& lin, long mult) {
        RatMat v = mat_kernel(rat_mat(mat_poly_eval(poly_pow(lin, mult), t)));
        Signature sig = mat_signature(detail::restricted_form(gr, v));
        if (sig.zero != 0) fail("DegenerateForm", "degenerate type-0 eigenspace form");
        return sig.plus - sig.minus;
    };
    if (pr.n_plus > 0) rep.index_map.at_x_minus_1 = eigenspace_index(IntPoly{-1, 1}, pr.n_plus);
    if (pr.n_minus > 0) rep.index_map.at_x_plus_1 = eigenspace_index(IntPoly{1, 1}, pr.n_minus);

    rep.index_map.at.assign(rq.size(), 0);
    for (size_t i = 0; i < pr.I1.size(); ++i) {
        auto& [f, mult] = pr.I1[i];
        RatMat wspan = mat_kernel(rat_mat(mat_poly_eval(poly_pow(f, mult), t)));
        auto vals = detail::type1_indices(gr, wspan, tau, f);
        // rq holds this factor's roots in the same ascending beta order
        size_t pos = 0;
        for (size_t k = 0; k < rq.size(); ++k) {
            if (rq[k].parent_index != i) continue;
            rep.index_map.at[k] = vals[pos++];
        }
        if (pos != vals.size()) fail("Internal", "real quadratic factor mismatch");
    }

    // Spinor-norm parity: v_2(sn(t)) = v_2(det b on the -1 eigenspace)
    // + v_2(f(-1)) where f is the characteristic polynomial without its
    // (X -+ 1)-powers; even unimodular theory forces this to be odd exactly
    // when det t = -1.
    RatMat vminus = mat_kernel(mat_add(tr, rat_identity(n)));
    Rat detb = mat_det(detail::restricted_form(gr, vminus));
    if (detb == 0) {
        rep.spinor_parity_ok = false;
    } else {
        Int f_at_m1 = eval(f12_part(pr), -1);
        long parity = (rat_valuation(detb, 2) + valuation(f_at_m1, 2)) % 2;
        long expected = (rep.det_t == -1) ? 1 : 0;
        rep.spinor_parity_ok = ((parity % 2 + 2) % 2) == expected;
    }
    return rep;
}

}  // namespace isolab

#endif  // ISOLAB_LATTICE_HPP
