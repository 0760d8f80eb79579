// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Salem-polynomial recognition, complemented Salem assembly, the iota_delta
// index maps, and the nonprojective-realizability pipeline for isometries of
// the K3 lattice (signature (3, 19)).

#ifndef ISOLAB_K3SALEM_HPP
#define ISOLAB_K3SALEM_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isolab/obstruction.hpp"
#include "isolab/roots.hpp"
#include "isolab/zfactor.hpp"

namespace isolab {

// ---------------------------------------------------------------------------
// Salem certificates.

struct SalemCertificate {
    IntPoly S;
    long degree = 0;
    RationalInterval lambda_interval;  // isolates the Salem number > 1
    long unit_pairs = 0;               // conjugate pairs on the unit circle
};

// A Salem polynomial: monic, palindromic, irreducible, with one real root
// pair (lambda, 1/lambda), lambda > 1, and all other roots on the unit
// circle.  Degree 2 is allowed.
inline SalemCertificate verify_salem(const IntPoly& S) {
    if (!S.is_monic()) fail("NotSalem", "not monic");
    long d = S.degree();
    if (d < 2 || d % 2 != 0) fail("NotSalem", "degree must be even and at least 2");
    for (long i = 0; i <= d; ++i)
        if (S.coeff(i) != S.coeff(d - i)) fail("NotSalem", "not palindromic");

    IntPoly tr = trace_polynomial(S);
    Rat b = cauchy_bound(tr);
    if (b <= 2) b = 3;
    if (sturm_count(tr, {Rat(2), b}) != 1)
        fail("NotSalem", "trace polynomial lacks a unique root above 2");
    if (sturm_count(tr, {-b, Rat(-2)}) != 0)
        fail("NotSalem", "trace polynomial has a root below -2");
    if (sturm_count(tr, {Rat(-2), Rat(2)}) != d / 2 - 1)
        fail("NotSalem", "conjugates do not lie on the unit circle");
    // root-location filters first: irreducibility over Z is the costly check
    auto fac = factor_over_z(S);
    if (fac.size() != 1 || fac[0].second != 1) fail("NotSalem", "not irreducible");

    SalemCertificate cert;
    cert.S = S;
    cert.degree = d;
    cert.unit_pairs = d / 2 - 1;
    Rat bs = cauchy_bound(S);
    auto roots = isolate_real_roots(S, {Rat(1), bs});
    if (roots.size() != 1) fail("NotSalem", "no isolated real root above 1");
    cert.lambda_interval = refine_interval(S, roots[0], Rat(1, 1000));
    return cert;
}

// ---------------------------------------------------------------------------
// Complemented Salem polynomials: F = S * C with C a product of cyclotomics,
// deg F = 22 (the rank of the K3 lattice).

struct ComplementedSalem {
    SalemCertificate S;
    std::vector<std::pair<long, long>> C;  // cyclotomic index -> multiplicity
    IntPoly F;                             // S * prod Phi_m^mult, degree 22
};

inline ComplementedSalem assemble_complemented(const SalemCertificate& S,
                                               const std::vector<long>& cyclo) {
    ComplementedSalem cs;
    cs.S = S;
    cs.F = S.S;
    std::vector<long> sorted = cyclo;
    std::sort(sorted.begin(), sorted.end());
    for (long m : sorted) {
        if (!cs.C.empty() && cs.C.back().first == m)
            ++cs.C.back().second;
        else
            cs.C.emplace_back(m, 1);
        cs.F = cs.F * cyclotomic(m);
    }
    if (cs.F.degree() != 22) fail("DegreeSumNot22", "complemented product must have degree 22");
    return cs;
}

// The index map iota_delta in Idx_{3,19}(F): +2 on the delta-th unit-circle
// pair of S (ascending order of beta = 2 cos(angle)), -2 n_f on every other
// real quadratic factor, -n_{+-} at X -+ 1.
inline IndexMap iota_delta(const ComplementedSalem& cs, long delta) {
    if (delta < 0 || delta >= cs.S.unit_pairs) fail("IndexOutOfRange", "no such unit pair");
    auto pr = decompose(cs.F);
    auto rq = real_quad_factors(pr);
    size_t salem_entry = pr.I1.size();
    for (size_t i = 0; i < pr.I1.size(); ++i)
        if (pr.I1[i].first == cs.S.S) salem_entry = i;
    if (salem_entry == pr.I1.size()) fail("Internal", "Salem factor missing from profile");

    IndexMap im;
    if (pr.n_plus > 0) im.at_x_minus_1 = -pr.n_plus;
    if (pr.n_minus > 0) im.at_x_plus_1 = -pr.n_minus;
    im.at.assign(rq.size(), 0);
    long seen = 0;
    for (size_t k = 0; k < rq.size(); ++k) {
        if (rq[k].parent_index == salem_entry && seen++ == delta)
            im.at[k] = 2;
        else
            im.at[k] = -2 * rq[k].multiplicity;
    }
    if (!validate_index_map(pr, rq, 3, 19, im))
        fail("NotInIdx", "iota_delta is not an index map at signature (3,19)");
    return im;
}

// ---------------------------------------------------------------------------
// Nonprojective realizability.

struct RealizabilityResult {
    Status status = Status::Indeterminate;
    std::optional<IntPoly> F;       // accepted complemented polynomial
    std::optional<long> delta;      // accepted unit-pair choice, if any
    std::optional<IndexMap> iota;
    long candidates_tried = 0;
    std::vector<std::string> reasons;
};

namespace detail {

// Cyclotomic complement multisets of a given total degree, ascending indices,
// streamed until the callback declines.
template <typename Fn>
inline void enumerate_complements(long degree_left, long min_m, std::vector<long>& cur,
                                  bool& stop, Fn&& emit) {
    if (stop) return;
    if (degree_left == 0) {
        if (!emit(cur)) stop = true;
        return;
    }
    for (long m = min_m; !stop && m <= 66; ++m) {
        long d = euler_phi(m);
        if (d > degree_left) continue;
        cur.push_back(m);
        enumerate_complements(degree_left - d, m, cur, stop, emit);
        cur.pop_back();
    }
}

}  // namespace detail

// Whether the Salem number of S is realized by a semisimple isometry of the
// K3 lattice without any projective structure: search complemented Salem
// polynomials F = S * C of degree 22 at signature (3, 19).  Degree 20 fixes
// C = (X-1)(X+1), which the theory guarantees; degree 22 takes C = 1, where
// realizability is equivalent to the square condition; lower degrees search
// complements within a candidate budget and may remain Indeterminate.
inline RealizabilityResult nonprojective_realizable(const SalemCertificate& S,
                                                    long max_candidates = 2000) {
    if (S.degree < 4 || S.degree > 22)
        fail("DegreeOutOfRange", "pipeline covers Salem degrees 4 to 22");
    RealizabilityResult res;

    auto try_candidate = [&](const std::vector<long>& cyclo) -> bool {
        ComplementedSalem cs = assemble_complemented(S, cyclo);
        ++res.candidates_tried;
        auto sq = check_square_condition(cs.F);
        if (!sq.holds) return true;  // this complement cannot work; keep going
        for (long delta = 0; delta < S.unit_pairs; ++delta) {
            IndexMap im = iota_delta(cs, delta);
            Verdict v = decide(cs.F, 3, 19, im);
            if (v.status == Status::Realizable) {
                res.status = Status::Realizable;
                res.F = cs.F;
                res.delta = delta;
                res.iota = im;
                res.reasons = v.reasons;
                return false;
            }
        }
        return true;
    };

    if (S.degree == 22) {
        auto sq = check_square_condition(S.S);
        if (!sq.holds) {
            res.status = Status::NotRealizable;
            res.reasons.push_back("square condition fails for the degree-22 polynomial: " +
                                  sq.reason);
            return res;
        }
        try_candidate({});
        if (res.status != Status::Realizable)
            res.reasons.push_back("square condition holds but no index map was accepted");
        return res;
    }
    if (S.degree == 20) {
        try_candidate({1, 2});
        if (res.status != Status::Realizable)
            res.reasons.push_back("the (X-1)(X+1)S route was not accepted");
        return res;
    }

    bool stop = false;
    std::vector<long> cur;
    detail::enumerate_complements(22 - S.degree, 1, cur, stop, [&](const std::vector<long>& c) {
        if (res.candidates_tried >= max_candidates) return false;
        return try_candidate(c);
    });
    if (res.status != Status::Realizable)
        res.reasons.push_back("no complement accepted within the candidate budget");
    return res;
}

// ---------------------------------------------------------------------------
// Salem search via trace polynomials (test and demo utility).

// Searches for Salem polynomials of the given even degree by a seeded
// random walk over candidate trace polynomials expressed in the Chebyshev-like
// trace basis P_0 = 2, P_1 = Y, P_j = Y P_{j-1} - P_{j-2}: coefficients a_j in
// [-bound, bound] correspond exactly to the upper-half coefficients of the
// palindromic candidate S, so reciprocity holds by construction and the
// search dimension is deg/2.  Returns up to `want` distinct certificates.
inline std::vector<SalemCertificate> salem_search(long degree, long bound, size_t want,
                                                  unsigned seed = 12345) {
    if (degree < 2 || degree % 2 != 0) fail("BadDegree", "Salem degree must be even, >= 2");
    long half = degree / 2;
    std::vector<SalemCertificate> found;
    std::set<std::vector<Int>> seen;

    std::vector<IntPoly> p{IntPoly{2}, IntPoly{0, 1}};
    for (long j = 2; j <= half; ++j) p.push_back(IntPoly{0, 1} * p[j - 1] - p[j - 2]);

    // star[j] = coefficient of P_j in the trace polynomial = coefficient of
    // X^{half+j} in S; star[half] = 1 keeps S monic.
    auto consider = [&](const std::vector<long>& star) {
        if (found.size() >= want) return;
        IntPoly tr = p[static_cast<size_t>(half)];
        std::vector<Int> sc(static_cast<size_t>(degree) + 1, 0);
        sc[static_cast<size_t>(degree)] = 1;
        sc[0] = 1;
        for (long j = 0; j < half; ++j) {
            long a = star[static_cast<size_t>(j)];
            tr = tr + Int(a) * p[static_cast<size_t>(j)];
            sc[static_cast<size_t>(half + j)] += a;
            if (j > 0) sc[static_cast<size_t>(half - j)] += a;
        }
        // sign prefilter: an odd number of trace roots above 2 needs
        // tr(2) < 0, and no root at or below -2 needs sign agreement at -2
        if (eval(tr, 2) >= 0) return;
        Int at_m2 = eval(tr, -2);
        if (half % 2 == 0 ? at_m2 <= 0 : at_m2 >= 0) return;
        IntPoly S(std::move(sc));
        if (!S.is_monic() || seen.count(S.c)) return;
        seen.insert(S.c);
        try {
            found.push_back(verify_salem(S));
        } catch (const error&) {
        }
    };

    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> pick(-bound, bound);
    std::vector<long> star(static_cast<size_t>(half), 0);
    for (long iter = 0; iter < 500000 && found.size() < want; ++iter) {
        for (long i = 0; i < half; ++i) star[static_cast<size_t>(i)] = pick(rng);
        consider(star);
    }
    return found;
}

}  // namespace isolab

#endif  // ISOLAB_K3SALEM_HPP
