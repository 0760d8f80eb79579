// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Local existence tests for even unimodular lattices with a prescribed
// semisimple isometry, the obstruction graph on irreducible *-symmetric
// factors, the obstruction group, and the top-level decision engine.

#ifndef ISOLAB_OBSTRUCTION_HPP
#define ISOLAB_OBSTRUCTION_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isolab/padic.hpp"
#include "isolab/structure.hpp"
#include "isolab/zpfactor.hpp"

namespace isolab {

// ---------------------------------------------------------------------------
// Local existence over Z_p.

// Whether an even unimodular Z_p-lattice admits a semisimple isometry with
// characteristic polynomial F.  At odd p the test is that v_p(F(1)) and
// v_p(F(-1)) are both even (valuation of 0 counts as even); at p = 2 the
// additional discriminant test (-1)^n F(1)F(-1) = 1 in Q_2^x / squares is
// required whenever F(1)F(-1) != 0.
struct LocalReport {
    Int p;
    bool condition_a = false;               // valuation parities
    std::optional<bool> condition_b;        // square-class test, p = 2 only
    bool verdict = false;
};

inline LocalReport local_existence(const IntPoly& F, const Int& p) {
    if (F.degree() % 2 != 0) fail("OddDegree", "local existence needs even degree");
    Place v = place_at(p);  // validates primality
    Int f1 = eval(F, 1), fm1 = eval(F, -1);
    auto even_val = [&](const Int& a) { return a == 0 || valuation(a, p) % 2 == 0; };
    LocalReport rep;
    rep.p = p;
    rep.condition_a = even_val(f1) && even_val(fm1);
    if (p == 2) {
        if (f1 == 0 || fm1 == 0) {
            rep.condition_b = true;
        } else {
            Rat d = Rat(f1) * Rat(fm1);
            if ((F.degree() / 2) % 2 != 0) d = -d;
            rep.condition_b = square_class(d, v).class_id == square_class(Rat(1), v).class_id;
        }
    }
    rep.verdict = rep.condition_a && (!rep.condition_b || *rep.condition_b);
    return rep;
}

// ---------------------------------------------------------------------------
// Obstruction graph.

enum class VertexKind { XMinus1, XPlus1, TypeOne };

struct GraphVertex {
    VertexKind kind;
    IntPoly poly;       // X - 1, X + 1, or the type-1 irreducible factor
    long multiplicity;

    bool operator==(const GraphVertex& o) const {
        return kind == o.kind && poly == o.poly;
    }
};

// Vertex set I = I_0 cup I_1: X - 1 first when present, then X + 1, then the
// type-1 factors in profile order.
inline std::vector<GraphVertex> graph_vertices(const SymmetricProfile& pr) {
    std::vector<GraphVertex> vs;
    if (pr.n_plus > 0) vs.push_back({VertexKind::XMinus1, IntPoly{-1, 1}, pr.n_plus});
    if (pr.n_minus > 0) vs.push_back({VertexKind::XPlus1, IntPoly{1, 1}, pr.n_minus});
    for (auto& [f, m] : pr.I1) vs.push_back({VertexKind::TypeOne, f, m});
    return vs;
}

// Finite superset of the primes that can join f and g: a common irreducible
// factor mod p forces p | Res(f, g), and divisibility by X -+ 1 mod p forces
// p | f(+-1).
inline std::vector<Int> candidate_primes(const GraphVertex& f, const GraphVertex& g) {
    if (f == g) fail("SameVertex", "candidate primes need two distinct vertices");
    Int bound;
    if (f.kind == VertexKind::TypeOne && g.kind == VertexKind::TypeOne) {
        bound = resultant(f.poly, g.poly);
    } else {
        const GraphVertex& other = (f.kind == VertexKind::TypeOne) ? f : g;
        const GraphVertex& type0 = (f.kind == VertexKind::TypeOne) ? g : f;
        Int root = (type0.kind == VertexKind::XMinus1) ? Int(1) : Int(-1);
        bound = eval(other.poly, root);
    }
    return prime_divisors(abs_int(bound));
}

namespace detail {

// The requirement on a type-0 vertex X -+ 1 for an edge at p: multiplicity at
// least 3, or exactly 2 with D_{+-} distinct from -1 in Q_p^x / squares.
// The multiplicity-2 case depends on iota through D_{+-}.
inline bool type0_side_condition(const SymmetricProfile& pr,
                                 const std::optional<IndexMap>& iota, VertexKind side,
                                 const Int& p) {
    long n = (side == VertexKind::XMinus1) ? pr.n_plus : pr.n_minus;
    if (n >= 3) return true;
    if (n != 2) return false;
    if (!iota) fail("IndexMapRequired", "D_{+-} at a multiplicity-2 vertex needs iota");
    std::optional<long> iv =
        (side == VertexKind::XMinus1) ? iota->at_x_minus_1 : iota->at_x_plus_1;
    if (!iv) fail("IndexMapRequired", "iota lacks a value at the type-0 vertex");
    Int at = (side == VertexKind::XMinus1) ? Int(1) : Int(-1);
    Rat d = Rat(abs_int(eval(f12_part(pr), at)));
    if (pr.n_plus % 2 != 0) d *= 2;
    if (((n - *iv) / 2) % 2 != 0) d = -d;
    Place v = place_at(p);
    return square_class(d, v).class_id != square_class(Rat(-1), v).class_id;
}

// Irreducible *-symmetric Z_p-factors of f whose residual matches `target`
// (nullopt target: any residual).  Returns Unknown if the factorization ran
// out of certificates.
inline std::optional<bool> has_star_factor(const IntPoly& f, const Int& p,
                                           const std::optional<FpPoly>& target) {
    auto fac = factor_over_zp(f, p);
    if (fac.status == FactorStatus::PrecisionExceeded) return std::nullopt;
    for (auto& pf : fac.factors) {
        if (!pf.star_symmetric) continue;
        if (!star_symmetric_mod_p(pf.residual)) continue;
        if (!target || pf.residual == *target) return true;
    }
    return false;
}

}  // namespace detail

// Membership of p in the edge set Pi_{f,g}.  Returns nullopt ("unknown") when
// a required Z_p factorization exceeds its precision budget.
inline std::optional<bool> pi_membership(const SymmetricProfile& pr,
                                         const std::optional<IndexMap>& iota,
                                         const GraphVertex& f, const GraphVertex& g,
                                         const Int& p) {
    if (f == g) fail("SameVertex", "Pi is defined for distinct vertices");
    bool f0 = f.kind != VertexKind::TypeOne, g0 = g.kind != VertexKind::TypeOne;
    if (f0 && g0) {
        // X - 1 vs X + 1: the reductions coincide only at p = 2, and both
        // type-0 side conditions must hold.
        if (p != 2) return false;
        return detail::type0_side_condition(pr, iota, f.kind, p) &&
               detail::type0_side_condition(pr, iota, g.kind, p);
    }
    if (f0 || g0) {
        const GraphVertex& type0 = f0 ? f : g;
        const GraphVertex& other = f0 ? g : f;
        if (!detail::type0_side_condition(pr, iota, type0.kind, p)) return false;
        // the other vertex needs an irreducible *-symmetric Z_p-factor whose
        // residual is divisible by the type-0 linear polynomial mod p
        FpPoly target = fp_from(type0.poly, p);
        return detail::has_star_factor(other.poly, p, target);
    }
    // Type-1 pair: each needs an irreducible *-symmetric Z_p-factor, and the
    // two residuals must share an irreducible *-symmetric mod-p divisor.
    // Residuals of irreducible factors are powers of a single irreducible, so
    // it suffices to compare them.
    auto ff = factor_over_zp(f.poly, p);
    auto gf = factor_over_zp(g.poly, p);
    if (ff.status == FactorStatus::PrecisionExceeded ||
        gf.status == FactorStatus::PrecisionExceeded) {
        // a definite "no" is still possible if the complete side has no
        // *-symmetric factor at all
        for (auto* done : {&ff, &gf}) {
            if (done->status != FactorStatus::Complete) continue;
            bool any = false;
            for (auto& pf : done->factors)
                if (pf.star_symmetric && star_symmetric_mod_p(pf.residual)) any = true;
            if (!any) return false;
        }
        return std::nullopt;
    }
    for (auto& pf : ff.factors) {
        if (!pf.star_symmetric || !star_symmetric_mod_p(pf.residual)) continue;
        for (auto& pg : gf.factors) {
            if (!pg.star_symmetric) continue;
            if (pf.residual == pg.residual) return true;
        }
    }
    return false;
}

struct GraphEdge {
    size_t a, b;                     // vertex indices, a < b
    std::vector<Int> witness_primes; // verified members of Pi_{f,g}
};

struct ObstructionGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    // pairs where some candidate prime's membership is unknown and no other
    // prime confirmed the edge
    std::vector<std::pair<size_t, size_t>> unknown_pairs;
    // iota values the D_{+-} edge tests depended on (multiplicity-2 vertices)
    std::optional<long> iota_at_x_minus_1, iota_at_x_plus_1;
};

inline ObstructionGraph build_graph(const SymmetricProfile& pr,
                                    const std::optional<IndexMap>& iota) {
    ObstructionGraph g;
    g.vertices = graph_vertices(pr);
    if (iota) {
        if (pr.n_plus == 2) g.iota_at_x_minus_1 = iota->at_x_minus_1;
        if (pr.n_minus == 2) g.iota_at_x_plus_1 = iota->at_x_plus_1;
    }
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        for (size_t j = i + 1; j < g.vertices.size(); ++j) {
            std::vector<Int> witnesses;
            bool unknown = false;
            for (const Int& p : candidate_primes(g.vertices[i], g.vertices[j])) {
                auto m = pi_membership(pr, iota, g.vertices[i], g.vertices[j], p);
                if (!m.has_value())
                    unknown = true;
                else if (*m)
                    witnesses.push_back(p);
            }
            if (!witnesses.empty())
                g.edges.push_back({i, j, std::move(witnesses)});
            else if (unknown)
                g.unknown_pairs.emplace_back(i, j);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// The obstruction group Omega.

struct ObstructionGroupInfo {
    std::vector<std::vector<size_t>> components;  // partition of vertex indices
    long omega_rank = 0;                          // Omega = (Z/2)^omega_rank
    std::vector<size_t> forced_zero;              // 1-dimensional eigenspaces
};

inline ObstructionGroupInfo omega_info(const ObstructionGraph& g) {
    size_t n = g.vertices.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : g.edges) parent[find(e.a)] = find(e.b);
    std::vector<std::vector<size_t>> comps(n);
    for (size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    ObstructionGroupInfo info;
    for (auto& c : comps)
        if (!c.empty()) info.components.push_back(std::move(c));
    info.omega_rank = static_cast<long>(info.components.size()) - 1;
    if (info.components.empty()) info.omega_rank = 0;
    for (size_t i = 0; i < n; ++i)
        if (g.vertices[i].kind != VertexKind::TypeOne && g.vertices[i].multiplicity == 1)
            info.forced_zero.push_back(i);
    return info;
}

// ---------------------------------------------------------------------------
// Decision engine.

enum class Status { Realizable, NotRealizable, Indeterminate };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Realizable: return "Realizable";
        case Status::NotRealizable: return "NotRealizable";
        default: return "Indeterminate";
    }
}

struct Verdict {
    Status status = Status::Indeterminate;
    std::vector<std::string> reasons;  // ordered trail of rule applications
    std::optional<ObstructionGraph> graph;
    std::optional<ObstructionGroupInfo> group;
};

// Decides whether an even unimodular lattice of signature (r, s) admits a
// semisimple isometry with characteristic polynomial F and index map iota
// (any index map when iota is absent).  The cascade applies, in order, the
// signature condition, the square condition, the forced-zero component rule,
// and the equal-signature sufficiency rule; anything beyond these is reported
// as Indeterminate together with the obstruction group data.
inline Verdict decide(const IntPoly& F, long r, long s,
                      const std::optional<IndexMap>& iota = std::nullopt) {
    if (r < 0 || s < 0 || F.degree() != r + s)
        fail("DegreeMismatch", "need r, s >= 0 with r + s = deg F");
    if ((r - s) % 8 != 0)
        fail("SignatureNotMod8", "even unimodular lattices need r = s mod 8");
    auto pr = decompose(F);  // rejects non-monic / odd / non-*-symmetric input

    Verdict verdict;
    auto sign = check_sign_condition(pr, r, s);
    if (!sign.holds) {
        verdict.status = Status::NotRealizable;
        verdict.reasons.push_back("signature condition fails: " + sign.reason);
        return verdict;
    }
    verdict.reasons.push_back("signature condition holds");

    auto rq = real_quad_factors(pr);
    if (iota && !validate_index_map(pr, rq, r, s, *iota))
        fail("InvalidIndexMap", "iota is not an index map for (F, r, s)");
    if (iota) verdict.reasons.push_back("index map validated");

    auto sq = check_square_condition(F);
    if (!sq.holds) {
        verdict.status = Status::NotRealizable;
        verdict.reasons.push_back("square condition fails: " + sq.reason);
        return verdict;
    }
    verdict.reasons.push_back("square condition holds");

    // The graph needs iota exactly when a multiplicity-2 type-0 vertex may
    // carry D_{+-} edges.
    bool graph_needs_iota = (pr.n_plus == 2 || pr.n_minus == 2);
    if (iota || !graph_needs_iota) {
        ObstructionGraph graph = build_graph(pr, iota);
        ObstructionGroupInfo info = omega_info(graph);
        std::set<size_t> forced(info.forced_zero.begin(), info.forced_zero.end());
        long uncovered = 0;
        for (auto& comp : info.components) {
            bool inside = true;
            for (size_t v : comp)
                if (!forced.count(v)) inside = false;
            if (!inside) ++uncovered;
        }
        verdict.graph = std::move(graph);
        verdict.group = std::move(info);
        if (uncovered <= 1) {
            // Every component functional vanishes: forced-zero components
            // contribute nothing, and the remaining one is killed by the
            // total-sum relation.  Extra (unknown) edges only merge
            // components, so the conclusion is stable under them.
            verdict.status = Status::Realizable;
            verdict.reasons.push_back(
                "all graph components except at most one are forced to zero");
            if (!verdict.graph->unknown_pairs.empty())
                verdict.reasons.push_back(
                    "some edges are unknown; the forced-zero rule is monotone under "
                    "extra edges, so the verdict stands");
            return verdict;
        }
        verdict.reasons.push_back("forced-zero component rule inconclusive");
        if (!verdict.graph->unknown_pairs.empty())
            verdict.reasons.push_back("graph has edges of unknown status");
    } else {
        verdict.reasons.push_back(
            "graph not built: multiplicity-2 vertex needs an index map");
    }

    if (!iota && r == s && pr.n_plus != 1 && pr.n_minus != 1) {
        verdict.status = Status::Realizable;
        verdict.reasons.push_back(
            "equal signature with both unit eigenvalue multiplicities distinct from 1");
        return verdict;
    }

    verdict.status = Status::Indeterminate;
    verdict.reasons.push_back("no applicable sufficiency rule");
    return verdict;
}

}  // namespace isolab

#endif  // ISOLAB_OBSTRUCTION_HPP
