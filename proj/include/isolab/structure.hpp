// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Global structure of a reciprocal (*-symmetric) polynomial F: the type
// decomposition F = F0 F1 F2, the signature and square conditions, real
// quadratic factors with isolating intervals, and index map enumeration.

#ifndef ISOLAB_STRUCTURE_HPP
#define ISOLAB_STRUCTURE_HPP

#include <optional>
#include <string>

#include "isolab/roots.hpp"

namespace isolab {

struct SymmetricProfile {
    IntPoly F;
    long n_plus = 0;    // multiplicity of X - 1
    long n_minus = 0;   // multiplicity of X + 1
    std::vector<std::pair<IntPoly, long>> I1;               // reciprocal irreducible, mult
    std::vector<std::tuple<IntPoly, IntPoly, long>> I2;     // g, g*, mult
};

inline SymmetricProfile decompose(const IntPoly& F) {
    if (!F.is_monic()) fail("NonMonic", "profile needs a monic polynomial");
    if (F.degree() % 2 != 0) fail("OddDegree", "profile needs even degree");
    if (classify_symmetry(F) == Symmetry::NotStarSymmetric)
        fail("NotStarSymmetric", "profile needs a *-symmetric polynomial");
    SymmetricProfile pr;
    pr.F = F;
    auto fac = factor_over_z(F);
    std::vector<std::pair<IntPoly, long>> pending;
    for (auto& [g, mult] : fac) {
        if (g.degree() == 0) continue;  // content is +-1 for monic F
        if (g == IntPoly{-1, 1}) {
            pr.n_plus = mult;
        } else if (g == IntPoly{1, 1}) {
            pr.n_minus = mult;
        } else if (is_star_symmetric(g)) {
            pr.I1.emplace_back(g, mult);
        } else {
            pending.emplace_back(g, mult);
        }
    }
    // pair type-2 factors with their reciprocal mates
    std::vector<bool> used(pending.size(), false);
    for (size_t i = 0; i < pending.size(); ++i) {
        if (used[i]) continue;
        IntPoly mate = reciprocal_star(pending[i].first);
        if (mate.lc() < 0) mate = -mate;
        bool found = false;
        for (size_t j = i + 1; j < pending.size(); ++j) {
            if (!used[j] && pending[j].first == mate) {
                if (pending[j].second != pending[i].second)
                    fail("NotStarSymmetric", "reciprocal pair with mismatched multiplicities");
                pr.I2.emplace_back(pending[i].first, pending[j].first, pending[i].second);
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) fail("NotStarSymmetric", "unpaired non-reciprocal factor");
    }
    std::sort(pr.I1.begin(), pr.I1.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return pr;
}

inline IntPoly profile_product(const SymmetricProfile& pr) {
    IntPoly f{1};
    f = f * poly_pow(IntPoly{-1, 1}, pr.n_plus) * poly_pow(IntPoly{1, 1}, pr.n_minus);
    for (auto& [g, m] : pr.I1) f = f * poly_pow(g, m);
    for (auto& [g, gs, m] : pr.I2) f = f * poly_pow(g * gs, m);
    return f;
}

// ---------------------------------------------------------------------------
// The signature condition.

struct ConditionResult {
    bool holds = true;
    std::string reason;
};

inline ConditionResult check_sign_condition(const SymmetricProfile& pr, long r, long s) {
    if (r < 0 || s < 0 || r + s != pr.F.degree())
        fail("DegreeMismatch", "need r + s = deg F with r, s >= 0");
    long m = m_of(pr.F);
    if (r < m || s < m) return {false, "r and s must both be at least m(F) = " + std::to_string(m)};
    if (eval(pr.F, 1) != 0 && eval(pr.F, -1) != 0 && (r - m) % 2 != 0)
        return {false, "r, s must be congruent to m(F) mod 2 when F(1)F(-1) != 0"};
    return {true, ""};
}

inline ConditionResult check_square_condition(const IntPoly& F) {
    Int f1 = eval(F, 1), fm1 = eval(F, -1);
    if (!is_perfect_square(abs_int(f1))) return {false, "|F(1)| is not a square"};
    if (!is_perfect_square(abs_int(fm1))) return {false, "|F(-1)| is not a square"};
    Int signed_prod = f1 * fm1;
    if ((F.degree() / 2) % 2 != 0) signed_prod = -signed_prod;
    if (signed_prod < 0 || !is_perfect_square(signed_prod))
        return {false, "(-1)^(deg F/2) F(1) F(-1) is not a square"};
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Real quadratic factors X^2 - beta X + 1 of the type-1 part.

struct RealQuadFactor {
    size_t parent_index = 0;          // index into profile.I1
    RationalInterval beta_interval;   // isolates beta = delta + 1/delta in (-2, 2)
    long multiplicity = 0;
};

inline std::vector<RealQuadFactor> real_quad_factors(const SymmetricProfile& pr) {
    std::vector<RealQuadFactor> out;
    std::vector<IntPoly> traces;
    for (size_t i = 0; i < pr.I1.size(); ++i) {
        IntPoly tr = trace_polynomial(pr.I1[i].first);
        traces.push_back(tr);
        for (auto& iv : isolate_real_roots(tr, {Rat(-2), Rat(2)}))
            out.push_back({i, iv, pr.I1[i].second});
    }
    // refine until the intervals are pairwise disjoint across all entries
    for (bool again = true; again;) {
        again = false;
        for (size_t a = 0; a < out.size(); ++a) {
            for (size_t b = a + 1; b < out.size(); ++b) {
                auto& A = out[a].beta_interval;
                auto& B = out[b].beta_interval;
                if (A.hi <= B.lo || B.hi <= A.lo) continue;
                A = refine_interval(traces[out[a].parent_index], A, (A.hi - A.lo) / 4);
                B = refine_interval(traces[out[b].parent_index], B, (B.hi - B.lo) / 4);
                again = true;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RealQuadFactor& x, const RealQuadFactor& y) {
        return x.beta_interval.lo < y.beta_interval.lo;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Index maps.

struct IndexMap {
    std::optional<long> at_x_minus_1;  // present iff n_+ >= 1
    std::optional<long> at_x_plus_1;   // present iff n_- >= 1
    std::vector<long> at;              // parallel to real_quad_factors(profile)
};

namespace detail {

// admissible values at a real quadratic factor of multiplicity n:
// even, |v| <= 2n, both (2n +- v)/2 even.
inline std::vector<long> admissible_i1_values(long n) {
    std::vector<long> vals;
    for (long v = -2 * n; v <= 2 * n; v += 2)
        if ((2 * n + v) / 2 % 2 == 0 && (2 * n - v) / 2 % 2 == 0) vals.push_back(v);
    return vals;
}

inline std::vector<long> admissible_i0_values(long n) {
    std::vector<long> vals;
    for (long v = -n; v <= n; ++v)
        if ((v - n) % 2 == 0) vals.push_back(v);
    return vals;
}

}  // namespace detail

inline bool validate_index_map(const SymmetricProfile& pr,
                               const std::vector<RealQuadFactor>& rq, long r, long s,
                               const IndexMap& iota) {
    if (!check_sign_condition(pr, r, s).holds)
        fail("SignConditionFails", "index maps require the signature condition");
    long sum = 0;
    if (pr.n_plus > 0) {
        if (!iota.at_x_minus_1) return false;
        long v = *iota.at_x_minus_1;
        if ((v - pr.n_plus) % 2 != 0 || v < -pr.n_plus || v > pr.n_plus) return false;
        sum += v;
    } else if (iota.at_x_minus_1) {
        return false;
    }
    if (pr.n_minus > 0) {
        if (!iota.at_x_plus_1) return false;
        long v = *iota.at_x_plus_1;
        if ((v - pr.n_minus) % 2 != 0 || v < -pr.n_minus || v > pr.n_minus) return false;
        sum += v;
    } else if (iota.at_x_plus_1) {
        return false;
    }
    if (iota.at.size() != rq.size()) return false;
    for (size_t i = 0; i < rq.size(); ++i) {
        long n = rq[i].multiplicity, v = iota.at[i];
        if (v % 2 != 0 || v < -2 * n || v > 2 * n) return false;
        if ((2 * n + v) / 2 % 2 != 0 || (2 * n - v) / 2 % 2 != 0) return false;
        sum += v;
    }
    return sum == r - s;
}

// Exhaustive enumeration of Idx_{r,s}(F), streamed to a callback; returns the
// count. The callback may return false to stop early.
template <typename Fn>
inline long enumerate_index_maps(const SymmetricProfile& pr,
                                 const std::vector<RealQuadFactor>& rq, long r, long s,
                                 Fn&& emit) {
    if (!check_sign_condition(pr, r, s).holds)
        fail("SignConditionFails", "index maps require the signature condition");
    std::vector<std::vector<long>> choices;
    if (pr.n_plus > 0) choices.push_back(detail::admissible_i0_values(pr.n_plus));
    if (pr.n_minus > 0) choices.push_back(detail::admissible_i0_values(pr.n_minus));
    for (auto& f : rq) choices.push_back(detail::admissible_i1_values(f.multiplicity));

    // suffix bounds for pruning the partial-sum search
    size_t k = choices.size();
    std::vector<long> max_suffix(k + 1, 0), min_suffix(k + 1, 0);
    for (size_t i = k; i-- > 0;) {
        long mx = choices[i].empty() ? 0 : *std::max_element(choices[i].begin(), choices[i].end());
        long mn = choices[i].empty() ? 0 : *std::min_element(choices[i].begin(), choices[i].end());
        max_suffix[i] = max_suffix[i + 1] + mx;
        min_suffix[i] = min_suffix[i + 1] + mn;
    }
    long target = r - s;
    long count = 0;
    std::vector<long> cur(k, 0);
    bool stop = false;
    auto rec = [&](auto&& self, size_t i, long sum) -> void {
        if (stop) return;
        if (sum + min_suffix[i] > target || sum + max_suffix[i] < target) return;
        if (i == k) {
            IndexMap m;
            size_t pos = 0;
            if (pr.n_plus > 0) m.at_x_minus_1 = cur[pos++];
            if (pr.n_minus > 0) m.at_x_plus_1 = cur[pos++];
            m.at.assign(cur.begin() + pos, cur.end());
            ++count;
            if (!emit(m)) stop = true;
            return;
        }
        for (long v : choices[i]) {
            cur[i] = v;
            self(self, i + 1, sum + v);
            if (stop) return;
        }
    };
    rec(rec, 0, 0);
    return count;
}

inline std::vector<IndexMap> enumerate_index_maps(const SymmetricProfile& pr,
                                                  const std::vector<RealQuadFactor>& rq, long r,
                                                  long s) {
    std::vector<IndexMap> out;
    enumerate_index_maps(pr, rq, r, s, [&](const IndexMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// D_+ / D_- determinants of the type-0 eigenspaces.

// F12 = F / ((X-1)^{n+} (X+1)^{n-}), the type-1 x type-2 part.
inline IntPoly f12_part(const SymmetricProfile& pr) {
    IntPoly f{1};
    for (auto& [g, m] : pr.I1) f = f * poly_pow(g, m);
    for (auto& [g, gs, m] : pr.I2) f = f * poly_pow(g * gs, m);
    return f;
}

// D_epsilon = (-1)^((n_eps - iota(X -+ 1))/2) * |F12(eps 1)|, doubled when
// n_+ is odd; absent when the corresponding multiplicity vanishes.
inline std::pair<std::optional<Rat>, std::optional<Rat>> d_plus_minus(
    const SymmetricProfile& pr, const std::vector<RealQuadFactor>& rq, long r, long s,
    const IndexMap& iota) {
    if (!validate_index_map(pr, rq, r, s, iota)) fail("InvalidIndexMap", "invalid index map");
    IntPoly f12 = f12_part(pr);
    bool doubled = pr.n_plus % 2 != 0;
    std::optional<Rat> dp, dm;
    if (pr.n_plus > 0) {
        Rat v = Rat(abs_int(eval(f12, 1)));
        if (doubled) v *= 2;
        if (((pr.n_plus - *iota.at_x_minus_1) / 2) % 2 != 0) v = -v;
        dp = v;
    }
    if (pr.n_minus > 0) {
        Rat v = Rat(abs_int(eval(f12, -1)));
        if (doubled) v *= 2;
        if (((pr.n_minus - *iota.at_x_plus_1) / 2) % 2 != 0) v = -v;
        dm = v;
    }
    return {dp, dm};
}

}  // namespace isolab

#endif  // ISOLAB_STRUCTURE_HPP
