// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Z_p factorization with ramification certificates, and place classification.

#include <catch2/catch_amalgamated.hpp>

#include "isolab/roots.hpp"
#include "isolab/zpfactor.hpp"

using namespace isolab;

namespace {

// Synthesize the reciprocal chunk descriptor for an exact integer polynomial
// (used to classify places of globally irreducible reciprocal polynomials).
PadicFactor chunk_of(const IntPoly& f, const Int& p, long k = 40) {
    PadicFactor pf;
    pf.p = p;
    pf.lifted = poly_mod(f, pow_int(p, static_cast<unsigned long>(k)));
    pf.precision = k;
    pf.degree = f.degree();
    auto rf = factor_mod_p(f, p);
    pf.residual = rf[0].first;
    pf.residual_mult = rf[0].second;
    pf.star_symmetric = star_symmetric_mod_pk(f, p, k);
    return pf;
}

IntPoly star_mod_pk(const IntPoly& h, const Int& pk) {
    std::vector<Int> rev(h.c.rbegin(), h.c.rend());
    Int inv = mod_inverse(mod_pos(h.coeff(0), pk), pk);
    return poly_mod(inv * IntPoly(std::move(rev)), pk);
}

}  // namespace

TEST_CASE("factor_over_zp: squarefree reductions lift by Hensel") {
    SECTION("Phi_12 at 5: two quadratics forming a reciprocal pair") {
        auto fac = factor_over_zp(cyclotomic(12), 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 2);
        for (auto& pf : fac.factors) {
            CHECK(pf.degree == 2);
            CHECK(pf.ramification_index == 1);
            CHECK(pf.residue_degree == 2);
            CHECK(pf.residual_mult == 1);
            CHECK_FALSE(pf.star_symmetric);
        }
        Int pk = pow_int(5, static_cast<unsigned long>(fac.factors[0].precision));
        CHECK(star_mod_pk(fac.factors[0].lifted, pk) == fac.factors[1].lifted);
    }
    SECTION("Phi_7 at 2: two non-reciprocal cubics, swapped by star") {
        auto fac = factor_over_zp(cyclotomic(7), 2);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 2);
        for (auto& pf : fac.factors) {
            CHECK(pf.degree == 3);
            CHECK_FALSE(pf.star_symmetric);
        }
        Int pk = pow_int(2, static_cast<unsigned long>(fac.factors[0].precision));
        CHECK(star_mod_pk(fac.factors[0].lifted, pk) == fac.factors[1].lifted);
    }
    SECTION("Phi_3 at 5: inert, reciprocal") {
        auto fac = factor_over_zp(cyclotomic(3), 5);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].ramification_index == 1);
        CHECK(fac.factors[0].residue_degree == 2);
        CHECK(fac.factors[0].star_symmetric);
    }
}

TEST_CASE("factor_over_zp: ramified certificates") {
    SECTION("X^2 - 3X + 1 at 5") {
        auto fac = factor_over_zp(IntPoly{1, -3, 1}, 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].ramification_index == 2);
        CHECK(fac.factors[0].residue_degree == 1);
        CHECK(fac.factors[0].star_symmetric);
    }
    SECTION("Phi_5 at 5") {
        auto fac = factor_over_zp(cyclotomic(5), 5);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].ramification_index == 4);
        CHECK(fac.factors[0].residue_degree == 1);
        CHECK(fac.factors[0].star_symmetric);
    }
    SECTION("Phi_25 at 5") {
        auto fac = factor_over_zp(cyclotomic(25), 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].degree == 20);
        CHECK(fac.factors[0].ramification_index == 20);
        CHECK(fac.factors[0].residue_degree == 1);
        CHECK(fac.factors[0].star_symmetric);
    }
    SECTION("Phi_15 at 5: ramification 4 on a quadratic residue field") {
        auto fac = factor_over_zp(cyclotomic(15), 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].degree == 8);
        CHECK(fac.factors[0].ramification_index == 4);
        CHECK(fac.factors[0].residue_degree == 2);
    }
    SECTION("X^2 - 5 at 5: Eisenstein") {
        auto fac = factor_over_zp(IntPoly{-5, 0, 1}, 5);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].ramification_index == 2);
    }
    SECTION("X^2 - 75 at 5: integral slope, unramified after scaling") {
        auto fac = factor_over_zp(IntPoly{-75, 0, 1}, 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].ramification_index == 1);
        CHECK(fac.factors[0].residue_degree == 2);
    }
}

TEST_CASE("factor_over_zp: residual groups and multi-segment splits") {
    SECTION("two ramified quadratics with distinct residuals") {
        IntPoly f = IntPoly{1, -3, 1} * IntPoly{1, 3, 1};
        auto fac = factor_over_zp(f, 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 2);
        long total = 0;
        for (auto& pf : fac.factors) {
            CHECK(pf.ramification_index == 2);
            total += pf.degree;
        }
        CHECK(total == f.degree());
    }
    SECTION("(X-6)(X-26) at 5: one residual, split by polygon scaling") {
        IntPoly f = IntPoly{-6, 1} * IntPoly{-26, 1};
        auto fac = factor_over_zp(f, 5);
        CHECK(fac.status == FactorStatus::Complete);
        REQUIRE(fac.factors.size() == 2);
        for (auto& pf : fac.factors) {
            CHECK(pf.degree == 1);
            CHECK(pf.ramification_index == 1);
            CHECK(pf.residue_degree == 1);
            Int pk = pow_int(5, static_cast<unsigned long>(pf.precision));
            Int root = mod_pos(pk - pf.lifted.coeff(0), pk);  // X - root
            CHECK((root % 25 == 6 || root % 125 == 26));
        }
    }
    SECTION("Phi_5 * Phi_25 at 5: fractional multi-segment is an honest out") {
        auto fac = factor_over_zp(cyclotomic(5) * cyclotomic(25), 5);
        CHECK(fac.status == FactorStatus::PrecisionExceeded);
        CHECK(fac.factors.empty());
    }
}

TEST_CASE("factor_over_zp: degree sums and error paths") {
    for (long m : {8L, 12L, 20L, 21L}) {
        for (long p : {2L, 3L, 5L, 7L}) {
            auto fac = factor_over_zp(cyclotomic(m), p);
            if (fac.status != FactorStatus::Complete) continue;
            long total = 0;
            for (auto& pf : fac.factors) total += pf.degree;
            CHECK(total == euler_phi(m));
        }
    }
    CHECK_THROWS_AS(factor_over_zp(IntPoly{1, 0, 1} * IntPoly{1, 0, 1}, 3), error);
    CHECK_THROWS_AS(factor_over_zp(IntPoly{0, 1, 1}, 3), error);           // f(0) = 0
    CHECK_THROWS_AS(factor_over_zp(IntPoly{1, 2}, 3), error);              // non-monic
    CHECK_THROWS_AS(factor_over_zp(cyclotomic(5), 5, 0), error);           // bad budget
}

TEST_CASE("classify_place") {
    CHECK(classify_place(chunk_of(cyclotomic(4), 5), 5) == PlaceClass::Split);
    CHECK(classify_place(chunk_of(cyclotomic(3), 5), 5) == PlaceClass::Unramified);
    CHECK(classify_place(chunk_of(IntPoly{1, -3, 1}, 5), 5) == PlaceClass::Ramified);
    CHECK(classify_place(chunk_of(cyclotomic(5), 5), 5) == PlaceClass::Ramified);
    CHECK(classify_place(chunk_of(cyclotomic(12), 5), 5) == PlaceClass::Split);

    CHECK_THROWS_AS(classify_place(chunk_of(cyclotomic(3), 2, 20), 2), error);  // p = 2
    PadicFactor bad = chunk_of(cyclotomic(7), 3);
    bad.star_symmetric = false;
    CHECK_THROWS_AS(classify_place(bad, 3), error);
}

TEST_CASE("classify_place: cyclotomic places away from the level are unramified or split") {
    for (long m : {3L, 4L, 5L, 8L, 12L}) {
        for (long p : {7L, 11L, 13L}) {
            if ((2 * m) % p == 0) continue;
            auto fac = factor_over_zp(cyclotomic(m), p);
            REQUIRE(fac.status == FactorStatus::Complete);
            Int pk = pow_int(p, static_cast<unsigned long>(fac.factors[0].precision));
            std::vector<bool> used(fac.factors.size(), false);
            for (size_t i = 0; i < fac.factors.size(); ++i) {
                if (used[i]) continue;
                PadicFactor chunk = fac.factors[i];
                if (!chunk.star_symmetric) {
                    // pair with its reciprocal mate and classify the product
                    IntPoly mate = star_mod_pk(chunk.lifted, pk);
                    bool found = false;
                    for (size_t j = i + 1; j < fac.factors.size(); ++j) {
                        if (!used[j] && fac.factors[j].lifted == mate) {
                            used[j] = true;
                            found = true;
                            break;
                        }
                    }
                    REQUIRE(found);
                    IntPoly prod = poly_mod(chunk.lifted * mate, pk);
                    PadicFactor paired;
                    paired.p = p;
                    paired.lifted = prod;
                    paired.precision = fac.factors[i].precision;
                    paired.degree = prod.degree();
                    paired.star_symmetric = star_symmetric_mod_pk(prod, p, paired.precision);
                    REQUIRE(paired.star_symmetric);
                    chunk = paired;
                }
                CHECK(classify_place(chunk, p) != PlaceClass::Ramified);
            }
        }
    }
}
