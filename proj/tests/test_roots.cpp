// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "isolab/roots.hpp"

using namespace isolab;

static const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

TEST_CASE("cauchy bound") {
    CHECK(cauchy_bound(IntPoly{-3, 0, 1}) == 4);
    CHECK(cauchy_bound(IntPoly{1, 1}) == 2);
    CHECK(cauchy_bound(lehmer) == 2);
    CHECK_THROWS_AS(cauchy_bound(IntPoly{}), error);
}

TEST_CASE("sturm_count basics") {
    CHECK(sturm_count(IntPoly{-3, 0, 1}, {Rat(1), Rat(2)}) == 1);  // sqrt 3
    CHECK(sturm_count(IntPoly{1, 0, 1}, {Rat(-10), Rat(10)}) == 0);
    // Lehmer's number: exactly one trace root beyond 2
    IntPoly tr = trace_polynomial(lehmer);
    Rat B = cauchy_bound(tr);
    CHECK(sturm_count(tr, {Rat(2), B}) == 1);
    CHECK(sturm_count(tr, {-B, Rat(-2)}) == 0);
    CHECK(sturm_count(tr, {Rat(-2), Rat(2)}) == 4);
    // squarefree part taken internally
    CHECK(sturm_count(IntPoly{-3, 0, 1} * IntPoly{-3, 0, 1}, {Rat(1), Rat(2)}) == 1);
    CHECK_THROWS_AS(sturm_count(IntPoly{-4, 0, 1}, {Rat(0), Rat(2)}), error);  // endpoint root
    CHECK_THROWS_AS(sturm_count(IntPoly{-3, 0, 1}, {Rat(2), Rat(1)}), error);
}

TEST_CASE("sturm_count partition additivity") {
    IntPoly f = cyclotomic(5) * IntPoly{-3, 0, 1} * IntPoly{-1, -1, 1} * IntPoly{2, -4, 1};
    Rat B = cauchy_bound(primitive_part(f));
    std::vector<Rat> cuts{-B, Rat(-1, 3), Rat(1, 7), Rat(3, 2), B};
    long total = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        for (const Rat& c : cuts) REQUIRE(eval_rat(f, c) != 0);
        total += sturm_count(f, {cuts[i], cuts[i + 1]});
    }
    CHECK(total == sturm_count(f, {-B, B}));
}

TEST_CASE("root isolation and refinement") {
    IntPoly f{-3, 0, 1};
    Rat B = cauchy_bound(f);
    auto ivs = isolate_real_roots(f, {-B, B});
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi <= ivs[1].lo);
    for (auto& iv : ivs) CHECK(sturm_count(f, iv) == 1);
    auto fine = refine_interval(f, ivs[1], Rat(1, 1000));
    CHECK(fine.hi - fine.lo <= Rat(1, 1000));
    CHECK(sturm_count(f, fine) == 1);
    // the positive root sqrt(3) = 1.7320508...
    CHECK(fine.lo > Rat(17, 10));
    CHECK(fine.hi < Rat(174, 100));

    // five distinct real roots
    IntPoly g = IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{3, 1} * IntPoly{-7, 2};
    Rat Bg = cauchy_bound(g);
    auto gs = isolate_real_roots(g, {-Bg, Bg});
    CHECK(gs.size() == 5);
}

TEST_CASE("count_unit_circle_roots") {
    CHECK(count_unit_circle_roots(cyclotomic(12)) == 4);
    IntPoly cyc = cyclotomic(1) * cyclotomic(2) * cyclotomic(5) * cyclotomic(12);
    CHECK(count_unit_circle_roots(cyc) == cyc.degree());
    CHECK(count_unit_circle_roots(lehmer) == 8);
    IntPoly f = lehmer * poly_pow(cyclotomic(1), 2);
    CHECK(count_unit_circle_roots(f) == 10);
    // -1-symmetric inputs allowed: (X-1)(X+1)S
    IntPoly g = IntPoly{-1, 0, 1} * IntPoly{1, -3, 1};
    CHECK(count_unit_circle_roots(g) == 2);
    CHECK_THROWS_AS(count_unit_circle_roots(IntPoly{3, 2, 1}), error);
}

TEST_CASE("m_of") {
    CHECK(m_of(lehmer) == 1);
    CHECK(m_of(cyclotomic(1) * cyclotomic(2) * cyclotomic(5)) == 0);
    CHECK(m_of(IntPoly{-1, 0, 1} * IntPoly{1, -3, 1}) == 1);  // (X-1)(X+1)*Salem
    // type-2 pair (X^2-X-1)(X^2+X-1) = X^4-3X^2+1: golden ratio & friends
    CHECK(m_of(IntPoly{1, 0, -3, 0, 1}) == 2);
    CHECK_THROWS_AS(m_of(IntPoly{3, 2, 1}), error);
}

TEST_CASE("m_of additivity and degree identity") {
    std::mt19937_64 rng(23);
    std::vector<IntPoly> pool{lehmer,          IntPoly{1, -3, 1},     IntPoly{1, 0, -3, 0, 1},
                              cyclotomic(3),   cyclotomic(8),         cyclotomic(12),
                              IntPoly{-1, 1},  IntPoly{1, 1}};
    for (int trial = 0; trial < 20; ++trial) {
        IntPoly F = pool[rng() % pool.size()];
        IntPoly G = pool[rng() % pool.size()];
        CHECK(m_of(F * G) == m_of(F) + m_of(G));
        IntPoly H = F * G;
        CHECK(2 * m_of(H) + count_unit_circle_roots(H) == H.degree());
    }
}
