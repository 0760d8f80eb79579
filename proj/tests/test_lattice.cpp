// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact linear algebra, the lattice catalog, and the isometry witness
// checker.

#include <catch2/catch_amalgamated.hpp>

#include "isolab/lattice.hpp"

using namespace isolab;

static const IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

namespace {

IntMat companion(const IntPoly& f) {
    size_t n = static_cast<size_t>(f.degree());
    IntMat c(n, std::vector<Int>(n, 0));
    for (size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
    for (size_t i = 0; i < n; ++i) c[i][n - 1] = -f.coeff(static_cast<long>(i));
    return c;
}

}  // namespace

TEST_CASE("matrix toolkit") {
    SECTION("characteristic polynomial of a companion matrix") {
        CHECK(char_poly(companion(lehmer)) == lehmer);
        CHECK(char_poly(companion(cyclotomic(12))) == cyclotomic(12));
        CHECK(char_poly(int_identity(3)) == poly_pow(IntPoly{-1, 1}, 3));
    }
    SECTION("determinants") {
        CHECK(mat_det(IntMat{{0, 1}, {1, 0}}) == -1);
        CHECK(mat_det(IntMat{{2, 1}, {1, 2}}) == 3);
        CHECK(mat_det(IntMat{{1, 2}, {2, 4}}) == 0);
    }
    SECTION("signatures") {
        auto s = mat_signature(rat_mat({{2, 0}, {0, -3}}));
        CHECK((s.plus == 1 && s.minus == 1 && s.zero == 0));
        s = mat_signature(rat_mat({{0, 1}, {1, 0}}));  // hyperbolic plane
        CHECK((s.plus == 1 && s.minus == 1 && s.zero == 0));
        s = mat_signature(rat_mat({{1, 2}, {2, 4}}));
        CHECK((s.plus == 1 && s.zero == 1));
    }
    SECTION("kernel and solve") {
        RatMat a = rat_mat({{1, 2, 3}, {2, 4, 6}});
        RatMat k = mat_kernel(a);
        CHECK(mat_cols(k) == 2);
        CHECK(mat_is_zero(mat_mul(a, k)));
        RatMat b = rat_mat({{5}, {11}});
        RatMat m = rat_mat({{1, 1}, {1, 2}});
        RatMat x = mat_solve(m, b);
        CHECK(mat_mul(m, x) == b);
        CHECK_THROWS_AS(mat_solve(rat_mat({{1, 1}, {2, 2}}), rat_mat({{0}, {1}})), error);
    }
    SECTION("polynomial evaluation and semisimplicity probe") {
        IntMat c = companion(cyclotomic(5));
        CHECK(mat_is_zero(mat_poly_eval(cyclotomic(5), c)));
        CHECK(mat_pow(c, 5) == int_identity(4));
    }
}

TEST_CASE("lattice catalog") {
    auto u = catalog("U");
    CHECK((u.r == 1 && u.s == 1));
    CHECK(mat_det(u.gram) == -1);
    auto v2 = catalog("V2");
    CHECK((v2.r == 2 && v2.s == 0));
    CHECK(mat_det(v2.gram) == 3);
    auto e8 = catalog("E8");
    CHECK((e8.r == 8 && e8.s == 0));
    CHECK(mat_det(e8.gram) == 1);
    for (size_t i = 0; i < 8; ++i) CHECK(e8.gram[i][i] % 2 == 0);
    auto e8m = catalog("E8minus");
    CHECK((e8m.r == 0 && e8m.s == 8));
    auto k3 = catalog("K3");
    CHECK(k3.gram.size() == 22);
    CHECK((k3.r == 3 && k3.s == 19));
    CHECK(mat_det(k3.gram) == -1);
    CHECK_THROWS_AS(catalog("A1"), error);
}

TEST_CASE("verify_witness basics") {
    auto u = catalog("U");
    SECTION("identity on U") {
        auto rep = verify_witness({u, int_identity(2)});
        CHECK(rep.characteristic == poly_pow(IntPoly{-1, 1}, 2));
        CHECK(rep.is_semisimple);
        CHECK(rep.det_t == 1);
        REQUIRE(rep.index_map.at_x_minus_1.has_value());
        CHECK(*rep.index_map.at_x_minus_1 == 0);
        CHECK(rep.spinor_parity_ok);
    }
    SECTION("swap on U") {
        auto rep = verify_witness({u, IntMat{{0, 1}, {1, 0}}});
        CHECK(rep.characteristic == IntPoly{-1, 0, 1});
        CHECK(rep.is_semisimple);
        CHECK(rep.det_t == -1);
        CHECK(*rep.index_map.at_x_minus_1 == 1);   // e + f has norm 2
        CHECK(*rep.index_map.at_x_plus_1 == -1);   // e - f has norm -2
        CHECK(rep.spinor_parity_ok);               // v_2(-2) = 1, det t = -1
    }
    SECTION("negated identity on E8") {
        auto e8 = catalog("E8");
        IntMat t = int_identity(8);
        for (auto& row : t)
            for (auto& x : row) x = -x;
        auto rep = verify_witness({e8, t});
        CHECK(rep.characteristic == poly_pow(IntPoly{1, 1}, 8));
        CHECK(rep.is_semisimple);
        CHECK(rep.det_t == 1);
        CHECK(*rep.index_map.at_x_plus_1 == 8);
        CHECK(rep.spinor_parity_ok);
    }
    SECTION("negated identity on U") {
        IntMat t{{-1, 0}, {0, -1}};
        auto rep = verify_witness({u, t});
        CHECK(*rep.index_map.at_x_plus_1 == 0);
        CHECK(rep.spinor_parity_ok);  // det b = -1, f(-1) = 1, det t = 1
    }
    SECTION("not an isometry") {
        CHECK_THROWS_AS(verify_witness({u, IntMat{{1, 1}, {0, 1}}}), error);
        CHECK_THROWS_AS(verify_witness({u, IntMat{{1, 0}}}), error);
    }
}

TEST_CASE("verify_witness type-1 factors") {
    SECTION("hexagonal rotation on V2") {
        auto v2 = catalog("V2");
        IntMat t{{0, -1}, {1, 1}};
        auto rep = verify_witness({v2, t});
        CHECK(rep.characteristic == cyclotomic(6));
        CHECK(rep.is_semisimple);
        CHECK(rep.det_t == 1);
        REQUIRE(rep.index_map.at.size() == 1);
        CHECK(rep.index_map.at[0] == 2);  // positive definite plane
        CHECK(rep.spinor_parity_ok);
        // the inverse reports the same index map
        IntMat tinv{{1, 1}, {-1, 0}};
        auto rep2 = verify_witness({v2, tinv});
        CHECK(rep2.index_map.at == rep.index_map.at);
    }
    SECTION("block sum: characteristic polynomials multiply, indices join") {
        auto u = catalog("U"), v2 = catalog("V2");
        auto lat = make_lattice(direct_sum(u.gram, v2.gram));
        IntMat t(4, std::vector<Int>(4, 0));
        t[0][1] = t[1][0] = 1;             // swap on U
        t[2][2] = 0; t[2][3] = -1; t[3][2] = 1; t[3][3] = 1;  // rotation on V2
        auto rep = verify_witness({lat, t});
        CHECK(rep.characteristic == IntPoly{-1, 0, 1} * cyclotomic(6));
        CHECK(*rep.index_map.at_x_minus_1 == 1);
        CHECK(*rep.index_map.at_x_plus_1 == -1);
        CHECK(rep.index_map.at == std::vector<long>{2});
        CHECK(rep.spinor_parity_ok);
    }
    SECTION("10-cycle permutation on the standard cubic lattice") {
        size_t n = 10;
        IntMat t(n, std::vector<Int>(n, 0));
        for (size_t i = 0; i < n; ++i) t[(i + 1) % n][i] = 1;
        auto lat = make_lattice(int_identity(n));
        auto rep = verify_witness({lat, t});
        CHECK(rep.characteristic == cyclotomic(1) * cyclotomic(2) * cyclotomic(5) * cyclotomic(10));
        CHECK(rep.is_semisimple);
        CHECK(rep.det_t == -1);  // a 10-cycle is an odd permutation
        CHECK(*rep.index_map.at_x_minus_1 == 1);
        CHECK(*rep.index_map.at_x_plus_1 == 1);
        CHECK(rep.index_map.at == std::vector<long>(4, 2));
        // v_2(det b|_{V(-1)}) = v_2(10) = 1, f(-1) = Phi_5(-1) Phi_10(-1) = 5
        CHECK(rep.spinor_parity_ok);
        auto pr = decompose(rep.characteristic);
        auto rq = real_quad_factors(pr);
        CHECK(validate_index_map(pr, rq, 10, 0, rep.index_map));
    }
    SECTION("opposite planes cancel within one factor") {
        auto v2 = catalog("V2");
        IntMat negv2 = v2.gram;
        for (auto& row : negv2)
            for (auto& x : row) x = -x;
        auto lat = make_lattice(direct_sum(v2.gram, negv2));
        IntMat t(4, std::vector<Int>(4, 0));
        t[0][1] = -1; t[1][0] = 1; t[1][1] = 1;
        t[2][3] = -1; t[3][2] = 1; t[3][3] = 1;
        auto rep = verify_witness({lat, t});
        CHECK(rep.characteristic == poly_pow(cyclotomic(6), 2));
        REQUIRE(rep.index_map.at.size() == 1);
        CHECK(rep.index_map.at[0] == 0);
    }
    SECTION("non-semisimple unipotent isometry of U + U") {
        auto u = catalog("U");
        auto lat = make_lattice(direct_sum(u.gram, u.gram));
        // Eichler-style transvection: f1 -> f1 - e2, f2 -> f2 + e1
        IntMat t = int_identity(4);
        t[2][1] = -1;  // image of f1 gains -e2
        t[0][3] = 1;   // image of f2 gains +e1
        auto rep = verify_witness({lat, t});
        CHECK(rep.characteristic == poly_pow(IntPoly{-1, 1}, 4));
        CHECK_FALSE(rep.is_semisimple);
        CHECK(*rep.index_map.at_x_minus_1 == 0);
        CHECK(rep.spinor_parity_ok);
    }
}
