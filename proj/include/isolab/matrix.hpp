// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact dense linear algebra over the integers and rationals: products,
// determinants, characteristic polynomials, kernels, and signatures of
// symmetric matrices by congruence diagonalization.

#ifndef ISOLAB_MATRIX_HPP
#define ISOLAB_MATRIX_HPP

#include <utility>
#include <vector>

#include "isolab/intpoly.hpp"

namespace isolab {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

inline size_t mat_rows(const RatMat& a) { return a.size(); }
inline size_t mat_cols(const RatMat& a) { return a.empty() ? 0 : a[0].size(); }

inline RatMat rat_mat(const IntMat& a) {
    RatMat r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
}

inline RatMat rat_identity(size_t n) {
    RatMat r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

inline IntMat int_identity(size_t n) {
    IntMat r(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

template <typename M>
inline M mat_mul(const M& a, const M& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    M r(n, typename M::value_type(m, typename M::value_type::value_type(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

template <typename M>
inline M mat_transpose(const M& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    M r(m, typename M::value_type(n, typename M::value_type::value_type(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

template <typename M>
inline M mat_add(const M& a, const M& b) {
    M r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

template <typename M>
inline bool mat_is_zero(const M& a) {
    for (auto& row : a)
        for (auto& x : row)
            if (x != 0) return false;
    return true;
}

// Evaluate a polynomial at a square integer matrix by Horner's rule.
inline IntMat mat_poly_eval(const IntPoly& f, const IntMat& t) {
    size_t n = t.size();
    IntMat r(n, std::vector<Int>(n, 0));
    for (long i = f.degree(); i >= 0; --i) {
        r = mat_mul(r, t);
        for (size_t j = 0; j < n; ++j) r[j][j] += f.coeff(i);
    }
    return r;
}

inline IntMat mat_pow(IntMat a, long e) {
    IntMat r = int_identity(a.size());
    for (; e > 0; e /= 2) {
        if (e % 2 != 0) r = mat_mul(r, a);
        a = mat_mul(a, a);
    }
    return r;
}

// Determinant by fraction-free Gaussian elimination (works for both Int and
// Rat matrices via the rational path).
inline Rat mat_det(RatMat a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline Int mat_det(const IntMat& a) {
    Rat d = mat_det(rat_mat(a));
    if (denominator(d) != 1) fail("Internal", "integer determinant not integral");
    return numerator(d);
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<size_t> mat_rref(RatMat& a) {
    size_t rows = mat_rows(a), cols = mat_cols(a), r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline long mat_rank(RatMat a) { return static_cast<long>(mat_rref(a).size()); }

// Basis of the right kernel, as columns of the returned matrix.
inline RatMat mat_kernel(RatMat a) {
    size_t cols = mat_cols(a);
    auto pivots = mat_rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    RatMat basis(cols);
    size_t free_count = cols - pivots.size();
    for (size_t i = 0; i < cols; ++i) basis[i].assign(free_count, Rat(0));
    size_t idx = 0;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        basis[c][idx] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis[pivots[r]][idx] = -a[r][c];
        ++idx;
    }
    return basis;
}

// Solve A X = B for X (A with full column rank); errors if inconsistent.
inline RatMat mat_solve(const RatMat& a, const RatMat& b) {
    size_t rows = mat_rows(a), acols = mat_cols(a), bcols = mat_cols(b);
    RatMat aug(rows, std::vector<Rat>(acols + bcols, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < acols; ++j) aug[i][j] = a[i][j];
        for (size_t j = 0; j < bcols; ++j) aug[i][acols + j] = b[i][j];
    }
    auto pivots = mat_rref(aug);
    RatMat x(acols, std::vector<Rat>(bcols, Rat(0)));
    size_t r = 0;
    for (size_t c : pivots) {
        if (c >= acols) fail("Inconsistent", "linear system has no solution");
        for (size_t j = 0; j < bcols; ++j) x[c][j] = aug[r][acols + j];
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        for (size_t j = 0; j < bcols; ++j)
            if (aug[i][acols + j] != 0) fail("Inconsistent", "linear system has no solution");
    return x;
}

// Characteristic polynomial det(X I - t) by the Faddeev-LeVerrier recursion.
inline IntPoly char_poly(const IntMat& t) {
    size_t n = t.size();
    RatMat a = rat_mat(t), m = rat_identity(n);
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    RatMat am = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) am = mat_mul(a, m);  // m already holds M_{k-1} + c_{n-k+1} I
        Rat tr(0);
        for (size_t i = 0; i < n; ++i) tr += am[i][i];
        coeffs[n - k] = -tr / Rat(static_cast<long>(k));
        m = am;
        for (size_t i = 0; i < n; ++i) m[i][i] += coeffs[n - k];
    }
    std::vector<Int> ic(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        if (denominator(coeffs[i]) != 1) fail("Internal", "char poly not integral");
        ic[i] = numerator(coeffs[i]);
    }
    return IntPoly(std::move(ic));
}

// Signature (positives, negatives, zeros) of a symmetric rational matrix by
// congruence diagonalization.
struct Signature {
    long plus = 0, minus = 0, zero = 0;
};

inline Signature mat_signature(RatMat a) {
    size_t n = a.size();
    Signature sig;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // find a nonzero diagonal entry below, or create one from an
            // off-diagonal entry via a congruence row/column addition
            size_t j = k + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][j]);
            } else {
                size_t p = n, q = n;
                for (size_t i = k; i < n && p == n; ++i)
                    for (size_t l = i + 1; l < n; ++l)
                        if (a[i][l] != 0) {
                            p = i;
                            q = l;
                            break;
                        }
                if (p == n) {
                    sig.zero += static_cast<long>(n - k);
                    return sig;
                }
                // row/col p += row/col q makes the (p,p) entry 2 a_pq != 0
                for (size_t i = 0; i < n; ++i) a[p][i] += a[q][i];
                for (size_t i = 0; i < n; ++i) a[i][p] += a[i][q];
                if (p != k) {
                    std::swap(a[k], a[p]);
                    for (size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
                }
            }
        }
        if (a[k][k] == 0) {
            ++sig.zero;
            continue;
        }
        if (a[k][k] > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];  // row op
            for (size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];  // matching column op
        }
    }
    return sig;
}

}  // namespace isolab

#endif  // ISOLAB_MATRIX_HPP
