#pragma once

// Coordinates on Sym^2 of a d-dimensional space: a quadratic form
// sum_{i<=j} c_{ij} u_i u_j is stored as the coefficient vector c in
// lexicographic pair order, or as its symmetric Gram matrix. Both views
// are used: coefficient vectors feed the ring reduction, Gram matrices
// feed the definiteness tests.

#include "qtoric/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qtoric {

constexpr std::size_t sym2_dim(std::size_t d) { return d * (d + 1) / 2; }

// Index of the monomial u_i u_j (i <= j) in lexicographic pair order.
inline std::size_t sym2_index(std::size_t d, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (j >= d) throw std::out_of_range("sym2_index out of range");
    return i * d - i * (i - 1) / 2 + (j - i);
}

// Coefficient vector of the form with Gram matrix g (c_ii = g_ii, c_ij = 2 g_ij).
inline QVector form_coords(const QMatrix& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("form_coords needs a symmetric matrix");
    const std::size_t d = g.rows();
    QVector c(sym2_dim(d), Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            c[sym2_index(d, i, j)] = (i == j) ? g(i, i) : g(i, j) * 2;
    return c;
}

// Gram matrix of the form with coefficient vector c.
inline QMatrix gram_matrix(std::size_t d, const QVector& c) {
    if (c.size() != sym2_dim(d)) throw std::invalid_argument("gram_matrix coordinate size mismatch");
    QMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Rational& v = c[sym2_index(d, i, j)];
            if (i == j) g(i, i) = v;
            else g(i, j) = g(j, i) = v / 2;
        }
    return g;
}

// Plain entry coordinates (no doubling) on the upper triangle, used when a
// symmetric matrix is treated as an unknown vector rather than as a form.
inline QVector upper_entries(const QMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("upper_entries needs a symmetric matrix");
    const std::size_t d = m.rows();
    QVector out(sym2_dim(d), Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) out[sym2_index(d, i, j)] = m(i, j);
    return out;
}

inline QMatrix matrix_from_upper_entries(std::size_t d, const QVector& v) {
    if (v.size() != sym2_dim(d)) throw std::invalid_argument("upper entry size mismatch");
    QMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = v[sym2_index(d, i, j)];
    return m;
}

// Coefficient vector of the product of two linear forms a.u and b.u.
inline QVector linear_product_coords(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("linear form size mismatch");
    const std::size_t d = a.size();
    QVector c(sym2_dim(d), Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0 && b[i] == 0) continue;
        c[sym2_index(d, i, i)] += a[i] * b[i];
        for (std::size_t j = i + 1; j < d; ++j)
            c[sym2_index(d, i, j)] += a[i] * b[j] + a[j] * b[i];
    }
    return c;
}

}  // namespace qtoric
