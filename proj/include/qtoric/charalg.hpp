#pragma once

// Rational cohomology of the quasitoric manifold M over (P, lambda).
//
// The ring is Q[v_1..v_m] modulo the face relations (products of facet
// classes with no common face vanish) and the n linear relations given by
// the rows of lambda. Picking a vertex whose lambda-minor is invertible
// and eliminating its n facet classes leaves the degree-two basis
// u_1..u_{m-n}; everything in degree four is then a quadratic form in the
// u's, reduced modulo the rewritten face relations. The first Pontrjagin
// class is the sum of squares of all facet classes, whose Gram matrix in
// the u-basis is I + L^T L for the elimination block L; in particular it
// is positive definite before reduction.

#include "qtoric/ldlt.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/sym2.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

struct CharacteristicMatrix {
    IMatrix lambda;  // n x m, column i = circle data of facet i
};

struct NondegeneracyReport {
    bool ok = false;
    std::vector<std::vector<int>> failing_vertices;  // vertex facet sets with |det| != 1
};

struct GradedRingPresentation {
    int n = 0;
    int m = 0;
    std::vector<int> base_facets;   // facets eliminated via the base vertex
    std::vector<int> basis_labels;  // original facet indices naming u_1..u_{m-n}
    QMatrix elimination;            // n x (m-n); v_base[j] = -(elimination row j) . u
    QMatrix sym2_to_h4;             // h4_dim x sym2_dim(m-n), full row rank
    std::size_t h4_dim = 0;
    // Row basis (RREF) of the quadratic part of the defining ideal, i.e. the
    // kernel of sym2_to_h4, in Sym^2 coordinates.
    QMatrix quadratic_ideal;

    std::size_t h2_dim() const { return basis_labels.size(); }

    // Expansion of every original facet class in the u-basis (m x (m-n)).
    QMatrix facet_expansion() const {
        const std::size_t d = basis_labels.size();
        QMatrix e(m, d);
        for (std::size_t t = 0; t < base_facets.size(); ++t)
            for (std::size_t k = 0; k < d; ++k) e(base_facets[t], k) = -elimination(t, k);
        for (std::size_t k = 0; k < d; ++k) e(basis_labels[k], k) = 1;
        return e;
    }

    // Quadratic ideal rows as symmetric matrices (the subspace fed to the
    // q-type test).
    std::vector<QMatrix> quadratic_ideal_matrices() const {
        std::vector<QMatrix> out;
        for (std::size_t r = 0; r < quadratic_ideal.rows(); ++r)
            out.push_back(gram_matrix(basis_labels.size(), quadratic_ideal.row(r)));
        return out;
    }
};

struct QuadraticForm {
    QMatrix gram;  // symmetric, exact rational
};

struct PontrjaginClass {
    QuadraticForm form;  // Gram matrix in the u-basis: I + L^T L
    QVector h4_image;    // sym2_to_h4 applied to the form's coefficients
};

inline void check_shape(const SimplePolytope& p, const CharacteristicMatrix& lam) {
    if (static_cast<int>(lam.lambda.rows()) != p.dim_n ||
        static_cast<int>(lam.lambda.cols()) != p.num_facets)
        throw std::invalid_argument("characteristic matrix shape mismatch: expected " +
                                    std::to_string(p.dim_n) + "x" + std::to_string(p.num_facets));
}

inline IMatrix vertex_minor(const CharacteristicMatrix& lam, const std::vector<int>& vertex) {
    IMatrix minor(vertex.size(), vertex.size());
    for (std::size_t r = 0; r < vertex.size(); ++r)
        for (std::size_t c = 0; c < vertex.size(); ++c) minor(r, c) = lam.lambda(r, vertex[c]);
    return minor;
}

// Davis-Januszkiewicz condition: every vertex minor of lambda has
// determinant +-1.
inline NondegeneracyReport check_nondegeneracy(const SimplePolytope& p,
                                               const CharacteristicMatrix& lam) {
    check_shape(p, lam);
    NondegeneracyReport report;
    for (const auto& vertex : p.vertices) {
        Integer det = determinant(vertex_minor(lam, vertex));
        if (det != 1 && det != -1) report.failing_vertices.push_back(vertex);
    }
    report.ok = report.failing_vertices.empty();
    return report;
}

inline int edim(const SimplePolytope& p) { return p.num_facets - p.dim_n; }

namespace detail {

inline GradedRingPresentation presentation_impl(const SimplePolytope& p,
                                                const CharacteristicMatrix& lam,
                                                std::size_t base_vertex) {
    const int n = p.dim_n;
    const int m = p.num_facets;
    const std::size_t d = static_cast<std::size_t>(m - n);

    GradedRingPresentation pres;
    pres.n = n;
    pres.m = m;
    pres.base_facets = p.vertices[base_vertex];
    std::sort(pres.base_facets.begin(), pres.base_facets.end());
    std::vector<bool> in_base(m, false);
    for (int f : pres.base_facets) in_base[f] = true;
    for (int f = 0; f < m; ++f)
        if (!in_base[f]) pres.basis_labels.push_back(f);

    // Solve A v_base = -B u for the base facet classes.
    QMatrix a(n, n), b(n, d);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) a(r, c) = Rational(lam.lambda(r, pres.base_facets[c]));
        for (std::size_t c = 0; c < d; ++c) b(r, c) = Rational(lam.lambda(r, pres.basis_labels[c]));
    }
    std::optional<QMatrix> a_inv = inverse(a);
    if (!a_inv) throw std::invalid_argument("base vertex minor is singular");
    pres.elimination = *a_inv * b;  // n x d

    // Degree-four face relations, rewritten in the u-basis.
    QMatrix expansion = pres.facet_expansion();
    std::vector<QVector> relation_rows;
    for (int f = 0; f < m; ++f)
        for (int g = f + 1; g < m; ++g) {
            if (facets_share_face(p, f, g)) continue;
            relation_rows.push_back(linear_product_coords(expansion.row(f), expansion.row(g)));
        }
    const std::size_t sym_dim = sym2_dim(d);
    QMatrix relations(relation_rows.size(), sym_dim);
    for (std::size_t r = 0; r < relation_rows.size(); ++r)
        for (std::size_t c = 0; c < sym_dim; ++c) relations(r, c) = relation_rows[r][c];
    std::vector<std::size_t> pivots = rref(relations);

    pres.quadratic_ideal = QMatrix(pivots.size(), sym_dim);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < sym_dim; ++c) pres.quadratic_ideal(r, c) = relations(r, c);

    pres.h4_dim = sym_dim - pivots.size();
    std::vector<bool> is_pivot(sym_dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < sym_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // Quotient map: a coordinate vector reduces modulo the RREF relation
    // rows, then restricts to the free coordinates.
    pres.sym2_to_h4 = QMatrix(pres.h4_dim, sym_dim);
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
        pres.sym2_to_h4(q, free_cols[q]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            pres.sym2_to_h4(q, pivots[r]) = -pres.quadratic_ideal(r, free_cols[q]);
    }

    HVector h = h_vector(p);
    if (static_cast<long long>(pres.h4_dim) != h.at(2))
        throw std::logic_error("H^4 dimension " + std::to_string(pres.h4_dim) +
                               " disagrees with h_2 = " + std::to_string(h.at(2)));
    return pres;
}

}  // namespace detail

// Presentation anchored at a caller-chosen vertex (its lambda-minor must be
// invertible over Q). Mainly for basis-independence checks.
inline GradedRingPresentation presentation_at(const SimplePolytope& p,
                                              const CharacteristicMatrix& lam,
                                              std::size_t base_vertex) {
    auto structural = detail::structural_violations(p);
    if (!structural.empty()) throw std::invalid_argument("invalid polytope: " + structural.front());
    check_shape(p, lam);
    if (base_vertex >= p.vertices.size()) throw std::invalid_argument("base vertex out of range");
    if (determinant(vertex_minor(lam, p.vertices[base_vertex])) == 0)
        throw std::invalid_argument("base vertex minor is singular");
    return detail::presentation_impl(p, lam, base_vertex);
}

// Presentation anchored at the lowest-index vertex with invertible minor.
inline GradedRingPresentation presentation(const SimplePolytope& p,
                                            const CharacteristicMatrix& lam) {
    auto structural = detail::structural_violations(p);
    if (!structural.empty()) throw std::invalid_argument("invalid polytope: " + structural.front());
    check_shape(p, lam);
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        if (determinant(vertex_minor(lam, p.vertices[v])) != 0)
            return detail::presentation_impl(p, lam, v);
    throw std::invalid_argument("no vertex has an invertible lambda-minor");
}

// p_1(M) as a quadratic form in the u-basis plus its class in H^4.
inline PontrjaginClass pontrjagin_p1(const GradedRingPresentation& pres) {
    const std::size_t d = pres.h2_dim();
    QMatrix gram = QMatrix::identity(d) + pres.elimination.transpose() * pres.elimination;
    PontrjaginClass p1;
    p1.form.gram = gram;
    p1.h4_image = pres.sym2_to_h4 * form_coords(gram);
    return p1;
}

inline PontrjaginClass pontrjagin_p1(const SimplePolytope& p, const CharacteristicMatrix& lam) {
    return pontrjagin_p1(presentation(p, lam));
}

}  // namespace qtoric
