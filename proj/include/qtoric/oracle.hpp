#pragma once

// Brute-force reference implementations used to validate the main modules
// on small instances. The ring dimensions are recomputed from scratch:
// monomials with face support form a basis of the face-relation quotient,
// and the linear relations are row-reduced over that basis with a local
// elimination (deliberately not sharing the reduction path of the main
// presentation). PSD checks here go through principal minors instead of
// pivoted LDL^T for the same reason.

#include "qtoric/charalg.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric::oracle {

namespace detail {

inline void check_caps(const SimplePolytope& p) {
    if (p.dim_n > 4 || p.num_facets > 10)
        throw std::invalid_argument("oracle size cap exceeded (needs n <= 4, m <= 10)");
}

inline bool support_is_face(const SimplePolytope& p, const std::vector<int>& support) {
    for (const auto& vertex : p.vertices)
        if (std::includes(vertex.begin(), vertex.end(), support.begin(), support.end()))
            return true;
    return false;
}

// Sorted degree-k monomials (multisets over the facet classes) whose
// support spans a face; these are a basis of the face-relation quotient.
inline std::vector<std::vector<int>> face_monomials(const SimplePolytope& p, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            std::vector<int> support = current;
            support.erase(std::unique(support.begin(), support.end()), support.end());
            if (support_is_face(p, support)) out.push_back(current);
            return;
        }
        for (int f = from; f < p.num_facets; ++f) {
            current.push_back(f);
            self(self, f, left - 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0, degree);
    return out;
}

// Local Gaussian elimination: inserts a row into a growing echelon basis,
// returns true when the row was independent.
inline bool eliminate_into(std::vector<QVector>& echelon, std::vector<std::size_t>& lead,
                           QVector row) {
    for (std::size_t r = 0; r < echelon.size(); ++r) {
        if (row[lead[r]] == 0) continue;
        Rational factor = row[lead[r]];
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= factor * echelon[r][c];
    }
    std::size_t pivot = row.size();
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) { pivot = c; break; }
    if (pivot == row.size()) return false;
    Rational inv = Rational(1) / row[pivot];
    for (std::size_t c = 0; c < row.size(); ++c) row[c] *= inv;
    echelon.push_back(std::move(row));
    lead.push_back(pivot);
    return true;
}

// Rows of the degree-k linear relations theta_j * (monomial of degree k-1)
// expressed over the face-monomial basis of degree k.
inline std::vector<QVector> linear_relation_rows(const SimplePolytope& p,
                                                 const CharacteristicMatrix& lam, int degree,
                                                 const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<QVector> rows;
    for (const auto& lower : face_monomials(p, degree - 1)) {
        for (int j = 0; j < p.dim_n; ++j) {
            QVector row(basis.size(), Rational(0));
            bool nonzero = false;
            for (int f = 0; f < p.num_facets; ++f) {
                if (lam.lambda(j, f) == 0) continue;
                std::vector<int> monomial = lower;
                monomial.insert(std::upper_bound(monomial.begin(), monomial.end(), f), f);
                auto it = index.find(monomial);
                if (it == index.end()) continue;  // killed by a face relation
                row[it->second] += Rational(lam.lambda(j, f));
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline Rational minor_det(const QMatrix& m, const std::vector<std::size_t>& idx) {
    const std::size_t k = idx.size();
    if (k == 1) return m(idx[0], idx[0]);
    if (k == 2)
        return m(idx[0], idx[0]) * m(idx[1], idx[1]) - m(idx[0], idx[1]) * m(idx[1], idx[0]);
    // k == 3
    Rational det = 0;
    det += m(idx[0], idx[0]) *
           (m(idx[1], idx[1]) * m(idx[2], idx[2]) - m(idx[1], idx[2]) * m(idx[2], idx[1]));
    det -= m(idx[0], idx[1]) *
           (m(idx[1], idx[0]) * m(idx[2], idx[2]) - m(idx[1], idx[2]) * m(idx[2], idx[0]));
    det += m(idx[0], idx[2]) *
           (m(idx[1], idx[0]) * m(idx[2], idx[1]) - m(idx[1], idx[1]) * m(idx[2], idx[0]));
    return det;
}

// PSD via nonnegativity of all principal minors (d <= 3 only).
inline bool psd_by_minors(const QMatrix& m) {
    const std::size_t d = m.rows();
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    for (std::size_t mask = 1; mask < (std::size_t(1) << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t(1) << i)) idx.push_back(i);
        if (minor_det(m, idx) < 0) return false;
    }
    return true;
}

}  // namespace detail

// Dimensions of H^0, H^2, ..., H^{2n} by explicit row reduction over all
// face monomials. Requires n <= 4 and m <= 10.
inline std::vector<long long> brute_ring_dims(const SimplePolytope& p,
                                              const CharacteristicMatrix& lam) {
    detail::check_caps(p);
    check_shape(p, lam);
    std::vector<long long> dims;
    for (int k = 0; k <= p.dim_n; ++k) {
        if (k == 0) {
            dims.push_back(1);
            continue;
        }
        auto basis = detail::face_monomials(p, k);
        std::vector<QVector> echelon;
        std::vector<std::size_t> lead;
        for (auto& row : detail::linear_relation_rows(p, lam, k, basis))
            detail::eliminate_into(echelon, lead, std::move(row));
        dims.push_back(static_cast<long long>(basis.size() - echelon.size()));
    }
    return dims;
}

// Does the degree-4 representative sum v_f^2 of p1 lie in the defining
// ideal (equivalently: does p1 vanish in H^4)?
inline bool brute_p1_vanishes(const SimplePolytope& p, const CharacteristicMatrix& lam) {
    detail::check_caps(p);
    check_shape(p, lam);
    auto basis = detail::face_monomials(p, 2);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    QVector p1_row(basis.size(), Rational(0));
    for (int f = 0; f < p.num_facets; ++f) {
        auto it = index.find(std::vector<int>{f, f});
        if (it != index.end()) p1_row[it->second] += 1;
    }
    std::vector<QVector> echelon;
    std::vector<std::size_t> lead;
    for (auto& row : detail::linear_relation_rows(p, lam, 2, basis))
        detail::eliminate_into(echelon, lead, std::move(row));
    return !detail::eliminate_into(echelon, lead, std::move(p1_row));
}

struct SosSearchResult {
    bool found = false;
    QMatrix example;          // a PSD slice point when found
    unsigned long long tested = 0;
};

// Exhaustive search for a PSD matrix on the affine slice
// {-gram + span of the quadratic ideal} with slice coordinates of
// denominator <= denominator_cap and absolute value <= range_bound.
// Requires dim H^2 <= 3; throws when the grid would be too large.
inline SosSearchResult brute_sos_search(const GradedRingPresentation& pres,
                                        const PontrjaginClass& p1, int denominator_cap,
                                        int range_bound = 4) {
    const std::size_t d = pres.h2_dim();
    if (d > 3) throw std::invalid_argument("oracle needs dim H^2 <= 3");
    if (denominator_cap < 1 || denominator_cap > 32)
        throw std::invalid_argument("denominator cap out of range (1..32)");

    std::vector<QMatrix> dirs = pres.quadratic_ideal_matrices();
    const QMatrix s0 = -p1.form.gram;

    // grid of reduced fractions p/q, q <= cap, |p/q| <= range_bound
    std::vector<Rational> values{Rational(0)};
    for (int q = 1; q <= denominator_cap; ++q)
        for (int p_num = 1; p_num <= range_bound * q; ++p_num) {
            if (boost::multiprecision::gcd(Integer(p_num), Integer(q)) != 1) continue;
            values.emplace_back(p_num, q);
            values.emplace_back(-p_num, q);
        }
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
        if (denominator(a) != denominator(b)) return denominator(a) < denominator(b);
        if (abs(numerator(a)) != abs(numerator(b))) return abs(numerator(a)) < abs(numerator(b));
        return a < b;
    });

    double grid_size = 1.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) grid_size *= static_cast<double>(values.size());
    if (grid_size > 2e6) throw std::invalid_argument("oracle grid cap exceeded");

    SosSearchResult result;
    std::vector<std::size_t> pick(dirs.size(), 0);
    while (true) {
        QMatrix s = s0;
        for (std::size_t k = 0; k < dirs.size(); ++k)
            if (values[pick[k]] != 0) s = s + dirs[k] * values[pick[k]];
        ++result.tested;
        if (detail::psd_by_minors(s)) {
            result.found = true;
            result.example = s;
            return result;
        }
        // odometer over the value grid
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == values.size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) break;
    }
    return result;
}

}  // namespace qtoric::oracle
