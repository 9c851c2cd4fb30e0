#pragma once

// Exact definiteness tests. A symmetric rational matrix is classified by a
// pivoted LDL^T sweep: positive pivots with full elimination certify PSD,
// and a PSD matrix of full rank is PD. All pivots are kept so callers can
// re-verify or serialize them.

#include "qtoric/matrix.hpp"
#include "qtoric/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtoric {

struct PsdDecomposition {
    bool is_psd = false;
    // When is_psd: perm/columns/pivots satisfy  M = sum_k pivots[k] * c_k c_k^T
    // with c_k the stored column vectors (already un-permuted).
    std::vector<Rational> pivots;
    std::vector<QVector> columns;
    std::size_t rank = 0;
    // When !is_psd: a diagnostic pivot that failed (negative diagonal entry
    // or a zero diagonal with nonzero residual row).
    std::string failure;
};

// Diagonal-pivoted exact LDL^T restricted to PSD detection. Invariant used:
// a PSD matrix with a zero diagonal entry has the whole row zero, so a zero
// diagonal with nonzero residual row disproves PSD immediately.
inline PsdDecomposition psd_decompose(QMatrix m) {
    if (!m.is_symmetric()) throw std::invalid_argument("psd_decompose needs a symmetric matrix");
    const std::size_t n = m.rows();
    PsdDecomposition out;
    std::vector<std::size_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

    std::vector<bool> eliminated(n, false);
    while (true) {
        // pick any index with a positive diagonal entry
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (eliminated[i]) continue;
            if (m(i, i) < 0) {
                out.failure = "negative diagonal entry";
                return out;
            }
            if (pivot == n && m(i, i) > 0) pivot = i;
        }
        if (pivot == n) {
            // all remaining diagonal entries are zero: PSD iff the residual is zero
            for (std::size_t i = 0; i < n; ++i) {
                if (eliminated[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (eliminated[j]) continue;
                    if (m(i, j) != 0) {
                        out.failure = "zero diagonal with nonzero row";
                        return out;
                    }
                }
            }
            out.is_psd = true;
            out.rank = out.pivots.size();
            return out;
        }
        Rational d = m(pivot, pivot);
        QVector col(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (eliminated[i]) continue;
            col[i] = m(pivot, i) / d;
        }
        out.pivots.push_back(d);
        out.columns.push_back(col);
        for (std::size_t i = 0; i < n; ++i) {
            if (eliminated[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (eliminated[j]) continue;
                m(i, j) -= d * col[i] * col[j];
            }
        }
        eliminated[pivot] = true;
    }
}

inline bool is_positive_semidefinite(const QMatrix& m) { return psd_decompose(m).is_psd; }

inline bool is_positive_definite(const QMatrix& m) {
    PsdDecomposition d = psd_decompose(m);
    return d.is_psd && d.rank == m.rows();
}

// Rational vectors a_1..a_k with sum a_i a_i^T == m (requires m PSD).
// Each positive pivot d = p/q is split into integer squares of p*q, giving
// at most four vectors per pivot.
inline std::vector<QVector> psd_square_roots(const QMatrix& m) {
    PsdDecomposition dec = psd_decompose(m);
    if (!dec.is_psd) throw std::domain_error("psd_square_roots of a non-PSD matrix");
    std::vector<QVector> squares;
    for (std::size_t k = 0; k < dec.pivots.size(); ++k) {
        for (const Rational& r : rational_square_roots(dec.pivots[k])) {
            QVector a(m.rows(), Rational(0));
            for (std::size_t i = 0; i < m.rows(); ++i) a[i] = r * dec.columns[k][i];
            squares.push_back(std::move(a));
        }
    }
    return squares;
}

}  // namespace qtoric
