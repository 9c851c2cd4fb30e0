#pragma once

// Numeric feasibility search behind the exact certificate layer. The
// pattern is always: find a floating-point point of an affine slice of
// the PSD cone by alternating projections, round its coordinates to
// rationals with a growing denominator ladder, and let the caller accept
// only exactly re-verified results. Nothing in this header is trusted;
// soundness lives entirely in the exact checks on top.

#include "qtoric/matrix.hpp"
#include "qtoric/rational.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qtoric {

struct SolverConfig {
    double tolerance = 1e-9;        // numeric feasibility tolerance
    int max_iterations = 4000;      // projection iterations per attempt
    int max_retries = 5;            // perturbed restarts before Undecided
    Integer denominator_cap = 1000000;
    std::uint64_t seed = 0x9e3779b9;
};

namespace detail {

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
inline void jacobi_eigen(DMatrix a, std::vector<double>& values, DMatrix& vectors) {
    const std::size_t n = a.rows();
    vectors = DMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-26 * (1.0 + n)) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = vectors(k, p), vkq = vectors(k, q);
                    vectors(k, p) = c * vkp - s * vkq;
                    vectors(k, q) = s * vkp + c * vkq;
                }
            }
    }
    values.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
}

inline double min_eigenvalue(const DMatrix& s) {
    std::vector<double> values;
    DMatrix vectors;
    jacobi_eigen(s, values, vectors);
    double lo = values.empty() ? 0.0 : values[0];
    for (double v : values) lo = std::min(lo, v);
    return lo;
}

// Projection onto {X symmetric : X >= floor * I} by eigenvalue clipping.
inline DMatrix clip_to_cone(const DMatrix& s, double floor) {
    const std::size_t n = s.rows();
    std::vector<double> values;
    DMatrix vectors;
    jacobi_eigen(s, values, vectors);
    DMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += vectors(i, k) * std::max(values[k], floor) * vectors(j, k);
            out(i, j) = sum;
        }
    // re-symmetrize against rounding drift
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double avg = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = out(j, i) = avg;
        }
    return out;
}

inline double frobenius_inner(const DMatrix& a, const DMatrix& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * b(i, j);
    return sum;
}

inline double frobenius_norm(const DMatrix& a) { return std::sqrt(frobenius_inner(a, a)); }

// Gaussian solve with partial pivoting; returns false when singular.
inline bool solve_dense(DMatrix a, std::vector<double> b, std::vector<double>& x) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        if (std::abs(a(pivot, k)) < 1e-14) return false;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (std::size_t j = i + 1; j < n; ++j) sum -= a(i, j) * x[j];
        x[i] = sum / a(i, i);
    }
    return true;
}

inline DMatrix to_double_matrix(const QMatrix& m) {
    DMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

// Alternating projections between the affine slice {s0 + sum x_k dirs_k}
// and the cone {X >= margin*I}. Returns slice coordinates on success.
inline std::optional<std::vector<double>> affine_psd_point(
    const DMatrix& s0, const std::vector<DMatrix>& dirs, double margin,
    const SolverConfig& cfg, const std::vector<double>* warm_start,
    std::mt19937_64* perturb_rng, double perturb_scale) {
    const std::size_t n = s0.rows();
    const std::size_t r = dirs.size();
    const double scale = 1.0 + frobenius_norm(s0);

    if (r == 0) {
        if (min_eigenvalue(s0) >= margin - cfg.tolerance * scale) return std::vector<double>{};
        return std::nullopt;
    }

    DMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram(i, j) = frobenius_inner(dirs[i], dirs[j]);

    auto project_coeffs = [&](const DMatrix& target, std::vector<double>& x) {
        std::vector<double> rhs(r, 0.0);
        for (std::size_t k = 0; k < r; ++k) {
            double inner = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    inner += (target(i, j) - s0(i, j)) * dirs[k](i, j);
            rhs[k] = inner;
        }
        return solve_dense(gram, rhs, x);
    };

    std::vector<double> x(r, 0.0);
    if (warm_start && warm_start->size() == r) x = *warm_start;
    else if (!project_coeffs(clip_to_cone(s0, margin), x)) return std::nullopt;
    if (perturb_rng) {
        std::uniform_real_distribution<double> dist(-perturb_scale, perturb_scale);
        for (auto& v : x) v += dist(*perturb_rng) * (1.0 + std::abs(v));
    }

    double best_resid = std::numeric_limits<double>::infinity();
    int best_iter = 0;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        DMatrix s = s0;
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s(i, j) += x[k] * dirs[k](i, j);
        DMatrix p = clip_to_cone(s, margin);
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double dlt = s(i, j) - p(i, j);
                resid += dlt * dlt;
            }
        resid = std::sqrt(resid);
        if (resid < 1e-11 * scale) return x;
        if (resid < best_resid * 0.999) {
            best_resid = resid;
            best_iter = iter;
        } else if (iter - best_iter > 300 && best_resid > cfg.tolerance * scale) {
            return std::nullopt;  // stalled at a positive gap: slice looks infeasible
        }
        if (!project_coeffs(p, x)) return std::nullopt;
    }
    return std::nullopt;
}

// Coordinate rationalization with a growing cap ladder; emits candidate
// caps 1, 2, 4, ... up to the configured maximum.
inline std::vector<Integer> cap_ladder(const Integer& cap) {
    std::vector<Integer> caps;
    for (Integer c = 1; c < cap; c *= 4) caps.push_back(c);
    caps.push_back(cap);
    return caps;
}

inline QVector rationalize_vector(const std::vector<double>& x, const Integer& cap) {
    QVector out;
    out.reserve(x.size());
    for (double v : x) out.push_back(rationalize(v, cap));
    return out;
}

}  // namespace detail
}  // namespace qtoric
