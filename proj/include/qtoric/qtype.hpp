#pragma once

// The two feasibility questions with exact verifiable answers:
//
//   (1) does a linear subspace of symmetric forms contain a positive
//       definite member (q-type test on the quadratic part of the
//       defining ideal), and
//   (2) is the first Pontrjagin class the negative of a sum of squares
//       of degree-two classes (PSD matrix on an affine slice).
//
// Both use cone duality for refutations: a subspace misses the open PD
// cone iff its orthogonal complement contains a nonzero PSD matrix, and
// an affine PSD slice is refuted by a PSD matrix orthogonal to the slice
// directions that pairs negatively with any slice point. Candidates come
// from a floating-point search; every returned object has been re-checked
// in exact rational arithmetic, and Undecided is returned when no
// candidate survives rationalization.

#include "qtoric/charalg.hpp"
#include "qtoric/ldlt.hpp"
#include "qtoric/matrix.hpp"
#include "qtoric/solver.hpp"
#include "qtoric/sym2.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

enum class Verdict { Yes, No, Undecided };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        default: return "UNDECIDED";
    }
}

struct PdCertificate {
    QMatrix member;  // rational PD matrix inside the span
};

struct DualWitness {
    QMatrix witness;  // nonzero rational PSD matrix orthogonal to the span / slice
};

struct SosCertificate {
    QMatrix psd_gram;             // S with Phi(S) = -p1 image
    std::vector<QVector> squares; // a_1..a_k with sum a a^T = S
};

struct SubspaceDecision {
    Verdict verdict = Verdict::Undecided;
    std::optional<PdCertificate> certificate;
    std::optional<DualWitness> witness;
    std::string note;
    // raw floating-point candidate kept when the outcome is Undecided
    std::vector<double> numeric_candidate;
};

struct SosDecision {
    Verdict verdict = Verdict::Undecided;
    std::optional<SosCertificate> certificate;
    std::optional<DualWitness> witness;
    std::string note;
    std::vector<double> numeric_candidate;
};

namespace detail {

inline void check_span_input(const std::vector<QMatrix>& span) {
    if (span.empty()) throw std::invalid_argument("empty span");
    const std::size_t d = span.front().rows();
    if (d == 0) throw std::invalid_argument("matrices must have dimension >= 1");
    for (const auto& m : span) {
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("span dimension mismatch");
        if (!m.is_symmetric()) throw std::invalid_argument("span matrices must be symmetric");
    }
}

// RREF basis of the span, in upper-triangle entry coordinates.
inline std::vector<QMatrix> span_basis(const std::vector<QMatrix>& span) {
    const std::size_t d = span.front().rows();
    QMatrix stacked(span.size(), sym2_dim(d));
    for (std::size_t r = 0; r < span.size(); ++r) {
        QVector entries = upper_entries(span[r]);
        for (std::size_t c = 0; c < entries.size(); ++c) stacked(r, c) = entries[c];
    }
    std::size_t rk = rref(stacked).size();
    std::vector<QMatrix> basis;
    for (std::size_t r = 0; r < rk; ++r) basis.push_back(matrix_from_upper_entries(d, stacked.row(r)));
    return basis;
}

// Basis of {Y symmetric : <Y, M>_F = 0 for all M in mats}.
inline std::vector<QMatrix> orthogonal_complement(std::size_t d, const std::vector<QMatrix>& mats) {
    QMatrix constraints(mats.size(), sym2_dim(d));
    for (std::size_t r = 0; r < mats.size(); ++r)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j)
                constraints(r, sym2_index(d, i, j)) =
                    (i == j) ? mats[r](i, i) : mats[r](i, j) * 2;
    std::vector<QMatrix> basis;
    for (const auto& v : kernel_basis(constraints)) basis.push_back(matrix_from_upper_entries(d, v));
    return basis;
}

inline QMatrix combine(const std::vector<QMatrix>& mats, const QVector& coeffs) {
    QMatrix out(mats.front().rows(), mats.front().cols());
    for (std::size_t k = 0; k < mats.size(); ++k)
        if (coeffs[k] != 0) out = out + mats[k] * coeffs[k];
    return out;
}

inline std::vector<QMatrix> shortcut_candidates(const std::vector<QMatrix>& basis) {
    std::vector<QMatrix> out;
    QMatrix sum(basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) {
        out.push_back(b);
        out.push_back(-b);
        sum = sum + b;
    }
    out.push_back(sum);
    out.push_back(-sum);
    return out;
}

}  // namespace detail

// --- exact verification -----------------------------------------------

// Membership in span(mats) decided by exact linear solve.
inline bool in_span(const std::vector<QMatrix>& span, const QMatrix& x) {
    const std::size_t d = x.rows();
    QMatrix system(sym2_dim(d), span.size());
    for (std::size_t k = 0; k < span.size(); ++k) {
        QVector col = upper_entries(span[k]);
        for (std::size_t r = 0; r < col.size(); ++r) system(r, k) = col[r];
    }
    return solve(system, upper_entries(x)).has_value();
}

inline bool verify_pd_certificate(const std::vector<QMatrix>& span, const PdCertificate& cert) {
    return cert.member.is_symmetric() && in_span(span, cert.member) &&
           is_positive_definite(cert.member);
}

inline bool verify_subspace_refutation(const std::vector<QMatrix>& span, const DualWitness& w) {
    if (!w.witness.is_symmetric() || w.witness.is_zero()) return false;
    for (const auto& m : span)
        if (trace_inner(w.witness, m) != 0) return false;
    return is_positive_semidefinite(w.witness);
}

inline bool verify_sos_certificate(const GradedRingPresentation& pres, const QVector& p1_image,
                                   const SosCertificate& cert) {
    const std::size_t d = pres.h2_dim();
    if (cert.psd_gram.rows() != d || !cert.psd_gram.is_symmetric()) return false;
    if (!is_positive_semidefinite(cert.psd_gram)) return false;
    QVector image = pres.sym2_to_h4 * form_coords(cert.psd_gram);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != -p1_image[i]) return false;
    QMatrix sum(d, d);
    for (const auto& a : cert.squares) {
        if (a.size() != d) return false;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sum(i, j) += a[i] * a[j];
    }
    return sum == cert.psd_gram;
}

inline bool verify_sos_refutation(const GradedRingPresentation& pres, const QMatrix& p1_gram,
                                  const DualWitness& w) {
    const std::size_t d = pres.h2_dim();
    if (w.witness.rows() != d || !w.witness.is_symmetric() || w.witness.is_zero()) return false;
    for (const auto& n : pres.quadratic_ideal_matrices())
        if (trace_inner(w.witness, n) != 0) return false;
    if (!is_positive_semidefinite(w.witness)) return false;
    return trace_inner(w.witness, -p1_gram) < 0;
}

// --- searches (numeric candidates, exact acceptance) -------------------

// One attempt at a PD member of span(basis); attempt > 0 perturbs the start.
inline std::optional<PdCertificate> search_pd_member(const std::vector<QMatrix>& basis,
                                                     const SolverConfig& cfg, int attempt = 0,
                                                     std::vector<double>* numeric_out = nullptr) {
    if (basis.empty()) return std::nullopt;
    const std::size_t d = basis.front().rows();
    if (attempt == 0) {
        for (const auto& cand : detail::shortcut_candidates(basis))
            if (is_positive_definite(cand)) return PdCertificate{primitive_scale(cand)};
        QMatrix eye = QMatrix::identity(d);
        if (in_span(basis, eye)) return PdCertificate{eye};
    }
    std::vector<DMatrix> dirs;
    for (const auto& b : basis) dirs.push_back(detail::to_double_matrix(b));
    std::mt19937_64 rng(cfg.seed + 0x517cc1b7u * static_cast<std::uint64_t>(attempt));
    auto x = detail::affine_psd_point(DMatrix(d, d), dirs, 1.0, cfg, nullptr,
                                      attempt > 0 ? &rng : nullptr, 0.25 * attempt);
    if (!x) return std::nullopt;
    for (const Integer& cap : detail::cap_ladder(cfg.denominator_cap)) {
        QMatrix candidate = detail::combine(basis, detail::rationalize_vector(*x, cap));
        if (is_positive_definite(candidate)) return PdCertificate{primitive_scale(candidate)};
    }
    if (numeric_out) *numeric_out = *x;
    return std::nullopt;
}

// One attempt at a nonzero PSD matrix orthogonal to span(basis).
inline std::optional<DualWitness> search_psd_witness(const std::vector<QMatrix>& basis,
                                                     std::size_t d, const SolverConfig& cfg,
                                                     int attempt = 0,
                                                     std::vector<double>* numeric_out = nullptr) {
    std::vector<QMatrix> complement = detail::orthogonal_complement(d, basis);
    if (complement.empty()) return std::nullopt;
    if (attempt == 0) {
        for (const auto& cand : detail::shortcut_candidates(complement))
            if (!cand.is_zero() && is_positive_semidefinite(cand))
                return DualWitness{primitive_scale(cand)};
    }

    // Normalize trace to 1 and search the remaining affine directions.
    std::size_t anchor = complement.size();
    for (std::size_t j = 0; j < complement.size(); ++j)
        if (trace(complement[j]) != 0) { anchor = j; break; }
    if (anchor == complement.size()) return std::nullopt;  // all candidates traceless
    QMatrix s0 = complement[anchor] * (Rational(1) / trace(complement[anchor]));
    std::vector<QMatrix> dirs_rat;
    for (std::size_t j = 0; j < complement.size(); ++j) {
        if (j == anchor) continue;
        dirs_rat.push_back(complement[j] - s0 * trace(complement[j]));
    }

    std::vector<DMatrix> dirs;
    for (const auto& m : dirs_rat) dirs.push_back(detail::to_double_matrix(m));
    DMatrix s0d = detail::to_double_matrix(s0);
    std::mt19937_64 rng(cfg.seed + 0x2545f491u * static_cast<std::uint64_t>(attempt + 1));
    auto x = detail::affine_psd_point(s0d, dirs, 0.0, cfg, nullptr,
                                      attempt > 0 ? &rng : nullptr, 0.25 * attempt);
    if (!x) return std::nullopt;
    // Push toward the relative interior so rationalization survives.
    for (double margin : {0.5 / d, 0.1 / d, 0.02 / d}) {
        auto boosted = detail::affine_psd_point(s0d, dirs, margin, cfg, &*x, nullptr, 0.0);
        if (boosted) { x = boosted; break; }
    }
    for (const Integer& cap : detail::cap_ladder(cfg.denominator_cap)) {
        QMatrix candidate = s0;
        QVector coeffs = detail::rationalize_vector(*x, cap);
        if (!dirs_rat.empty()) candidate = s0 + detail::combine(dirs_rat, coeffs);
        if (!candidate.is_zero() && is_positive_semidefinite(candidate))
            return DualWitness{primitive_scale(candidate)};
    }
    if (numeric_out) *numeric_out = *x;
    return std::nullopt;
}

// Decide whether span(L) meets the open PD cone. Exactly one outcome:
// a PD member, a PSD dual witness, or Undecided.
inline SubspaceDecision pd_in_subspace(const std::vector<QMatrix>& span,
                                       const SolverConfig& cfg = {}) {
    detail::check_span_input(span);
    std::vector<QMatrix> basis = detail::span_basis(span);
    if (basis.empty()) throw std::invalid_argument("empty span");
    const std::size_t d = span.front().rows();

    SubspaceDecision decision;
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        if (auto cert = search_pd_member(basis, cfg, attempt, &decision.numeric_candidate)) {
            decision.verdict = Verdict::Yes;
            decision.certificate = std::move(cert);
            return decision;
        }
        if (auto witness = search_psd_witness(basis, d, cfg, attempt, &decision.numeric_candidate)) {
            decision.verdict = Verdict::No;
            decision.witness = std::move(witness);
            return decision;
        }
    }
    decision.verdict = Verdict::Undecided;
    decision.note = "numeric search converged but no candidate passed exact verification "
                    "within the denominator cap " + cfg.denominator_cap.str();
    return decision;
}

// q-type: the quadratic part of the defining ideal must contain a definite
// form (positive definite without loss of generality).
inline SubspaceDecision is_q_type(const GradedRingPresentation& pres, const SolverConfig& cfg = {}) {
    const std::size_t d = pres.h2_dim();
    std::vector<QMatrix> ideal = pres.quadratic_ideal_matrices();
    if (ideal.empty()) {
        // Zero ideal part: no quadratic form at all, and the identity is a witness.
        SubspaceDecision decision;
        decision.verdict = Verdict::No;
        decision.witness = DualWitness{QMatrix::identity(d)};
        decision.note = "quadratic part of the ideal is zero";
        return decision;
    }
    return pd_in_subspace(ideal, cfg);
}

// Negative-sum-of-squares test for p1: find PSD S with Phi(S) = -p1 image,
// or a Farkas witness that none exists.
inline SosDecision p1_negative_sos(const GradedRingPresentation& pres, const PontrjaginClass& p1,
                                   const SolverConfig& cfg = {}) {
    const std::size_t d = pres.h2_dim();
    SosDecision decision;

    if (is_zero(p1.h4_image)) {
        decision.verdict = Verdict::Yes;
        decision.certificate = SosCertificate{QMatrix(d, d), {}};
        return decision;
    }

    std::vector<QMatrix> slice_dirs = pres.quadratic_ideal_matrices();
    const QMatrix minus_gram = -p1.form.gram;

    // complement of the slice directions, for the dual side
    std::vector<QMatrix> complement = detail::orthogonal_complement(d, slice_dirs);

    std::vector<DMatrix> dirs;
    for (const auto& m : slice_dirs) dirs.push_back(detail::to_double_matrix(m));
    DMatrix s0d = detail::to_double_matrix(minus_gram);

    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        // primal: PSD point on the affine slice
        std::mt19937_64 rng(cfg.seed + 0x6a09e667u * static_cast<std::uint64_t>(attempt));
        auto x = detail::affine_psd_point(s0d, dirs, 0.0, cfg, nullptr,
                                          attempt > 0 ? &rng : nullptr, 0.25 * attempt);
        if (x) {
            for (double margin : {0.5, 0.1, 0.02}) {
                auto boosted = detail::affine_psd_point(s0d, dirs, margin, cfg, &*x, nullptr, 0.0);
                if (boosted) { x = boosted; break; }
            }
            for (const Integer& cap : detail::cap_ladder(cfg.denominator_cap)) {
                QMatrix s = minus_gram;
                if (!slice_dirs.empty())
                    s = s + detail::combine(slice_dirs, detail::rationalize_vector(*x, cap));
                if (!is_positive_semidefinite(s)) continue;
                SosCertificate cert{s, psd_square_roots(s)};
                if (!verify_sos_certificate(pres, p1.h4_image, cert))
                    throw std::logic_error("square decomposition failed to reproduce its matrix");
                decision.verdict = Verdict::Yes;
                decision.certificate = std::move(cert);
                return decision;
            }
            decision.numeric_candidate = *x;
        }

        // dual: PSD witness orthogonal to the slice with <Y, -G> < 0
        if (!complement.empty()) {
            if (attempt == 0) {
                for (const auto& cand : detail::shortcut_candidates(complement)) {
                    DualWitness w{cand};
                    if (!cand.is_zero() && trace_inner(cand, minus_gram) < 0 &&
                        is_positive_semidefinite(cand) &&
                        verify_sos_refutation(pres, p1.form.gram, w)) {
                        decision.verdict = Verdict::No;
                        decision.witness = DualWitness{primitive_scale(cand)};
                        return decision;
                    }
                }
            }
            // normalize <Y, G> = 1, i.e. <Y, -G> = -1
            std::size_t anchor = complement.size();
            for (std::size_t j = 0; j < complement.size(); ++j)
                if (trace_inner(complement[j], p1.form.gram) != 0) { anchor = j; break; }
            if (anchor != complement.size()) {
                QMatrix y0 = complement[anchor] *
                             (Rational(1) / trace_inner(complement[anchor], p1.form.gram));
                std::vector<QMatrix> dual_dirs;
                for (std::size_t j = 0; j < complement.size(); ++j) {
                    if (j == anchor) continue;
                    dual_dirs.push_back(complement[j] -
                                        y0 * trace_inner(complement[j], p1.form.gram));
                }
                std::vector<DMatrix> ddirs;
                for (const auto& m : dual_dirs) ddirs.push_back(detail::to_double_matrix(m));
                std::mt19937_64 drng(cfg.seed + 0xbb67ae85u * static_cast<std::uint64_t>(attempt + 1));
                auto y = detail::affine_psd_point(detail::to_double_matrix(y0), ddirs, 0.0, cfg,
                                                  nullptr, attempt > 0 ? &drng : nullptr,
                                                  0.25 * attempt);
                if (y) {
                    for (double margin : {0.5 / d, 0.1 / d, 0.02 / d}) {
                        auto boosted = detail::affine_psd_point(detail::to_double_matrix(y0), ddirs,
                                                                margin, cfg, &*y, nullptr, 0.0);
                        if (boosted) { y = boosted; break; }
                    }
                    for (const Integer& cap : detail::cap_ladder(cfg.denominator_cap)) {
                        QMatrix w = y0;
                        QVector coeffs = detail::rationalize_vector(*y, cap);
                        if (!dual_dirs.empty()) w = y0 + detail::combine(dual_dirs, coeffs);
                        DualWitness candidate{primitive_scale(w)};
                        if (verify_sos_refutation(pres, p1.form.gram, candidate)) {
                            decision.verdict = Verdict::No;
                            decision.witness = std::move(candidate);
                            return decision;
                        }
                    }
                    decision.numeric_candidate = *y;
                }
            }
        }
    }

    decision.verdict = Verdict::Undecided;
    decision.note = "no exact certificate or witness found within denominator cap " +
                    cfg.denominator_cap.str();
    return decision;
}

struct LemmaConsistency {
    bool applicable = false;  // both verdicts decided
    bool consistent = false;
};

// Negative-SOS YES must imply q-type YES; a violation is an internal error.
inline LemmaConsistency lemma_consistency(const SubspaceDecision& qtype, const SosDecision& sos) {
    LemmaConsistency report;
    if (qtype.verdict == Verdict::Undecided || sos.verdict == Verdict::Undecided) return report;
    report.applicable = true;
    if (sos.verdict == Verdict::Yes && qtype.verdict == Verdict::No)
        throw std::logic_error("negative-SOS certificate without q-type: implication violated");
    report.consistent = true;
    return report;
}

}  // namespace qtoric
