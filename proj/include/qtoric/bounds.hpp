#pragma once

// Symmetry-degree bounds and classification consequences. Everything here
// is integer arithmetic on invariants that the other modules computed:
// the torus bound n <= T_t <= m-n for q-type manifolds, the semisimple
// bound N_t^ss <= n+m, the table of compact simple Lie algebras behind
// the "dimension 3n forces SU(2)^n" argument, and the Euler-characteristic
// count chi = 2 * |W(G)| for cohomogeneity-one actions.

#include "qtoric/charalg.hpp"
#include "qtoric/polytope.hpp"
#include "qtoric/qtype.hpp"
#include "qtoric/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

struct SimpleLieEntry {
    std::string label;  // A1, B2, ..., G2, F4, E6, E7, E8
    int rank = 0;
    long long dim = 0;
    Integer weyl_order = 0;

    bool operator==(const SimpleLieEntry&) const = default;
};

// Classification of compact simple Lie algebras up to the given rank.
// B starts at rank 2, C at rank 3 and D at rank 4 so every isomorphism
// class appears exactly once.
inline std::vector<SimpleLieEntry> simple_lie_entries(int max_rank) {
    std::vector<SimpleLieEntry> out;
    auto factorial = [](int k) {
        Integer f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    auto pow2 = [](int k) {
        Integer p = 1;
        for (int i = 0; i < k; ++i) p *= 2;
        return p;
    };
    for (int r = 1; r <= max_rank; ++r)
        out.push_back({"A" + std::to_string(r), r, static_cast<long long>(r) * (r + 2),
                       factorial(r + 1)});
    for (int r = 2; r <= max_rank; ++r)
        out.push_back({"B" + std::to_string(r), r, static_cast<long long>(r) * (2 * r + 1),
                       pow2(r) * factorial(r)});
    for (int r = 3; r <= max_rank; ++r)
        out.push_back({"C" + std::to_string(r), r, static_cast<long long>(r) * (2 * r + 1),
                       pow2(r) * factorial(r)});
    for (int r = 4; r <= max_rank; ++r)
        out.push_back({"D" + std::to_string(r), r, static_cast<long long>(r) * (2 * r - 1),
                       pow2(r - 1) * factorial(r)});
    if (max_rank >= 2) out.push_back({"G2", 2, 14, Integer(12)});
    if (max_rank >= 4) out.push_back({"F4", 4, 52, Integer(1152)});
    if (max_rank >= 6) out.push_back({"E6", 6, 78, Integer(51840)});
    if (max_rank >= 7) out.push_back({"E7", 7, 133, Integer(2903040)});
    if (max_rank >= 8) out.push_back({"E8", 8, 248, Integer(696729600)});
    return out;
}

using LieProduct = std::vector<SimpleLieEntry>;  // multiset of simple factors

inline long long total_dim(const LieProduct& p) {
    long long s = 0;
    for (const auto& e : p) s += e.dim;
    return s;
}

inline int total_rank(const LieProduct& p) {
    int s = 0;
    for (const auto& e : p) s += e.rank;
    return s;
}

inline std::string product_label(const LieProduct& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += " x ";
        s += p[i].label;
    }
    return s;
}

// All nonempty multisets of simple factors within both budgets.
inline std::vector<LieProduct> semisimple_candidates(long long dim_budget, int rank_budget) {
    if (dim_budget < 0 || rank_budget < 0) throw std::invalid_argument("budgets must be >= 0");
    std::vector<SimpleLieEntry> entries;
    for (const auto& e : simple_lie_entries(rank_budget))
        if (e.dim <= dim_budget) entries.push_back(e);
    std::vector<LieProduct> out;
    LieProduct current;
    auto recurse = [&](auto&& self, std::size_t from, long long dim_left, int rank_left) -> void {
        for (std::size_t i = from; i < entries.size(); ++i) {
            if (entries[i].dim > dim_left || entries[i].rank > rank_left) continue;
            current.push_back(entries[i]);
            out.push_back(current);
            if (out.size() > 200000) throw std::runtime_error("candidate enumeration too large");
            self(self, i, dim_left - entries[i].dim, rank_left - entries[i].rank);
            current.pop_back();
        }
    };
    recurse(recurse, 0, dim_budget, rank_budget);
    return out;
}

// Candidates exhausting both budgets: with dim_budget = 3 * rank_budget this
// is exactly the power of A1, since every simple factor has dim >= 3 rank
// with equality only for A1.
inline std::vector<LieProduct> attaining_candidates(long long dim_budget, int rank_budget) {
    std::vector<LieProduct> out;
    for (auto& c : semisimple_candidates(dim_budget, rank_budget))
        if (total_dim(c) == dim_budget && total_rank(c) == rank_budget) out.push_back(std::move(c));
    return out;
}

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SymmetryReport {
    int n = 0;
    int m = 0;
    int edim = 0;        // m - n
    int t_lower = 0;     // n: the quasitoric torus itself
    int t_upper = 0;     // m - n, valid when the manifold is of q-type
    int nss_upper = 0;   // n + m
    bool facet_bound_ok = false;  // m >= 2n
    long long chi = 0;
    Verdict qtype_verdict = Verdict::Undecided;
    bool contradiction = false;  // q-type YES with m < 2n cannot happen
    std::vector<NamedCheck> verdicts;
};

inline SymmetryReport symmetry_report(const SimplePolytope& p, const CharacteristicMatrix& lam,
                                      Verdict qtype_verdict) {
    check_shape(p, lam);
    SymmetryReport r;
    r.n = p.dim_n;
    r.m = p.num_facets;
    r.edim = edim(p);
    r.t_lower = r.n;
    r.t_upper = r.edim;
    r.nss_upper = r.n + r.m;
    r.facet_bound_ok = (r.m >= 2 * r.n);
    r.chi = euler_characteristic(p);
    r.qtype_verdict = qtype_verdict;
    r.contradiction = (qtype_verdict == Verdict::Yes && !r.facet_bound_ok);

    r.verdicts.push_back({"facet_bound", r.facet_bound_ok,
                          "m = " + std::to_string(r.m) + (r.facet_bound_ok ? " >= " : " < ") +
                              "2n = " + std::to_string(2 * r.n)});
    if (qtype_verdict == Verdict::Yes) {
        r.verdicts.push_back({"torus_range", r.t_lower <= r.t_upper,
                              "n = " + std::to_string(r.t_lower) +
                                  " <= T_t <= edim = " + std::to_string(r.t_upper)});
        r.verdicts.push_back({"qtype_facet_consistency", !r.contradiction,
                              r.contradiction ? "q-type holds although m < 2n"
                                              : "q-type verdict compatible with facet bound"});
    } else if (qtype_verdict == Verdict::No && !r.facet_bound_ok) {
        r.verdicts.push_back({"qtype_facet_consistency", true,
                              "m < 2n already excludes q-type; solver agrees"});
    }
    return r;
}

struct HomogeneousCheck {
    enum class Status { NotApplicable, Consistent, Excluded };
    Status status = Status::NotApplicable;
    std::vector<std::string> failed_conditions;
};

// When p1 is a negative sum of squares, a homogeneous M must look like a
// product of 2-spheres: m = 2n, chi = 2^n, binomial Betti numbers and
// vanishing p1. These necessary conditions are all that is checked.
inline HomogeneousCheck homogeneous_check(const SimplePolytope& p, const CharacteristicMatrix& lam,
                                          Verdict sos_verdict) {
    HomogeneousCheck out;
    if (sos_verdict != Verdict::Yes) return out;

    const int n = p.dim_n;
    if (p.num_facets != 2 * n)
        out.failed_conditions.push_back("facet count " + std::to_string(p.num_facets) +
                                        " differs from 2n = " + std::to_string(2 * n));
    long long chi = euler_characteristic(p);
    long long expected_chi = 1ll << n;
    if (chi != expected_chi)
        out.failed_conditions.push_back("Euler characteristic " + std::to_string(chi) +
                                        " differs from 2^n = " + std::to_string(expected_chi));
    HVector h = h_vector(p);
    for (int i = 0; i <= n; ++i)
        if (Integer(h.at(i)) != binomial(n, i)) {
            out.failed_conditions.push_back("Betti numbers are not binomial");
            break;
        }
    PontrjaginClass p1 = pontrjagin_p1(p, lam);
    if (!is_zero(p1.h4_image))
        out.failed_conditions.push_back("p1 does not vanish in H^4");

    out.status = out.failed_conditions.empty() ? HomogeneousCheck::Status::Consistent
                                               : HomogeneousCheck::Status::Excluded;
    return out;
}

struct CohomOnePredictions {
    int k = 0;  // number of SU(2) factors
    bool with_circle = false;
    long long euler_characteristic = 0;  // 2^{k+1}
    int manifold_half_dim = 0;           // n = k+1
    int manifold_dim = 0;                // 2k+2
    int singular_orbit_h2_dim = 0;       // k
    std::vector<Integer> orbit_poincare; // coefficients of (1+t^2)^k
    Integer weyl_order = 0;              // 2^k
    int torus_bound = 0;                 // k+1
    std::string group;
    std::string structure;
    std::string center_note;
};

// Predictions for a cohomogeneity-one action of SU(2)^k (optionally times
// a circle): the singular orbits are full flag manifolds of the group, so
// chi(M) doubles the Weyl order, and the total space fibers as an
// S^2-bundle over a product of k two-spheres.
inline CohomOnePredictions cohomogeneity_one_predictions(int k, bool with_circle) {
    if (k < 1) throw std::invalid_argument("at least one SU(2) factor is required");
    if (k > 62) throw std::invalid_argument("factor count out of supported range");
    CohomOnePredictions out;
    out.k = k;
    out.with_circle = with_circle;
    out.euler_characteristic = 2ll << k;  // 2 * 2^k
    out.manifold_half_dim = k + 1;
    out.manifold_dim = 2 * k + 2;
    out.singular_orbit_h2_dim = k;
    for (int i = 0; i <= k; ++i) out.orbit_poincare.push_back(binomial(k, i));
    out.weyl_order = Integer(1) << k;
    out.torus_bound = k + 1;
    out.group = "SU(2)^" + std::to_string(k) + (with_circle ? " x S^1" : "");
    out.structure = "S^2-bundle over (S^2)^" + std::to_string(k);
    out.center_note = "center of the acting group has dimension at most one";
    return out;
}

// All factor counts k compatible with the invariants of (P, lambda):
// chi = 2^{k+1}, n = k+1 and dim H^2 = k+1.
inline std::vector<int> match_cohomogeneity_one(const SimplePolytope& p,
                                                const CharacteristicMatrix& lam) {
    check_shape(p, lam);
    long long chi = euler_characteristic(p);
    std::vector<int> out;
    for (int k = 1; k <= p.dim_n; ++k) {
        if (p.dim_n != k + 1) continue;
        if (edim(p) != k + 1) continue;
        if (chi != (2ll << k)) continue;
        out.push_back(k);
    }
    return out;
}

}  // namespace qtoric
