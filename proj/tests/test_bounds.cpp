#include "qtoric/bounds.hpp"
#include "qtoric/catalogue.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace qtoric;

namespace {

std::vector<std::string> labels(const std::vector<LieProduct>& products) {
    std::vector<std::string> out;
    for (const auto& p : products) out.push_back(product_label(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("simple Lie table invariants", "[bounds]") {
    auto table = simple_lie_entries(8);
    int equality_count = 0;
    for (const auto& e : table) {
        INFO(e.label);
        CHECK(e.dim >= 3ll * e.rank);
        if (e.dim == 3ll * e.rank) {
            ++equality_count;
            CHECK(e.label == "A1");
        }
    }
    CHECK(equality_count == 1);
}

TEST_CASE("simple Lie table spot values", "[bounds]") {
    auto table = simple_lie_entries(8);
    auto find = [&](const std::string& label) {
        for (const auto& e : table)
            if (e.label == label) return e;
        FAIL("missing entry " << label);
        return SimpleLieEntry{};
    };
    CHECK(find("A1").dim == 3);
    CHECK(find("A1").weyl_order == 2);
    CHECK(find("A2").dim == 8);
    CHECK(find("A2").weyl_order == 6);
    CHECK(find("B2").dim == 10);
    CHECK(find("B2").weyl_order == 8);
    CHECK(find("G2").dim == 14);
    CHECK(find("G2").weyl_order == 12);
    CHECK(find("D4").dim == 28);
    CHECK(find("D4").weyl_order == 192);
    CHECK(find("F4").dim == 52);
    CHECK(find("E8").dim == 248);
    CHECK(find("E8").weyl_order == Integer(696729600));
}

TEST_CASE("semisimple candidates within budgets", "[bounds]") {
    CHECK(labels(semisimple_candidates(3, 1)) == std::vector<std::string>{"A1"});
    CHECK(labels(semisimple_candidates(6, 2)) ==
          std::vector<std::string>{"A1", "A1 x A1"});
    CHECK(labels(semisimple_candidates(8, 2)) ==
          std::vector<std::string>{"A1", "A1 x A1", "A2"});
}

TEST_CASE("budget-exhausting candidates collapse to powers of A1", "[bounds]") {
    for (int r = 1; r <= 6; ++r) {
        auto attained = attaining_candidates(3ll * r, r);
        INFO("rank budget " << r);
        REQUIRE(attained.size() == 1);
        CHECK(static_cast<int>(attained[0].size()) == r);
        for (const auto& factor : attained[0]) CHECK(factor.label == "A1");
    }
}

TEST_CASE("symmetry report for the 3-cube", "[bounds]") {
    InputBundle b = standard_sphere_product(3);
    SymmetryReport r = symmetry_report(b.polytope, b.lambda, Verdict::Yes);
    CHECK(r.n == 3);
    CHECK(r.m == 6);
    CHECK(r.edim == 3);
    CHECK(r.t_lower == 3);
    CHECK(r.t_upper == 3);
    CHECK(r.nss_upper == 9);
    CHECK(r.facet_bound_ok);
    CHECK(r.m == 2 * r.n);  // the bound is attained
    CHECK(r.chi == 8);
    CHECK_FALSE(r.contradiction);
}

TEST_CASE("symmetry report flags the facet bound failure", "[bounds]") {
    InputBundle b = projective_space(2);
    SymmetryReport r = symmetry_report(b.polytope, b.lambda, Verdict::No);
    CHECK_FALSE(r.facet_bound_ok);
    CHECK(r.m == 3);
    CHECK(2 * r.n == 4);
    CHECK_FALSE(r.contradiction);
    // hypothetical q-type yes with m < 2n would be contradictory
    SymmetryReport bad = symmetry_report(b.polytope, b.lambda, Verdict::Yes);
    CHECK(bad.contradiction);
}

TEST_CASE("triple sphere product attains the semisimple bound", "[bounds]") {
    InputBundle s2 = standard_sphere_product(1);
    InputBundle b = bundle_product(bundle_product(s2, s2, ""), s2, "s2cubed");
    SymmetryReport r = symmetry_report(b.polytope, b.lambda, Verdict::Yes);
    CHECK(r.nss_upper == 9);  // dim SU(2)^3
    auto attained = attaining_candidates(r.nss_upper, r.n);
    REQUIRE(attained.size() == 1);
    CHECK(product_label(attained[0]) == "A1 x A1 x A1");
}

TEST_CASE("homogeneous check on sphere products", "[bounds]") {
    for (int n = 1; n <= 4; ++n) {
        InputBundle b = standard_sphere_product(n);
        HomogeneousCheck c = homogeneous_check(b.polytope, b.lambda, Verdict::Yes);
        INFO("n = " << n);
        CHECK(c.status == HomogeneousCheck::Status::Consistent);
        CHECK(c.failed_conditions.empty());
    }
}

TEST_CASE("homogeneous check excludes non-binomial data", "[bounds]") {
    // hypothetical: sos verdict yes with projective-plane invariants
    InputBundle b = projective_space(2);
    HomogeneousCheck c = homogeneous_check(b.polytope, b.lambda, Verdict::Yes);
    CHECK(c.status == HomogeneousCheck::Status::Excluded);
    CHECK_FALSE(c.failed_conditions.empty());
}

TEST_CASE("homogeneous check is inapplicable without the sos hypothesis", "[bounds]") {
    InputBundle b = projective_space(2);
    HomogeneousCheck c = homogeneous_check(b.polytope, b.lambda, Verdict::No);
    CHECK(c.status == HomogeneousCheck::Status::NotApplicable);
}

TEST_CASE("cohomogeneity-one predictions", "[bounds]") {
    CohomOnePredictions one = cohomogeneity_one_predictions(1, false);
    CHECK(one.euler_characteristic == 4);
    CHECK(one.manifold_half_dim == 2);
    CHECK(one.torus_bound == 2);
    CHECK(one.structure == "S^2-bundle over (S^2)^1");

    CohomOnePredictions two = cohomogeneity_one_predictions(2, false);
    CHECK(two.euler_characteristic == 8);
    CHECK(two.orbit_poincare == std::vector<Integer>{1, 2, 1});

    CohomOnePredictions three = cohomogeneity_one_predictions(3, true);
    CHECK(three.euler_characteristic == 16);
    CHECK(three.torus_bound == 4);  // rank of the semisimple part plus one
    CHECK(three.group == "SU(2)^3 x S^1");

    for (int k = 1; k <= 6; ++k) {
        CohomOnePredictions p = cohomogeneity_one_predictions(k, false);
        CHECK(p.euler_characteristic == (2ll << k));
        Integer coeff_sum = 0;
        for (const auto& c : p.orbit_poincare) coeff_sum += c;
        CHECK(coeff_sum == p.weyl_order);
        CHECK(p.euler_characteristic == 2 * p.weyl_order);
        CHECK(p.manifold_half_dim == k + 1);
    }
    CHECK_THROWS_AS(cohomogeneity_one_predictions(0, false), std::invalid_argument);
}

TEST_CASE("matching cohomogeneity-one factor counts", "[bounds]") {
    InputBundle c2 = standard_sphere_product(2);
    CHECK(match_cohomogeneity_one(c2.polytope, c2.lambda) == std::vector<int>{1});
    InputBundle c3 = standard_sphere_product(3);
    CHECK(match_cohomogeneity_one(c3.polytope, c3.lambda) == std::vector<int>{2});
    InputBundle cp2 = projective_space(2);
    CHECK(match_cohomogeneity_one(cp2.polytope, cp2.lambda).empty());
}
