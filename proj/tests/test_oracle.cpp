#include "qtoric/catalogue.hpp"
#include "qtoric/oracle.hpp"
#include "qtoric/qtype.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qtoric;

TEST_CASE("brute ring dimensions on the basic examples", "[oracle]") {
    InputBundle c2 = standard_sphere_product(2);
    CHECK(oracle::brute_ring_dims(c2.polytope, c2.lambda) == std::vector<long long>{1, 2, 1});

    InputBundle cp3 = projective_space(3);
    CHECK(oracle::brute_ring_dims(cp3.polytope, cp3.lambda) ==
          std::vector<long long>{1, 1, 1, 1});

    InputBundle c3 = standard_sphere_product(3);
    CHECK(oracle::brute_ring_dims(c3.polytope, c3.lambda) == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("brute ring dimensions agree with the h-vector on the catalogue", "[oracle]") {
    for (const auto& b : catalogue()) {
        if (b.polytope.dim_n > 4 || b.polytope.num_facets > 10) continue;
        INFO("bundle " << b.name);
        HVector h = h_vector(b.polytope);
        auto dims = oracle::brute_ring_dims(b.polytope, b.lambda);
        REQUIRE(dims.size() == h.entries.size());
        for (std::size_t i = 0; i < dims.size(); ++i) CHECK(dims[i] == h.entries[i]);
    }
}

TEST_CASE("oracle size caps are enforced", "[oracle]") {
    InputBundle big = standard_sphere_product(4);
    InputBundle too_deep;
    too_deep.polytope = cube(5);
    too_deep.lambda.lambda = IMatrix(5, 10);
    CHECK_THROWS_AS(oracle::brute_ring_dims(too_deep.polytope, too_deep.lambda),
                    std::invalid_argument);

    // 11-gon: n = 2 but m = 11 exceeds the facet cap
    SimplePolytope gon;
    gon.dim_n = 2;
    gon.num_facets = 11;
    for (int i = 0; i < 11; ++i) gon.vertices.push_back({i, (i + 1) % 11});
    for (auto& v : gon.vertices) std::sort(v.begin(), v.end());
    CharacteristicMatrix lam{IMatrix(2, 11)};
    CHECK_THROWS_AS(oracle::brute_ring_dims(gon, lam), std::invalid_argument);
}

TEST_CASE("brute sos search on the square", "[oracle]") {
    InputBundle b = standard_sphere_product(2);
    GradedRingPresentation pres = presentation(b.polytope, b.lambda);
    PontrjaginClass p1 = pontrjagin_p1(pres);
    auto result = oracle::brute_sos_search(pres, p1, 4);
    CHECK(result.found);
    CHECK(oracle::detail::psd_by_minors(result.example));
}

TEST_CASE("brute sos search cannot rescue the projective plane", "[oracle]") {
    InputBundle b = projective_space(2);
    GradedRingPresentation pres = presentation(b.polytope, b.lambda);
    PontrjaginClass p1 = pontrjagin_p1(pres);
    for (int cap : {1, 4, 8}) {
        auto result = oracle::brute_sos_search(pres, p1, cap);
        INFO("cap " << cap);
        CHECK_FALSE(result.found);
    }
}

TEST_CASE("brute sos search matches the solver on twists", "[oracle]") {
    for (int a : {0, 1, 2}) {
        InputBundle b = hirzebruch_twist(a);
        GradedRingPresentation pres = presentation(b.polytope, b.lambda);
        PontrjaginClass p1 = pontrjagin_p1(pres);
        SosDecision solver = p1_negative_sos(pres, p1);
        auto brute = oracle::brute_sos_search(pres, p1, 4, 2 + 2 * (a * a + 2));
        INFO("twist a = " << a);
        REQUIRE(solver.verdict != Verdict::Undecided);
        CHECK(brute.found == (solver.verdict == Verdict::Yes));
    }
}

TEST_CASE("oracle rejects oversized sos grids", "[oracle]") {
    InputBundle b = standard_sphere_product(2);
    GradedRingPresentation pres = presentation(b.polytope, b.lambda);
    PontrjaginClass p1 = pontrjagin_p1(pres);
    CHECK_THROWS_AS(oracle::brute_sos_search(pres, p1, 33), std::invalid_argument);
    InputBundle big = standard_sphere_product(4);
    GradedRingPresentation big_pres = presentation(big.polytope, big.lambda);
    CHECK_THROWS_AS(oracle::brute_sos_search(big_pres, pontrjagin_p1(big_pres), 4),
                    std::invalid_argument);
}
