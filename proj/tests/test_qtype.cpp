#include "qtoric/catalogue.hpp"
#include "qtoric/qtype.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace qtoric;

namespace {

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t d, int span = 3) {
    std::uniform_int_distribution<int> entry(-span, span);
    QMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = Rational(entry(rng));
    return m;
}

std::vector<QMatrix> random_span(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<std::size_t> count(1, sym2_dim(d));
    std::vector<QMatrix> span;
    do {
        span.clear();
        const std::size_t k = count(rng);
        for (std::size_t i = 0; i < k; ++i) span.push_back(random_symmetric(rng, d));
    } while (detail::span_basis(span).empty());
    return span;
}

}  // namespace

TEST_CASE("identity span certifies instantly", "[qtype]") {
    SubspaceDecision d = pd_in_subspace({QMatrix::identity(2)});
    REQUIRE(d.verdict == Verdict::Yes);
    REQUIRE(d.certificate.has_value());
    CHECK(verify_pd_certificate({QMatrix::identity(2)}, *d.certificate));
}

TEST_CASE("sign-indefinite diagonal span is refuted", "[qtype]") {
    std::vector<QMatrix> span{QMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}};
    SubspaceDecision d = pd_in_subspace(span);
    REQUIRE(d.verdict == Verdict::No);
    REQUIRE(d.witness.has_value());
    CHECK(verify_subspace_refutation(span, *d.witness));
}

TEST_CASE("input validation of pd_in_subspace", "[qtype]") {
    CHECK_THROWS_AS(pd_in_subspace({}), std::invalid_argument);
    CHECK_THROWS_AS(pd_in_subspace({QMatrix(2, 2)}), std::invalid_argument);  // zero span
    CHECK_THROWS_AS(pd_in_subspace({QMatrix::identity(2), QMatrix::identity(3)}),
                    std::invalid_argument);
    QMatrix asym(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(pd_in_subspace({asym}), std::invalid_argument);
}

TEST_CASE("q-type of the basic catalogue entries", "[qtype]") {
    SECTION("products of spheres are q-type") {
        for (int n = 1; n <= 4; ++n) {
            InputBundle b = standard_sphere_product(n);
            GradedRingPresentation pres = presentation(b.polytope, b.lambda);
            // each u_i^2 lies in the ideal part, so the identity is a member
            CHECK(in_span(pres.quadratic_ideal_matrices(), QMatrix::identity(n)));
            SubspaceDecision d = is_q_type(pres);
            REQUIRE(d.verdict == Verdict::Yes);
            CHECK(verify_pd_certificate(pres.quadratic_ideal_matrices(), *d.certificate));
        }
    }
    SECTION("projective plane is not q-type") {
        InputBundle b = projective_space(2);
        GradedRingPresentation pres = presentation(b.polytope, b.lambda);
        SubspaceDecision d = is_q_type(pres);
        REQUIRE(d.verdict == Verdict::No);
        REQUIRE(d.witness.has_value());
        CHECK(is_positive_semidefinite(d.witness->witness));
    }
    SECTION("the two-sphere is q-type with certificate u^2") {
        InputBundle b = projective_space(1);
        GradedRingPresentation pres = presentation(b.polytope, b.lambda);
        SubspaceDecision d = is_q_type(pres);
        REQUIRE(d.verdict == Verdict::Yes);
        CHECK(d.certificate->member == QMatrix{{Rational(1)}});
    }
}

TEST_CASE("q-type via the square's ideal kernel", "[qtype]") {
    InputBundle b = standard_sphere_product(2);
    GradedRingPresentation pres = presentation(b.polytope, b.lambda);
    SubspaceDecision d = pd_in_subspace(pres.quadratic_ideal_matrices());
    CHECK(d.verdict == Verdict::Yes);
}

TEST_CASE("negative-SOS certificates on the catalogue corners", "[qtype]") {
    SECTION("products of spheres: S = 0") {
        for (int n = 1; n <= 4; ++n) {
            InputBundle b = standard_sphere_product(n);
            GradedRingPresentation pres = presentation(b.polytope, b.lambda);
            PontrjaginClass p1 = pontrjagin_p1(pres);
            SosDecision d = p1_negative_sos(pres, p1);
            REQUIRE(d.verdict == Verdict::Yes);
            CHECK(d.certificate->psd_gram.is_zero());
            CHECK(d.certificate->squares.empty());
            CHECK(verify_sos_certificate(pres, p1.h4_image, *d.certificate));
        }
    }
    SECTION("projective plane: refuted by the unit form") {
        InputBundle b = projective_space(2);
        GradedRingPresentation pres = presentation(b.polytope, b.lambda);
        PontrjaginClass p1 = pontrjagin_p1(pres);
        SosDecision d = p1_negative_sos(pres, p1);
        REQUIRE(d.verdict == Verdict::No);
        REQUIRE(d.witness.has_value());
        CHECK(d.witness->witness == QMatrix{{Rational(1)}});
        CHECK(trace_inner(d.witness->witness, -p1.form.gram) < 0);
        CHECK(verify_sos_refutation(pres, p1.form.gram, *d.witness));
    }
}

TEST_CASE("implication: negative-SOS yes forces q-type yes on the catalogue", "[qtype]") {
    for (const auto& b : catalogue()) {
        INFO("bundle " << b.name);
        GradedRingPresentation pres = presentation(b.polytope, b.lambda);
        SubspaceDecision qt = is_q_type(pres);
        SosDecision sos = p1_negative_sos(pres, pontrjagin_p1(pres));
        REQUIRE(qt.verdict != Verdict::Undecided);
        REQUIRE(sos.verdict != Verdict::Undecided);
        LemmaConsistency lc = lemma_consistency(qt, sos);
        CHECK(lc.applicable);
        CHECK(lc.consistent);
    }
}

TEST_CASE("consistency report is inapplicable on undecided inputs", "[qtype]") {
    SubspaceDecision qt;  // undecided by default
    SosDecision sos;
    CHECK_FALSE(lemma_consistency(qt, sos).applicable);
    // and the violated implication is a hard error
    SubspaceDecision no;
    no.verdict = Verdict::No;
    SosDecision yes;
    yes.verdict = Verdict::Yes;
    CHECK_THROWS_AS(lemma_consistency(no, yes), std::logic_error);
}

TEST_CASE("random subspaces decide soundly", "[qtype][property]") {
    std::mt19937_64 rng(2024);
    int undecided = 0;
    const int trials = 80;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t d = 1 + trial % 4;
        std::vector<QMatrix> span = random_span(rng, d);
        SubspaceDecision dec = pd_in_subspace(span);
        INFO("trial " << trial << " d = " << d);
        if (dec.verdict == Verdict::Yes) {
            REQUIRE(dec.certificate.has_value());
            CHECK_FALSE(dec.witness.has_value());
            CHECK(verify_pd_certificate(span, *dec.certificate));
        } else if (dec.verdict == Verdict::No) {
            REQUIRE(dec.witness.has_value());
            CHECK_FALSE(dec.certificate.has_value());
            CHECK(verify_subspace_refutation(span, *dec.witness));
        } else {
            ++undecided;
        }
    }
    CHECK(undecided <= trials / 10);
}

TEST_CASE("certificate and witness never verify together", "[qtype][property]") {
    std::mt19937_64 rng(99);
    SolverConfig cfg;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + trial % 4;
        std::vector<QMatrix> span = random_span(rng, d);
        std::vector<QMatrix> basis = detail::span_basis(span);
        auto cert = search_pd_member(basis, cfg);
        auto witness = search_psd_witness(basis, d, cfg);
        INFO("trial " << trial);
        if (cert) CHECK(verify_pd_certificate(span, *cert));
        if (witness) CHECK(verify_subspace_refutation(span, *witness));
        CHECK_FALSE((cert.has_value() && witness.has_value()));
    }
}

TEST_CASE("verdicts are invariant under negation and positive scaling", "[qtype][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 1 + trial % 3;
        std::vector<QMatrix> span = random_span(rng, d);
        std::vector<QMatrix> negated, scaled;
        for (const auto& m : span) {
            negated.push_back(-m);
            scaled.push_back(m * Rational(3, 7));
        }
        Verdict base = pd_in_subspace(span).verdict;
        CHECK(pd_in_subspace(negated).verdict == base);
        CHECK(pd_in_subspace(scaled).verdict == base);
    }
}

TEST_CASE("starved solver returns an honest undecided", "[qtype]") {
    // indefinite single generator whose witness needs the numeric path
    std::vector<QMatrix> span{QMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}};
    SolverConfig starved;
    starved.max_iterations = 0;
    starved.max_retries = 0;
    SubspaceDecision d = pd_in_subspace(span, starved);
    CHECK(d.verdict == Verdict::Undecided);
    CHECK_FALSE(d.certificate.has_value());
    CHECK_FALSE(d.witness.has_value());
    // with a working budget the same instance is refuted
    SubspaceDecision full = pd_in_subspace(span);
    REQUIRE(full.verdict == Verdict::No);
    CHECK(verify_subspace_refutation(span, *full.witness));
}
