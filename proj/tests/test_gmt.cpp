#include <doctest.h>

#include "gmt/catalog.hpp"
#include "gmt/classification.hpp"
#include "gmt/gmt.hpp"
#include "test_util.hpp"

using namespace gmt;

namespace {

ProjectiveMatrix rotation(double angle) {
    return normalize_det({std::polar(1.0, angle), 0.0, 0.0, std::polar(1.0, -angle)});
}

// engineered pair with tr[f,g] exactly 1 (two parabolics)
std::pair<ProjectiveMatrix, ProjectiveMatrix> not_applicable_fixture() {
    return {normalize_det({1.0, 1.0, 0.0, 1.0}),
            normalize_det({1.0, 0.0, Complex{0.0, 1.0}, 1.0})};
}

}  // namespace

TEST_CASE("gmt_value: Gamma(4) attains equality") {
    FigureEightData fe = figure_eight_generators(4);
    GmtEvaluation e = gmt_value(fe.rho, fe.b);
    CHECK(std::abs(e.value - 1.0) <= 1e-9);
    CHECK(e.equalityAttained);
    CHECK_FALSE(e.commutatorTraceIsOne);
    CHECK(std::abs(e.trSquaredF - Complex{2.0}) <= 1e-12);
}

TEST_CASE("gmt_value: (f, I) gives |tr^2 f - 2| + 1") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        ProjectiveMatrix f = test::random_unit_det(rng);
        GmtEvaluation e = gmt_value(f, ProjectiveMatrix::identity());
        double expected = std::abs(tr_squared(f) - Complex{2.0}) + 1.0;
        CHECK(e.value == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("gmt_value: n = 6 pair gives 2 = 3 - 4 sin^2(pi/6)") {
    FigureEightData fe = figure_eight_generators(6);
    GmtEvaluation e = gmt_value(fe.rho, fe.b);
    CHECK(std::abs(e.value - 2.0) <= 1e-9);
    CHECK_FALSE(e.equalityAttained);
}

TEST_CASE("gmt_value flags tr[f,g] = 1 as not applicable") {
    auto [f, g] = not_applicable_fixture();
    GmtEvaluation e = gmt_value(f, g);
    CHECK(e.commutatorTraceIsOne);
    CHECK_FALSE(e.equalityAttained);
}

TEST_CASE("gmt_inequality_check verdicts") {
    FigureEightData fe4 = figure_eight_generators(4);
    CHECK(gmt_inequality_check(fe4.rho, fe4.b) == InequalityVerdict::Equality);

    // (f, f): commutator is I with trace 2, so with f = rho4 the value is 1
    CHECK(gmt_inequality_check(fe4.rho, fe4.rho) == InequalityVerdict::Equality);

    FigureEightData fe6 = figure_eight_generators(6);
    CHECK(gmt_inequality_check(fe6.rho, fe6.b) == InequalityVerdict::SatisfiedStrict);

    // parabolic f with any g where tr[f,g] != 1: strict (|tr^2 - 2| = 2)
    ProjectiveMatrix parabolic = normalize_det({1.0, 1.0, 0.0, 1.0});
    CHECK(gmt_inequality_check(parabolic, fe4.rho) == InequalityVerdict::SatisfiedStrict);

    auto [f, g] = not_applicable_fixture();
    CHECK(gmt_inequality_check(f, g) == InequalityVerdict::NotApplicable);

    // violated: a = rotation by pi/4 has tr[a,h] = 2 + 2qr for h = (p q; r s),
    // so h = (1, 1/2; -1/2, 3/4) gives tr[a,h] = 3/2 and the conjugate pair
    // (a, hah^-1) has G = |3/2 - 1|^2 = 1/4 < 1
    ProjectiveMatrix a = rotation(M_PI / 4.0);
    ProjectiveMatrix h = normalize_det({1.0, 0.5, -0.5, 0.75});
    ProjectiveMatrix b = multiply(multiply(h, a), inverse(h));
    GmtEvaluation e = gmt_value(a, b);
    REQUIRE(!e.commutatorTraceIsOne);
    CHECK(e.value == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(gmt_inequality_check(a, b) == InequalityVerdict::Violated);
}

TEST_CASE("G is invariant under joint conjugation") {
    std::mt19937_64 rng(42);
    FigureEightData fe = figure_eight_generators(4);
    double base = gmt_value(fe.rho, fe.b).value;
    for (int i = 0; i < 100; ++i) {
        ProjectiveMatrix c = test::random_unit_det(rng);
        ProjectiveMatrix f = multiply(multiply(c, fe.rho), inverse(c));
        ProjectiveMatrix g = multiply(multiply(c, fe.b), inverse(c));
        CHECK(std::abs(gmt_value(f, g).value - base) <= 1e-9);
    }
}

TEST_CASE("|tr(f g^-1 f^-1 g) - 1| = |tr[f,g] - 1| on samples") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        ProjectiveMatrix f = test::random_unit_det(rng);
        ProjectiveMatrix g = test::random_unit_det(rng);
        Mat2 fginvfinvg = f.rep() * g.rep().adjugate() * f.rep().adjugate() * g.rep();
        double lhs = std::abs(fginvfinvg.trace() - Complex{1.0});
        double rhs = std::abs(tr_commutator(f, g) - Complex{1.0});
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("Eq. (2) residual: random pairs and degenerate corners") {
    std::mt19937_64 rng(44);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        ProjectiveMatrix f = test::random_unit_det(rng);
        ProjectiveMatrix h = test::random_unit_det(rng);
        worst = std::max(worst, commutator_trace_identity_residual(f, h));
    }
    CHECK(worst <= 1e-9);
    ProjectiveMatrix f = test::random_unit_det(rng);
    CHECK(commutator_trace_identity_residual(f, ProjectiveMatrix::identity()) <= 1e-12);
    CHECK(commutator_trace_identity_residual(f, f) <= 1e-12);
}

TEST_CASE("Eq. (3) residual: order-four f, random h") {
    std::mt19937_64 rng(45);
    FigureEightData fe = figure_eight_generators(4);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        ProjectiveMatrix c = test::random_unit_det(rng);
        ProjectiveMatrix f = multiply(multiply(c, fe.rho), inverse(c));
        ProjectiveMatrix h = test::random_unit_det(rng);
        worst = std::max(worst, squared_distance_identity_residual(f, h));
    }
    CHECK(worst <= 1e-9);

    CHECK(squared_distance_identity_residual(fe.rho, involution_h1()) <= 1e-9);
    CHECK(squared_distance_identity_residual(fe.rho, fe.b) <= 1e-9);
    CHECK(squared_distance_identity_residual(fe.rho, ProjectiveMatrix::identity()) <= 1e-9);
}

TEST_CASE("Eq. (3) enforces its trace precondition") {
    ProjectiveMatrix parabolic = normalize_det({1.0, 1.0, 0.0, 1.0});
    CHECK_THROWS_AS(squared_distance_identity_residual(parabolic, ProjectiveMatrix::identity()),
                    PreconditionTrSquared);
}

TEST_CASE("lemma1_floor: case table") {
    auto pb = lemma1_floor(normalize_det({1.0, 1.0, 0.0, 1.0}));
    REQUIRE(pb);
    CHECK(pb->caseLabel == Lemma1Case::Parabolic);
    CHECK(pb->floorValue == 2.0);

    auto hyp = lemma1_floor(normalize_det({2.0, 0.0, 0.0, 0.5}));
    REQUIRE(hyp);
    CHECK(hyp->caseLabel == Lemma1Case::Hyperbolic);

    auto ord2 = lemma1_floor(involution_h1());
    REQUIRE(ord2);
    CHECK(ord2->caseLabel == Lemma1Case::SmallOrderElliptic);
    CHECK(ord2->floorValue == 2.0);

    auto ord3 = lemma1_floor(rotation(M_PI / 3.0));
    REQUIRE(ord3);
    CHECK(ord3->caseLabel == Lemma1Case::SmallOrderElliptic);
    CHECK(ord3->floorValue == 1.0);

    auto ord6 = lemma1_floor(rotation(M_PI / 6.0));
    REQUIRE(ord6);
    CHECK(ord6->caseLabel == Lemma1Case::HighOrderElliptic);
    CHECK(ord6->floorValue == 1.0);

    // order four matches no case: exactly why the equality examples use it
    CHECK_FALSE(lemma1_floor(figure_eight_generators(4).rho).has_value());
    CHECK_FALSE(lemma1_floor(rotation(2.0 * M_PI / 5.0)).has_value());  // (2,5): ratio 2.5
    CHECK_FALSE(lemma1_floor(ProjectiveMatrix::identity()).has_value());
}

TEST_CASE("lemma1 floors really bound G from below") {
    std::mt19937_64 rng(46);
    ProjectiveMatrix fixtures[] = {
        normalize_det({1.0, 1.0, 0.0, 1.0}),
        normalize_det({2.0, 0.0, 0.0, 0.5}),
        involution_h1(),
        rotation(M_PI / 3.0),
        rotation(M_PI / 6.0),
    };
    for (const ProjectiveMatrix& f : fixtures) {
        auto floor = lemma1_floor(f);
        REQUIRE(floor);
        int accepted = 0;
        while (accepted < 100) {
            ProjectiveMatrix g = test::random_unit_det(rng);
            if (std::abs(tr_commutator(f, g) - Complex{1.0}) <= 1e-4) continue;
            ++accepted;
            CHECK(gmt_value(f, g).value > 1.0 + (floor->floorValue - 1.0) - 1e-9);
        }
    }
}

TEST_CASE("lemma2_conjugate_pair: Gamma(4) pair and iterates") {
    FigureEightData fe = figure_eight_generators(4);
    Lemma2Result r = lemma2_conjugate_pair(fe.rho, fe.b);
    CHECK(r.eval.equalityAttained);
    CHECK(projective_distance(r.h, multiply(multiply(fe.b, fe.rho), inverse(fe.b))) <= 1e-12);

    Lemma2Result r2 = lemma2_conjugate_pair(fe.rho, r.h);
    CHECK(r2.eval.equalityAttained);

    // degenerate g = I: h = rho4 and G(rho4, rho4) = |2 - 1| = 1
    Lemma2Result deg = lemma2_conjugate_pair(fe.rho, ProjectiveMatrix::identity());
    CHECK(projective_eq(deg.h, fe.rho));
    CHECK(std::abs(deg.eval.value - 1.0) <= 1e-12);
}

TEST_CASE("lemma2_conjugate_pair enforces preconditions") {
    FigureEightData fe6 = figure_eight_generators(6);
    // tr^2(rho6) != 2
    CHECK_THROWS_AS(lemma2_conjugate_pair(fe6.rho, fe6.b), PreconditionNotGmtPair);
    // order-four f but G(f,g) != 1
    FigureEightData fe4 = figure_eight_generators(4);
    ProjectiveMatrix far = normalize_det({3.0, 0.0, 0.0, 1.0 / 3.0});
    REQUIRE(!gmt_value(fe4.rho, far).equalityAttained);
    CHECK_THROWS_AS(lemma2_conjugate_pair(fe4.rho, far), PreconditionNotGmtPair);
}

TEST_CASE("lemma3_verify: the three involutions of the Gamma(4) pair") {
    FigureEightData fe = figure_eight_generators(4);
    ProjectiveMatrix h1 = involution_h1();
    ProjectiveMatrix h2 = involution_h2(4);
    ProjectiveMatrix h3 = involution_h3(4);

    Lemma3Result i = lemma3_verify(fe.rho, fe.b, h1);
    CHECK(i.primary.action == Lemma3Action::ConjugatesToG);
    CHECK(i.eval.equalityAttained);

    Lemma3Result ii = lemma3_verify(fe.rho, fe.b, h2);
    CHECK(ii.primary.action == Lemma3Action::InvertsF);
    CHECK(ii.eval.equalityAttained);

    Lemma3Result iii = lemma3_verify(fe.b, fe.rho, h3);
    CHECK(iii.primary.action == Lemma3Action::ConjugatesToFGinvFinv);
    CHECK(iii.eval.equalityAttained);
}

TEST_CASE("lemma3_verify error paths") {
    FigureEightData fe = figure_eight_generators(4);
    // not an involution
    CHECK_THROWS_AS(lemma3_verify(fe.rho, fe.b, fe.rho), PreconditionNotGmtPair);
    // involution that matches no case: h1 conjugated far away
    ProjectiveMatrix c = normalize_det({2.0, 1.0, 1.0, 1.0});
    ProjectiveMatrix stray = multiply(multiply(c, involution_h1()), inverse(c));
    REQUIRE(is_involution(stray));
    CHECK_THROWS_AS(lemma3_verify(fe.rho, fe.b, stray), NoCaseMatches);
}

TEST_CASE("GmtEvaluation serializes with all fields") {
    FigureEightData fe = figure_eight_generators(4);
    nlohmann::json j = to_json(gmt_value(fe.rho, fe.b));
    CHECK(j.contains("trSquaredF"));
    CHECK(j.contains("trCommutator"));
    CHECK(j.contains("value"));
    CHECK(j.contains("commutatorTraceIsOne"));
    CHECK(j.contains("equalityAttained"));
    CHECK(j.contains("toleranceUsed"));
    CHECK(j["equalityAttained"].get<bool>());
}
