#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pz/critical.hpp"

using namespace pz;

namespace {

bool notes_mention(const std::vector<std::string>& notes, const std::string& needle) {
    for (const auto& n : notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

std::vector<Rational> eigenvalue_rationals(const Classification& cls) {
    REQUIRE(cls.eigenvalues.has_value());
    std::vector<Rational> out{cls.eigenvalues->first.re.as_rational(),
                              cls.eigenvalues->second.re.as_rational()};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("five finite critical points for the negative-c trinomial") {
    // (1,1,-3,1,1): y = 0 slice carries x^4 - 3x^2 + 1 (after clearing x powers)
    PZParams prm{1, 1, -3, 1, 1};
    CriticalPointSet set = finite_critical_points(prm);
    REQUIRE(set.points.size() == 5);
    CHECK(set.points[0].origin_flag);
    CHECK(set.points[0].x.is_rational());
    CHECK(set.points[0].x.as_rational() == 0);

    std::vector<double> xs;
    for (size_t i = 1; i < set.points.size(); ++i) {
        double x = set.points[i].x.to_double();
        // residual against x^4 - 3x^2 + 1
        double q = ((x * x - 3) * x * x) + 1;
        CHECK(std::abs(q) <= 1e-12);
        CHECK(set.points[i].y == 0);
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(xs[0] == doctest::Approx(-phi).epsilon(1e-12));
    CHECK(xs[1] == doctest::Approx(-1 / phi).epsilon(1e-12));
    CHECK(xs[2] == doctest::Approx(1 / phi).epsilon(1e-12));
    CHECK(xs[3] == doctest::Approx(phi).epsilon(1e-12));
}

TEST_CASE("F2 roots come from the instantiated polynomial") {
    FamilyClass cls = classify_family({0, 1, 1, Rational(3, 2), Rational(1, 2)});
    REQUIRE(cls.tag == FamilyTag::F2);
    CriticalPointSet set = finite_critical_points(cls);
    REQUIRE(set.points.size() == 2);
    CHECK(set.points[0].origin_flag);
    CHECK(set.points[1].x.is_rational());
    CHECK(set.points[1].x.as_rational() == Rational(-3, 2));
    // the closed form -2c/(b^2(r+1)) = -2/3 is reported alongside
    CHECK(notes_mention(set.notes, "-2/3"));
    // exact residual of the direct root
    PlanarPolySystem sys = instantiate_family(cls).to_planar();
    CHECK(sys.Q.eval(Rational(-3, 2), Rational(0)) == 0);
}

TEST_CASE("origin is the only critical point for the single-sign families") {
    // F4: a = b = 0
    CriticalPointSet f4 = finite_critical_points(classify_family({0, 0, 1, 1, 0}));
    REQUIRE(f4.points.size() == 1);
    CHECK(f4.points[0].origin_flag);

    // F3: c = 0, binomial with even power of a negative value
    CriticalPointSet f3 = finite_critical_points(classify_family({1, 1, 0, 2, 1}));
    REQUIRE(f3.points.size() == 1);
    CHECK(f3.points[0].origin_flag);

    // F6: a = c = 0 and F7: b = c = 0, single pure-x monomial
    CHECK(finite_critical_points(classify_family({0, 1, 0, 2, 1})).points.size() == 1);
    CHECK(finite_critical_points(classify_family({1, 0, 0, 2, 1})).points.size() == 1);
}

TEST_CASE("complex pair excluded when the discriminant is negative") {
    // c < 0 with c^2 < 4 a^2 b^2 m^2: (1,1,-1,1,1) gives 1 - 4 < 0
    CriticalPointSet set = finite_critical_points(PZParams{1, 1, -1, 1, 1});
    CHECK(set.complex_roots_excluded);
    REQUIRE(set.points.size() == 1);
    CHECK(set.points[0].origin_flag);
}

TEST_CASE("linearize at the origin of the quadratic showcase") {
    for (Rational b : {Rational(1), Rational(-2), Rational(1, 2)}) {
        PlanarPolySystem sys = build_field({0, b, 3, Rational(3, 2), Rational(1, 2)}).to_planar();
        CriticalPoint origin{ExactValue::rational(0), 0, true};
        Classification cls = linearize(sys, origin);
        std::vector<Rational> eig = eigenvalue_rationals(cls);
        std::vector<Rational> expect{b, Rational(3, 2) * b};
        std::sort(expect.begin(), expect.end());
        CHECK(eig == expect);
        CHECK(cls.kind == (b > 0 ? PointKind::HyperbolicUnstableNode
                                 : PointKind::HyperbolicStableNode));
        // trace / determinant consistency
        CHECK(eig[0] + eig[1] == Rational(5, 2) * b);
        CHECK(eig[0] * eig[1] == Rational(3, 2) * b * b);
    }
}

TEST_CASE("linearize at the saddle of the quadratic showcase") {
    for (Rational b : {Rational(1), Rational(-2)}) {
        Rational c = 3;
        PlanarPolySystem sys = build_field({0, b, c, Rational(3, 2), Rational(1, 2)}).to_planar();
        CriticalPoint pt{ExactValue::rational(-3 * b * b / (2 * c)), 0, false};
        CHECK(sys.Q.eval(-3 * b * b / (2 * c), Rational(0)) == 0);
        Classification cls = linearize(sys, pt);
        CHECK(cls.kind == PointKind::HyperbolicSaddle);
        std::vector<Rational> expect{3 * b, -b / 2};
        std::sort(expect.begin(), expect.end());
        CHECK(eigenvalue_rationals(cls) == expect);
    }
}

TEST_CASE("linearize reports a degenerate zero Jacobian") {
    PlanarPolySystem sys = GeneralizedSystem().to_planar();  // ydot = 0
    Classification cls = linearize(sys, {ExactValue::rational(0), 0, true});
    CHECK(cls.kind == PointKind::Degenerate);
}

TEST_CASE("classify_degenerate on the compactified showcase chart") {
    for (Rational b : {Rational(1), Rational(2)}) {
        for (Rational c : {Rational(1), Rational(-1), Rational(2), Rational(-2)}) {
            // udot = v + c u^3 - (5/2) b uv + (3/2) b^2 u^2 v
            BiPoly X = BiPoly::term(c, 3, 0) + BiPoly::term(Rational(-5, 2) * b, 1, 1) +
                       BiPoly::term(Rational(3, 2) * b * b, 2, 1);
            // vdot = -(5/2) b v^2 + (3/2) b^2 u v^2 + c u^2 v
            BiPoly Y = BiPoly::term(Rational(-5, 2) * b, 0, 2) +
                       BiPoly::term(Rational(3, 2) * b * b, 1, 2) + BiPoly::term(c, 2, 1);
            Classification cls = classify_degenerate(X, Y, 16);
            CHECK(cls.alpha == 5);
            CHECK(cls.a_lead == -c * c);
            REQUIRE(cls.beta.has_value());
            CHECK(*cls.beta == 2);
            REQUIRE(cls.b_lead.has_value());
            CHECK(*cls.b_lead == 4 * c);
            CHECK(cls.kind == (c > 0 ? PointKind::UnstableNode : PointKind::StableNode));
        }
    }
}

TEST_CASE("classify_degenerate walks every tree branch") {
    BiPoly none;

    // alpha odd, a > 0: saddle
    Classification saddle = classify_degenerate(none, BiPoly::term(1, 3, 0), 10);
    CHECK(saddle.kind == PointKind::Saddle);
    CHECK(saddle.alpha == 3);
    CHECK(saddle.a_lead == 1);

    // alpha = 2 beta + 1, beta even, discriminant >= 0: node by sign of b
    BiPoly y_node_neg = BiPoly::term(-1, 5, 0) + BiPoly::term(-4, 2, 1);
    CHECK(classify_degenerate(none, y_node_neg, 12).kind == PointKind::StableNode);
    BiPoly y_node_pos = BiPoly::term(-1, 5, 0) + BiPoly::term(4, 2, 1);
    CHECK(classify_degenerate(none, y_node_pos, 12).kind == PointKind::UnstableNode);

    // same shape but discriminant b^2 + 4a(beta+1) = 9 - 12 < 0: focus or center
    BiPoly y_focus = BiPoly::term(-1, 5, 0) + BiPoly::term(3, 2, 1);
    CHECK(classify_degenerate(none, y_focus, 12).kind == PointKind::FocusOrCenter);

    // beta odd at alpha = 2 beta + 1: elliptic-hyperbolic union
    BiPoly y_eh = BiPoly::term(-1, 3, 0) + BiPoly::term(4, 1, 1);
    CHECK(classify_degenerate(none, y_eh, 12).kind == PointKind::EllipticHyperbolic);

    // alpha even and alpha > 2 beta + 1: saddle node
    BiPoly y_sn = BiPoly::term(1, 4, 0) + BiPoly::term(1, 1, 1);
    CHECK(classify_degenerate(none, y_sn, 12).kind == PointKind::SaddleNode);

    // alpha even and alpha < 2 beta + 1: two hyperbolic sectors
    BiPoly y_two = BiPoly::term(1, 6, 0) + BiPoly::term(1, 4, 1);
    CHECK(classify_degenerate(none, y_two, 14).kind == PointKind::TwoHyperbolicSectors);

    // Phi identically zero: even alpha -> two hyperbolic sectors, odd a<0 -> focus/center
    CHECK(classify_degenerate(none, BiPoly::term(1, 4, 0), 10).kind ==
          PointKind::TwoHyperbolicSectors);
    CHECK(classify_degenerate(none, BiPoly::term(-1, 3, 0), 10).kind ==
          PointKind::FocusOrCenter);
}

TEST_CASE("classify_degenerate input validation") {
    CHECK_THROWS_AS(classify_degenerate(BiPoly::term(1, 1, 0), BiPoly::term(1, 2, 0), 10),
                    NormalFormViolation);
    CHECK_THROWS_AS(classify_degenerate(BiPoly(), BiPoly::term(1, 0, 0), 10),
                    NormalFormViolation);
    CHECK_THROWS_AS(classify_degenerate(BiPoly(), BiPoly::term(1, 20, 0), 16),
                    TruncationTooLow);
}

TEST_CASE("origin_structure_F1 closed form") {
    Classification even_case = origin_structure_F1({1, 1, 1, 2, 1});
    CHECK(even_case.kind == PointKind::UnstableNode);
    CHECK(even_case.alpha == 5);
    CHECK(*even_case.beta == 2);
    CHECK(even_case.a_lead == -2);
    CHECK(*even_case.b_lead == 5);

    CHECK(origin_structure_F1({1, 1, 1, 2, 2}).kind == PointKind::EllipticHyperbolic);

    CHECK_THROWS_AS(origin_structure_F1({0, 1, 1, 2, 1}), WrongFamily);
    CHECK_THROWS_AS(origin_structure_F1({1, 1, -1, 2, 1}), WrongFamily);
}

TEST_CASE("origin_structure_F1 agrees with the series classifier") {
    // parameter grid where the origin is genuinely degenerate (m - k >= 2)
    std::vector<std::pair<Rational, Rational>> mks{{3, 1}, {4, 1}, {4, 2}, {5, 2}};
    for (Rational a : {Rational(1), Rational(2)})
        for (Rational b : {Rational(1), Rational(2)})
            for (Rational c : {Rational(1), Rational(2)})
                for (auto [m, k] : mks) {
                    PZParams prm{a, b, c, m, k};
                    FamilyClass cls = classify_family(prm);
                    REQUIRE(cls.tag == FamilyTag::F1);
                    PlanarPolySystem sys = instantiate_family(cls).to_planar();
                    Classification series = classify_degenerate(BiPoly(), sys.Q, 24);
                    Classification closed = origin_structure_F1(prm);
                    CHECK(series.kind == closed.kind);
                }
}

TEST_CASE("lyapunov_certificate per-condition report") {
    PZParams prm{1, -1, -2, 1, 0};  // a^2 m + c + b^2 m = 0

    LyapunovCertificate cert = lyapunov_certificate(prm, 1, 0, 1);
    CHECK(cert.positive);
    REQUIRE(cert.derivative_conditions.size() == 3);
    CHECK(cert.derivative_conditions[0].second);   // a^2 m + c + b^2 m = 0
    CHECK(cert.derivative_conditions[1].second);   // 2 m c1 (a+b) + m c2 = 0
    CHECK(!cert.derivative_conditions[2].second);  // c2 + 4 c3 (a+b) = 0, not < 0
    CHECK(!cert.holds);

    LyapunovCertificate cert2 = lyapunov_certificate(prm, 1, -1, 1);
    CHECK(cert2.positive);
    CHECK(cert2.derivative_conditions[0].second);
    CHECK(!cert2.derivative_conditions[1].second);  // 0 + (-1) != 0
    CHECK(cert2.derivative_conditions[2].second);   // -1 < 0
    CHECK(!cert2.holds);
}

TEST_CASE("lyapunov_certificate positivity and case guards") {
    PZParams prm{1, -1, -2, 1, 0};
    CHECK(!lyapunov_certificate(prm, -1, 0, 1).positive);
    // boundary 4 c1 c3 - c2^2 = 0 still counts as positive (>= 0)
    CHECK(lyapunov_certificate(prm, 1, 2, 1).positive);

    CHECK_THROWS_AS(lyapunov_certificate({1, 1, 1, 1, 1}, 1, 0, 1), WrongCase);
    CHECK_THROWS_AS(lyapunov_certificate({1, 1, 1, Rational(1, 2), 0}, 1, 0, 1), WrongCase);
}
