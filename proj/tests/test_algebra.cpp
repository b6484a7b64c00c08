#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pz/bipoly.hpp"
#include "pz/quadroot.hpp"
#include "pz/ratfun.hpp"
#include "pz/series.hpp"
#include "pz/surd.hpp"
#include "pz/unipoly.hpp"

using namespace pz;

namespace {

Rational rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(rng), den(rng));
}

UniPoly rnd_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = rnd_rat(rng);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly_derivative basics") {
    CHECK(poly_derivative(UniPoly{0, 0, 1}) == UniPoly{0, 2});           // x^2 -> 2x
    CHECK(poly_derivative(UniPoly{}) == UniPoly{});                      // 0 -> 0
    CHECK(poly_derivative(UniPoly{0, Rational(-1, 2), 0, 3}) ==          // 3x^3 - x/2
          UniPoly{Rational(-1, 2), 0, 9});                               // 9x^2 - 1/2
}

TEST_CASE("product rule holds exactly on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        UniPoly p = rnd_poly(rng, 6), q = rnd_poly(rng, 6);
        CHECK(poly_derivative(p * q) ==
              poly_derivative(p) * q + p * poly_derivative(q));
    }
}

TEST_CASE("ratfun_simplify canonical forms") {
    // (x^2 - 1)/(x - 1) = x + 1
    CHECK(ratfun_simplify(UniPoly{-1, 0, 1}, UniPoly{-1, 1}) == RatFun(UniPoly{1, 1}));
    // (2x)/4 = x/2 with denominator 1
    RatFun half_x = ratfun_simplify(UniPoly{0, 2}, UniPoly{4});
    CHECK(half_x.num() == UniPoly{0, Rational(1, 2)});
    CHECK(half_x.den() == UniPoly{1});
    // (x^3 + x)/(x^2 + 1) = x
    CHECK(ratfun_simplify(UniPoly{0, 1, 0, 1}, UniPoly{1, 0, 1}) == RatFun(UniPoly{0, 1}));
    CHECK_THROWS_AS(ratfun_simplify(UniPoly{1}, UniPoly{}), ZeroDenominator);
}

TEST_CASE("ratfun_simplify is idempotent on random inputs") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        UniPoly num = rnd_poly(rng, 4);
        UniPoly den = rnd_poly(rng, 3);
        if (den.is_zero()) den = UniPoly{1};
        RatFun r = ratfun_simplify(num, den);
        CHECK(ratfun_simplify(r.num(), r.den()) == r);
    }
}

TEST_CASE("rational function arithmetic") {
    RatFun x(UniPoly{0, 1});
    RatFun one(Rational(1));
    RatFun inv = one / x;
    CHECK(x * inv == one);
    CHECK(inv.derivative() == RatFun(UniPoly{-1}, UniPoly{0, 0, 1}));  // -1/x^2
}

TEST_CASE("series_implicit_solve trivial cases") {
    // X = 0 -> F = 0
    CHECK(series_implicit_solve(BiPoly(), 6).is_zero());
    // X = x^2 -> F = -x^2
    TruncatedSeries F = series_implicit_solve(BiPoly::term(1, 2, 0), 6);
    CHECK(F.coeff(2) == -1);
    CHECK(F.coeff(3) == 0);
    CHECK(F.coeff(4) == 0);
}

TEST_CASE("series_implicit_solve solvability errors") {
    CHECK_THROWS_AS(series_implicit_solve(BiPoly::term(1, 0, 0), 6), NoFormalSolution);
    BiPoly bad = BiPoly::term(-1, 0, 1) + BiPoly::term(1, 2, 0);
    CHECK_THROWS_AS(series_implicit_solve(bad, 6), NoFormalSolution);
}

TEST_CASE("series_implicit_solve on the quadratic-example chart") {
    // X = c u^3 - (5/2) b uv + (3/2) b^2 u^2 v with b = c = 1
    BiPoly X = BiPoly::term(1, 3, 0) + BiPoly::term(Rational(-5, 2), 1, 1) +
               BiPoly::term(Rational(3, 2), 2, 1);
    TruncatedSeries F = series_implicit_solve(X, 6);
    CHECK(F.coeff(0) == 0);
    CHECK(F.coeff(1) == 0);
    CHECK(F.coeff(2) == 0);
    CHECK(F.coeff(3) == -1);                 // -c u^3
    CHECK(F.coeff(4) == Rational(-5, 2));    // -(5/2) b c u^4 from the uv term
    // recomposition: F + X(u, F) vanishes through the truncation order
    TruncatedSeries residual = F + X.compose_y(F);
    CHECK(residual.is_zero());
}

TEST_CASE("recomposition property on random normal-form X") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
        BiPoly X;
        for (int t = 0; t < 4; ++t) {
            int dx = pick(rng), dy = pick(rng);
            if (dx + dy <= 1) dx += 2;  // keep the normal form (degree >= 2)
            X.add_term(rnd_rat(rng), dx, dy);
        }
        TruncatedSeries F = series_implicit_solve(X, 9);
        CHECK((F + X.compose_y(F)).is_zero());
    }
}

TEST_CASE("series_leading_term") {
    // -c^2 u^5 - (5/2) b c^2 u^6 with b = c = 1
    TruncatedSeries s(8);
    s.set_coeff(5, -1);
    s.set_coeff(6, Rational(-5, 2));
    auto [lead, idx] = series_leading_term(s);
    CHECK(lead == -1);
    CHECK(idx == 5);

    TruncatedSeries g(8);
    g.set_coeff(2, 4);  // 4c u^2 with c = 1
    CHECK(series_leading_term(g) == std::pair<Rational, int>(4, 2));

    CHECK_THROWS_AS(series_leading_term(TruncatedSeries(8)), AllZero);
}

TEST_CASE("truncated series multiplication is associative and commutative") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries a = TruncatedSeries::from_poly(rnd_poly(rng, 5), 7);
        TruncatedSeries b = TruncatedSeries::from_poly(rnd_poly(rng, 5), 7);
        TruncatedSeries c = TruncatedSeries::from_poly(rnd_poly(rng, 5), 7);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("unipoly division and gcd") {
    UniPoly a{-1, 0, 1};  // x^2 - 1
    UniPoly b{-1, 1};     // x - 1
    auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q == UniPoly{1, 1});
    CHECK(r.is_zero());
    CHECK(UniPoly::gcd(a, b) == b);  // monic
    CHECK(UniPoly::gcd(UniPoly{}, UniPoly{}).is_zero());
}

TEST_CASE("unipoly shift composition") {
    UniPoly p{0, 0, 1};                       // x^2
    CHECK(p.shifted(1) == UniPoly{1, 2, 1});  // (x+1)^2
    CHECK(p.shifted(Rational(-1, 2)).eval(Rational(1, 2)) == 0);
}

TEST_CASE("surd normalization and exact sign") {
    Surd s8 = Surd::sqrt_of(8);  // 2 sqrt(2)
    CHECK(s8.radicand() == 2);
    CHECK(s8.surd_coeff() == 2);
    Surd s9 = Surd::sqrt_of(9);
    CHECK(s9.is_rational());
    CHECK(s9.as_rational() == 3);

    // 7 - 4 sqrt(3) > 0 but barely (7^2 = 49 vs 16*3 = 48)
    Surd tight(7, -4, 3);
    CHECK(tight.sign() == 1);
    Surd neg(7, -5, 2);  // 49 vs 50
    CHECK(neg.sign() == -1);
    Surd zero(2, -1, 4);  // 2 - sqrt(4) = 0
    CHECK(zero.sign() == 0);
    CHECK(zero.is_rational());

    Surd x(1, 1, 2);
    CHECK((x * x.inverse()) == Surd(Rational(1)));
    CHECK((x * x.conjugate()) == Surd(Rational(-1)));  // 1 - 2
}

TEST_CASE("monic quadratic roots are exact") {
    // x^2 - x - 1 = 0: golden ratio pair
    auto [r1, r2] = solve_monic_quadratic(-1, -1);
    CHECK(!r1.is_complex);
    auto residual = [](const Surd& v) { return v * v - Surd(Rational(1)) * v - Surd(Rational(1)); };
    CHECK(residual(r1.re).is_zero());
    CHECK(residual(r2.re).is_zero());

    // x^2 + 1 = 0: complex pair
    auto [c1, c2] = solve_monic_quadratic(0, 1);
    CHECK(c1.is_complex);
    CHECK(c1.re == Surd(Rational(0)));
    CHECK(c1.im == Surd(Rational(1)));
    CHECK(c2.im == Surd(Rational(-1)));
}

TEST_CASE("bipoly translation and evaluation") {
    BiPoly p = BiPoly::term(1, 2, 0) + BiPoly::term(1, 0, 1);  // x^2 + y
    BiPoly t = p.translated(1, 0);
    CHECK(t.coeff(0, 0) == 1);
    CHECK(t.coeff(1, 0) == 2);
    CHECK(t.coeff(2, 0) == 1);
    CHECK(t.coeff(0, 1) == 1);
    CHECK(p.eval(Rational(2), Rational(3)) == 7);
}
