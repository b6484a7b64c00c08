// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pz/portrait.hpp"

using namespace pz;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s - %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

void run(int criterion, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail = what;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail += std::string(" [exception: ") + e.what() + "]";
    }
    report(criterion, ok, detail);
}

PlanarPolySystem showcase(const Rational& b, const Rational& c) {
    return build_field({0, b, c, Rational(3, 2), Rational(1, 2)}).to_planar();
}

std::vector<Rational> sorted_eigs(const Classification& cls) {
    std::vector<Rational> out;
    if (!cls.eigenvalues) return out;
    out.push_back(cls.eigenvalues->first.re.as_rational());
    out.push_back(cls.eigenvalues->second.re.as_rational());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> grid_half_units() {
    return {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
            Rational(-1, 2)};
}

Rational rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(rng), den(rng));
}

RatFun rnd_ratfun(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 2), den_pick(0, 2);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = rnd_rat(rng);
    UniPoly num(std::move(c));
    if (num.is_zero()) num = UniPoly{1};
    UniPoly den =
        den_pick(rng) == 0 ? UniPoly{1} : (den_pick(rng) == 1 ? UniPoly{0, 1} : UniPoly{1, 1});
    return RatFun(num, den);
}

bool criterion1() {
    for (const Rational& b : grid_half_units()) {
        for (const Rational& c : grid_half_units()) {
            PlanarPolySystem sys = showcase(b, c);
            Classification origin =
                linearize(sys, {ExactValue::rational(0), 0, true});
            std::vector<Rational> e0{b, Rational(3, 2) * b};
            std::sort(e0.begin(), e0.end());
            if (sorted_eigs(origin) != e0) return false;

            Classification saddle =
                linearize(sys, {ExactValue::rational(-3 * b * b / (2 * c)), 0, false});
            std::vector<Rational> e1{3 * b, -b / 2};
            std::sort(e1.begin(), e1.end());
            if (sorted_eigs(saddle) != e1) return false;
        }
    }
    return true;
}

bool criterion2() {
    for (const Rational& b : grid_half_units()) {
        for (const Rational& c : grid_half_units()) {
            PlanarPolySystem sys = showcase(b, c);
            ChartSystem u1 = chart_transform(sys, Chart::U1);
            BiPoly p1 = BiPoly::term(-1, 2, 1) + BiPoly::term(Rational(5, 2) * b, 1, 1) +
                        BiPoly::term(Rational(-3, 2) * b * b, 0, 1) + BiPoly::term(-c, 0, 0);
            if (!(u1.P_chart == p1) || !(u1.Q_chart == BiPoly::term(-1, 1, 2))) return false;

            ChartSystem u2 = chart_transform(sys, Chart::U2);
            BiPoly p2 = BiPoly::term(1, 0, 1) + BiPoly::term(Rational(-5, 2) * b, 1, 1) +
                        BiPoly::term(Rational(3, 2) * b * b, 2, 1) + BiPoly::term(c, 3, 0);
            BiPoly q2 = BiPoly::term(Rational(-5, 2) * b, 0, 2) +
                        BiPoly::term(Rational(3, 2) * b * b, 1, 2) + BiPoly::term(c, 2, 1);
            if (!(u2.P_chart == p2) || !(u2.Q_chart == q2)) return false;
        }
    }
    return true;
}

bool criterion3() {
    for (const Rational& b : {Rational(1), Rational(2), Rational(1, 2)}) {
        for (const Rational& c : {Rational(1), Rational(-1), Rational(2), Rational(-2)}) {
            ChartSystem u2 = chart_transform(showcase(b, c), Chart::U2);
            BiPoly X = u2.P_chart - BiPoly::term(1, 0, 1);  // udot = v + X
            Classification cls = classify_degenerate(X, u2.Q_chart, 16);
            if (cls.alpha != 5 || cls.a_lead != -c * c) return false;
            if (!cls.beta || *cls.beta != 2) return false;
            if (!cls.b_lead || *cls.b_lead != 4 * c) return false;
            PointKind want = c > 0 ? PointKind::UnstableNode : PointKind::StableNode;
            if (cls.kind != want) return false;
        }
    }
    return true;
}

bool criterion4() {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep = verify_pipeline({1, 1, 3, 1, 1}, 1.0, 2.0, 0.5, 64);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (rep.stages.size() != 6) return false;
    for (const auto& st : rep.stages)
        if (!(st.residual <= 1e-7)) return false;
    return rep.control_residual >= 1e-2 && secs < 5.0;
}

bool criterion5() {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        int order = 2 + (trial % 2);
        std::vector<RatFun> coeffs{RatFun(Rational(1))};
        for (int j = 0; j < order; ++j) coeffs.push_back(rnd_ratfun(rng));
        LinearODE ode("x", coeffs);
        RatFun original = ode.coeff_of_deriv(order - 1);
        auto [out, gauge] = remove_subleading(ode, RatFun());
        auto [back, gauge2] = remove_subleading(out, original);
        if (!(back == ode)) return false;
        if (!(gauge.log_derivative + gauge2.log_derivative).is_zero()) return false;
    }
    for (int trial = 0; trial < 20; ++trial) {
        RatFun a1 = rnd_ratfun(rng), a0 = rnd_ratfun(rng);
        LinearODE ode("x", {RatFun(Rational(1)), a1, a0});
        auto [out, gauge] = remove_subleading(ode, RatFun());
        RatFun b0 = a0 - a1.derivative() / RatFun(Rational(2)) - a1 * a1 / RatFun(Rational(4));
        if (!(out.coeff_of_deriv(0) == b0)) return false;
        if (!out.coeff_of_deriv(1).is_zero()) return false;
    }
    return true;
}

bool criterion6() {
    // (m, k, a, b, c0)
    std::vector<std::array<Rational, 5>> tuples = {
        {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(3), Rational(1), Rational(1), Rational(5)},
        {Rational(1), Rational(2), Rational(-1), Rational(3), Rational(2)},
        {Rational(3), Rational(1), Rational(2), Rational(-1), Rational(-4)},
        {Rational(1, 2), Rational(1), Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(1, 2), Rational(-2), Rational(-2), Rational(1)},
        {Rational(5), Rational(2), Rational(1), Rational(1), Rational(7)},
        {Rational(1), Rational(-1), Rational(1), Rational(1), Rational(2)},
        {Rational(3, 2), Rational(1), Rational(2), Rational(1), Rational(-1)},
        {Rational(4), Rational(3), Rational(-1), Rational(-1), Rational(6)},
    };
    for (const auto& [m, k, a, b, c0] : tuples) {
        NormalizedSecondOrder ns = complete_square(m, 0, c0, 2 * m + k, 0, a * b * k * k);
        LinearODE ode = to_gegenbauer(ns);
        if (!(ode.coeff_of_deriv(2) == RatFun(UniPoly{1, 0, -1}))) return false;
        Rational mid = (2 * m + k) / m - 3 * m / c0;
        if (!(ode.coeff_of_deriv(1) == RatFun(UniPoly{0, mid}))) return false;
        if (!(ode.coeff_of_deriv(0) == RatFun(a * b * k * k / (c0 * m)))) return false;
    }
    return true;
}

bool criterion7() {
    for (int i = -5; i < 5; ++i) {
        for (int j = -5; j < 5; ++j) {
            Rational mu(i, 2), nu(j, 3);
            HypergeomParams h = gegenbauer_to_hypergeometric(mu, nu);
            if (h.a + h.b + 1 != 2 * h.c) return false;
        }
    }
    std::vector<PZParams> sets = {
        {1, 1, 3, 1, 1},   // real surd pair
        {0, 1, 1, 1, 1},   // rational pair
        {1, -1, -1, 1, 1}, // complex pair
        {1, 1, 1, 2, 1},   {2, -1, 1, 1, 2},
    };
    for (const PZParams& prm : sets) {
        LegendreParams lp = legendre_parameters(prm);
        Rational C = (prm.m * prm.m - prm.k * prm.k) / (4 * prm.m * prm.m) -
                     prm.a * prm.b * prm.k * prm.k / (prm.m * lp.c0);
        for (const QuadRoot& nu : {lp.nu1, lp.nu2}) {
            if (!nu.is_complex) {
                Surd res = nu.re * nu.re + nu.re + Surd(C);
                if (!res.is_zero()) return false;
            } else {
                Surd re_part = nu.re * nu.re - nu.im * nu.im + nu.re + Surd(C);
                Surd im_part = nu.im * (Rational(2) * nu.re + Surd(Rational(1)));
                if (!re_part.is_zero() || !im_part.is_zero()) return false;
            }
        }
    }
    return true;
}

bool criterion8() {
    auto start = std::chrono::steady_clock::now();

    CriticalPointSet five = finite_critical_points(PZParams{1, 1, -3, 1, 1});
    if (five.points.size() != 5) return false;
    if (!five.points[0].origin_flag) return false;
    for (size_t i = 1; i < five.points.size(); ++i) {
        double x = five.points[i].x.to_double();
        double q = ((x * x - 3) * x * x) + 1;  // x-cleared representative
        if (!(std::abs(q) <= 1e-12)) return false;
    }

    for (const PZParams& prm : {PZParams{1, 1, 0, 2, 1}, PZParams{0, 0, 1, 1, 0},
                                PZParams{0, 1, 0, 2, 1}, PZParams{1, 0, 0, 2, 1}}) {
        CriticalPointSet set = finite_critical_points(classify_family(prm));
        if (set.points.size() != 1 || !set.points[0].origin_flag) return false;
    }

    // round-trip property on the parameter grid
    std::vector<Rational> coeffs;
    for (int n = -2; n <= 2; ++n) coeffs.push_back(n);
    std::vector<Rational> exps;
    for (int n = -4; n <= 4; ++n) exps.push_back(Rational(n, 2));
    long classified = 0;
    for (const auto& a : coeffs)
        for (const auto& b : coeffs)
            for (const auto& c : coeffs)
                for (const auto& m : exps)
                    for (const auto& k : exps) {
                        PZParams prm{a, b, c, m, k};
                        FamilyClass cls = classify_family(prm);
                        if (cls.tag == FamilyTag::NonPolynomial) continue;
                        ++classified;
                        if (!(instantiate_family(cls) == build_field(prm))) return false;
                    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return classified > 100 && secs < 5.0;
}

bool criterion9() {
    for (auto [b, c] : std::vector<std::pair<double, double>>{{1, 1}, {2, 1}, {1, 3}}) {
        Rhs2 rhs = [b = b, c = c](double t, double z) {
            return std::array<double, 2>{1.0,
                                         -(b / 2 + 0.5 * t * z) / (1.5 * t * t + c)};
        };
        Window win{-10, 10, -10, 10};
        for (int j = 1; j <= 20; ++j) {
            double t = 0.1 * j;
            Trajectory tr = integrate(rhs, 0.0, 0.25, t, 1e-12, win);
            double closed = riccati_quadrature(b, c, 0.0, 0.25, t);
            if (!(std::abs(closed - tr.samples.back().y) <= 1e-7)) return false;
        }
    }
    return true;
}

bool criterion10() {
    for (auto [b, c] : std::vector<std::pair<Rational, Rational>>{
             {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        PlanarPolySystem sys = showcase(b, c);
        PortraitData data = phase_portrait(sys, Window{}, 16);
        double sx = to_double(-3 * b * b / (2 * c));
        bool node_ok = false, saddle_ok = false;
        for (const auto& cp : data.critical_points) {
            std::string kind = to_string(cp.kind);
            if (cp.x == 0.0 && cp.y == 0.0) {
                node_ok = (b > 0) ? kind == "HyperbolicUnstableNode"
                                  : kind == "HyperbolicStableNode";
            } else if (std::abs(cp.x - sx) < 1e-12 && cp.y == 0.0) {
                saddle_ok = kind == "HyperbolicSaddle";
            }
        }
        if (!node_ok || !saddle_ok) return false;
        PortraitData again = phase_portrait(sys, Window{}, 16);
        if (render_svg(data) != render_svg(again)) return false;
        if (render_csv(data) != render_csv(again)) return false;
    }
    return true;
}

}  // namespace

int main() {
    run(1, "exact eigenvalues of the showcase field at both finite points", criterion1);
    run(2, "U1/U2 chart systems match the displays term for term", criterion2);
    run(3, "nilpotent point at infinity: (alpha, a, beta, b) = (5, -c^2, 2, 4c)", criterion3);
    run(4, "pipeline residuals <= 1e-7 with control >= 1e-2, under 5 s", criterion4);
    run(5, "gauge transformation: exact recomposition and order-2 closed form", criterion5);
    run(6, "Gegenbauer reduction exact on 10 rational tuples", criterion6);
    run(7, "hypergeometric identity a+b+1=2c and exact nu residuals", criterion7);
    run(8, "critical-point inventory and family round-trip, under 5 s", criterion8);
    run(9, "Riccati quadrature matches RK integration at 20 sample times", criterion9);
    run(10, "portrait topology per (b, c) quadrant and deterministic rendering", criterion10);
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
