#include "pz/transforms.hpp"

namespace pz {

RiccatiEq lienard_to_riccati(const PZParams& prm) {
    const Rational &a = prm.a, &b = prm.b, &c = prm.c, &m = prm.m, &k = prm.k;
    RiccatiEq eq;
    eq.lhs_coeff = UniPoly{2 * m * a * b - c, 0, -m};
    eq.rhs_c0 = b * k;
    eq.rhs_c1 = k;
    eq.rhs_c2 = a * k;
    return eq;
}

LinearODE riccati_to_linear(const PZParams& prm) {
    const Rational &a = prm.a, &b = prm.b, &m = prm.m, &k = prm.k;
    if (a * k == 0) throw SubstitutionUndefined();
    Rational c0 = prm.c0();
    UniPoly Q{c0, 0, m};                      // m t^2 + c0
    UniPoly middle = UniPoly{0, 2 * m + k} * Q;  // (2m+k) t (m t^2 + c0)
    return LinearODE("t", {RatFun(Q * Q), RatFun(middle), RatFun(Rational(a * b * k * k))});
}

NormalizedSecondOrder complete_square(const Rational& a2, const Rational& a1, const Rational& a0,
                                      const Rational& b1, const Rational& b0, const Rational& C) {
    if (a2 == 0) throw DegenerateLeading();
    NormalizedSecondOrder ns;
    Rational half = a1 / (2 * a2);
    ns.shift = half;
    ns.q0 = a0 / a2 - half * half;
    ns.l1 = b1 / a2;
    ns.l0 = -b1 * a1 / (2 * a2 * a2) + b0 / a2;
    ns.lambda = C / (a2 * a2);
    return ns;
}

std::pair<LinearODE, GaugeFactor> remove_subleading(const LinearODE& ode, const RatFun& keep) {
    if (ode.coeffs().front() != RatFun(Rational(1)))
        throw DomainError("remove_subleading requires a monic input");
    int n = ode.order();
    const RatFun& sub = ode.coeff_of_deriv(n - 1);
    RatFun e1 = (keep - sub) / RatFun(Rational(n));

    // ratios eps^(j)/eps, closed under differentiation
    std::vector<RatFun> e(static_cast<size_t>(n) + 1);
    e[0] = RatFun(Rational(1));
    if (n >= 1) e[1] = e1;
    for (int j = 1; j < n; ++j) e[size_t(j) + 1] = e[size_t(j)].derivative() + e[size_t(j)] * e1;

    // binomials up to n
    auto binom = [](int a, int b) {
        Rational r = 1;
        for (int i = 0; i < b; ++i) r = r * Rational(a - i) / Rational(i + 1);
        return r;
    };

    std::vector<RatFun> out(static_cast<size_t>(n) + 1);
    out[0] = RatFun(Rational(1));
    for (int j = n - 1; j >= 0; --j) {
        RatFun bj;
        for (int i = j; i <= n; ++i) {
            const RatFun ai = (i == n) ? RatFun(Rational(1)) : ode.coeff_of_deriv(i);
            bj += ai * RatFun(binom(i, j)) * e[size_t(i - j)];
        }
        out[size_t(n - j)] = bj;
    }
    return {LinearODE(ode.var(), std::move(out)), GaugeFactor{e1}};
}

LinearODE to_gegenbauer(const NormalizedSecondOrder& ns) {
    if (ns.l0 != 0) throw NonzeroL0();
    if (ns.q0 == 0) throw ZeroQ0();
    UniPoly lead{1, 0, -1};  // 1 - xi^2
    UniPoly mid{0, ns.l1 - 3 / ns.q0};
    return LinearODE("xi", {RatFun(lead), RatFun(mid), RatFun(ns.lambda / ns.q0)});
}

HypergeomParams gegenbauer_to_hypergeometric(const Rational& mu, const Rational& nu) {
    return HypergeomParams{mu - nu, nu + mu + 1, mu + 1};
}

LinearODE legendre_to_hypergeometric(const Rational& mu, const Rational& nu) {
    UniPoly lead{0, -1, 1};               // xi(xi - 1)
    UniPoly mid{-(mu + 1), 2 * (mu + 1)};  // -(mu+1)(1 - 2 xi)
    return LinearODE("xi", {RatFun(lead), RatFun(mid), RatFun((mu - nu) * (mu + nu + 1))});
}

LinearODE hypergeometric_to_legendre(const Rational& mu, const Rational& nu) {
    UniPoly one_minus_x2{1, 0, -1};
    UniPoly mid = UniPoly{0, -2} * one_minus_x2;  // -2x(1-x^2), reproduced verbatim
    UniPoly zeroth = nu * (nu + 1) * one_minus_x2 - UniPoly(mu * mu);
    return LinearODE("x", {RatFun(one_minus_x2), RatFun(mid), RatFun(zeroth)});
}

LegendreParams legendre_parameters(const PZParams& prm) {
    const Rational &a = prm.a, &b = prm.b, &m = prm.m, &k = prm.k;
    if (m == 0) throw ZeroM();
    Rational c0 = prm.c0();
    if (c0 == 0) throw ZeroC0();
    LegendreParams lp;
    lp.c0 = c0;
    lp.mu = -(m + k) / (2 * m);
    Rational C = (m * m - k * k) / (4 * m * m) - a * b * k * k / (m * c0);
    auto [nu1, nu2] = solve_monic_quadratic(Rational(1), C);
    lp.nu1 = nu1;
    lp.nu2 = nu2;
    return lp;
}

PipelineReport full_pipeline(const PZParams& prm) {
    PipelineReport rep;
    rep.params = prm;

    rep.riccati = lienard_to_riccati(prm);
    rep.stages.push_back({"riccati", rep.riccati.str(),
                          "z = x^k, y = x^m (t + a x^k + b x^(-k)); z = z(t)"});
    rep.notes.push_back(
        "riccati constant term follows (-m t^2 + 2mab - c) dz/dt = bk + k t z + a k z^2; "
        "the worked biparametric example prints -b/2 where this convention gives +b/2");

    try {
        rep.linear = riccati_to_linear(prm);
    } catch (const Error& e) {
        throw StageError("riccati_to_linear", e.what());
    }
    rep.stages.push_back({"linear", rep.linear->str(),
                          "z = (m t^2 + c0)/(a k) * w'/w, c0 = c - 2abm"});

    const Rational &a = prm.a, &b = prm.b, &m = prm.m, &k = prm.k;
    Rational c0 = prm.c0();
    if (c0 == 0) throw StageError("legendre_parameters", ZeroC0().what());
    try {
        rep.normalized = complete_square(m, 0, c0, 2 * m + k, 0, a * b * k * k);
    } catch (const Error& e) {
        throw StageError("complete_square", e.what());
    }
    rep.stages.push_back(
        {"normalized",
         "(tau^2 + " + to_string(rep.normalized.q0) + ")^2 y'' + (" + to_string(rep.normalized.l1) +
             " tau)(tau^2 + " + to_string(rep.normalized.q0) + ") y' + " +
             to_string(rep.normalized.lambda) + " y = 0",
         "tau = t + " + to_string(rep.normalized.shift)});

    try {
        rep.gegenbauer = to_gegenbauer(rep.normalized);
    } catch (const Error& e) {
        throw StageError("to_gegenbauer", e.what());
    }
    rep.stages.push_back({"gegenbauer", rep.gegenbauer->str(),
                          "xi = tau/sqrt(tau^2 + q0), q0 = " + to_string(rep.normalized.q0)});

    // Map the produced Gegenbauer-form equation through xi = 1 - 2*zeta.
    // With middle coefficient G and zeroth Lambda this yields
    // zeta(1-zeta) y'' - (G/2)(1-2 zeta) y' + Lambda y = 0, whose
    // hypergeometric parameters satisfy a+b = -G-1, ab = -Lambda, c = -G/2.
    Rational G = rep.normalized.l1 - 3 / rep.normalized.q0;
    Rational Lam = rep.normalized.lambda / rep.normalized.q0;
    {
        UniPoly lead{0, 1, -1};        // zeta - zeta^2
        UniPoly mid{-G / 2, G};        // -(G/2)(1 - 2 zeta)
        rep.hypergeometric = LinearODE("zeta", {RatFun(lead), RatFun(mid), RatFun(Lam)});
    }
    rep.stages.push_back({"hypergeometric", rep.hypergeometric->str(), "xi = 1 - 2 zeta"});
    rep.notes.push_back("hypergeometric parameters: c = " + to_string(-G / 2) +
                        ", a+b = " + to_string(-G - 1) + ", ab = " + to_string(-Lam));

    try {
        rep.legendre = legendre_parameters(prm);
    } catch (const Error& e) {
        throw StageError("legendre_parameters", e.what());
    }
    rep.stages.push_back(
        {"legendre",
         "mu = " + to_string(rep.legendre->mu) + ", nu in {" + rep.legendre->nu1.str() + ", " +
             rep.legendre->nu2.str() + "}, c0 = " + to_string(rep.legendre->c0),
         "u = (1 - xi^2)^(mu/2) w"});

    return rep;
}

}  // namespace pz
