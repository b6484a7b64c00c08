#ifndef PZ_TRANSFORMS_HPP
#define PZ_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pz/linear_ode.hpp"
#include "pz/pzfield.hpp"
#include "pz/quadroot.hpp"

namespace pz {

// lhs_coeff(t) * dz/dt = rhs_c0 + rhs_c1 * t * z + rhs_c2 * z^2
struct RiccatiEq {
    UniPoly lhs_coeff;
    Rational rhs_c0, rhs_c1, rhs_c2;

    friend bool operator==(const RiccatiEq& a, const RiccatiEq& b) {
        return a.lhs_coeff == b.lhs_coeff && a.rhs_c0 == b.rhs_c0 && a.rhs_c1 == b.rhs_c1 &&
               a.rhs_c2 == b.rhs_c2;
    }
    std::string str() const {
        return "(" + lhs_coeff.str("t") + ")*dz/dt = " + to_string(rhs_c0) + " + (" +
               to_string(rhs_c1) + ")*t*z + (" + to_string(rhs_c2) + ")*z^2";
    }
};

// The ratio eps'/eps of the gauge z = eps * y; eps itself is never materialized.
struct GaugeFactor {
    RatFun log_derivative;
};

// Q^2 y'' + L Q y' + lambda y = 0 with Q = tau^2 + q0, L = l1 tau + l0,
// tau = x + shift.
struct NormalizedSecondOrder {
    Rational q0, l1, l0, lambda, shift;

    friend bool operator==(const NormalizedSecondOrder& a, const NormalizedSecondOrder& b) {
        return a.q0 == b.q0 && a.l1 == b.l1 && a.l0 == b.l0 && a.lambda == b.lambda &&
               a.shift == b.shift;
    }
};

// z(1-z) y'' + (c - (a+b+1) z) y' - a b y = 0
struct HypergeomParams {
    Rational a, b, c;
};

struct LegendreParams {
    Rational mu;
    QuadRoot nu1, nu2;  // roots of nu^2 + nu + (m^2-k^2)/(4m^2) - abk^2/(m c0) = 0
    Rational c0;
};

RiccatiEq lienard_to_riccati(const PZParams& prm);

// (m t^2 + c0)^2 w'' + (2m+k) t (m t^2 + c0) w' + a b k^2 w = 0, c0 = c - 2abm.
LinearODE riccati_to_linear(const PZParams& prm);

NormalizedSecondOrder complete_square(const Rational& a2, const Rational& a1, const Rational& a0,
                                      const Rational& b1, const Rational& b0, const Rational& C);

// Gauge transformation removing (part of) the (n-1)-derivative coefficient,
// keeping `keep` as the retained coefficient. Input must be monic.
std::pair<LinearODE, GaugeFactor> remove_subleading(const LinearODE& ode, const RatFun& keep);

// (1 - xi^2) u'' + (l1 - 3/q0) xi u' + (lambda/q0) u = 0
LinearODE to_gegenbauer(const NormalizedSecondOrder& ns);

HypergeomParams gegenbauer_to_hypergeometric(const Rational& mu, const Rational& nu);

// Hypergeometric-form ODE obtained from the Legendre form:
// xi(xi-1) w'' - (mu+1)(1-2 xi) w' + (mu-nu)(mu+nu+1) w = 0
LinearODE legendre_to_hypergeometric(const Rational& mu, const Rational& nu);

// Paired inverse direction: the Legendre form itself,
// (1-x^2) y'' - 2x(1-x^2) y' + [nu(nu+1)(1-x^2) - mu^2] y = 0
LinearODE hypergeometric_to_legendre(const Rational& mu, const Rational& nu);

LegendreParams legendre_parameters(const PZParams& prm);

struct PipelineStage {
    std::string name;
    std::string equation;
    std::string change_of_variables;
};

struct PipelineReport {
    PZParams params;
    RiccatiEq riccati;
    std::optional<LinearODE> linear;      // second-order eq (2)
    NormalizedSecondOrder normalized;
    std::optional<LinearODE> gegenbauer;  // in xi
    std::optional<LinearODE> hypergeometric;  // in the half-plane variable
    std::optional<LegendreParams> legendre;
    std::vector<PipelineStage> stages;
    std::vector<std::string> notes;
};

// Chains the whole transformation, recording every intermediate equation
// and the change of variables feeding the numerical verifier.
PipelineReport full_pipeline(const PZParams& prm);

}  // namespace pz

#endif
