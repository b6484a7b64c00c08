#ifndef PZ_CRITICAL_HPP
#define PZ_CRITICAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "pz/pzfield.hpp"
#include "pz/quadroot.hpp"

namespace pz {

// Exact abscissa of a critical point: sign * rho^(1/n) with rho a
// nonnegative surd. n = 1 collapses to the surd itself.
struct ExactValue {
    Surd rho;
    int n = 1;
    int sgn = 1;

    static ExactValue rational(const Rational& r) {
        if (r < 0) return ExactValue{Surd(-r), 1, -1};
        return ExactValue{Surd(r), 1, 1};
    }

    bool is_rational() const { return n == 1 && rho.is_rational(); }
    Rational as_rational() const { return Rational(sgn) * rho.as_rational(); }

    double to_double() const {
        double base = rho.to_double();
        double v = (n == 1) ? base : std::pow(base, 1.0 / n);
        return sgn * v;
    }

    std::string str() const {
        std::string body = rho.str();
        if (n != 1) body = "(" + body + ")^(1/" + std::to_string(n) + ")";
        else if (!rho.is_rational()) body = "(" + body + ")";
        return (sgn < 0 ? "-" : "") + body;
    }
};

struct CriticalPoint {
    ExactValue x;
    Rational y = 0;  // always 0 for this family
    bool origin_flag = false;
};

struct CriticalPointSet {
    std::vector<CriticalPoint> points;
    bool complex_roots_excluded = false;
    std::vector<std::string> notes;
};

enum class PointKind {
    SaddleNode,
    TwoHyperbolicSectors,
    Saddle,
    StableNode,
    UnstableNode,
    EllipticHyperbolic,
    FocusOrCenter,
    HyperbolicSaddle,
    HyperbolicStableNode,
    HyperbolicUnstableNode,
    HyperbolicFocus,
    HyperbolicCenterCandidate,
    Degenerate,
    Unclassified
};

std::string to_string(PointKind k);

struct Classification {
    PointKind kind = PointKind::Unclassified;
    int alpha = 0;
    std::optional<int> beta;
    Rational a_lead;
    std::optional<Rational> b_lead;
    std::optional<std::pair<QuadRoot, QuadRoot>> eigenvalues;
    std::vector<std::string> trace;  // branch tags of the decision path
};

struct LyapunovCertificate {
    Rational c1, c2, c3;
    bool positive = false;
    std::vector<std::pair<std::string, bool>> derivative_conditions;
    bool holds = false;
    std::vector<std::string> notes;
};

CriticalPointSet finite_critical_points(const FamilyClass& cls);

// Same analysis on the generalized field directly: used for parameter sets
// whose monomial exponents are not all nonnegative integers, where the
// x^(2k) quadratic closed form still applies.
CriticalPointSet finite_critical_points(const PZParams& prm);

Classification linearize(const PlanarPolySystem& sys, const CriticalPoint& pt);

// Theorem-1.1 decision tree for the nilpotent normal form
// xdot = y + X(x,y), ydot = Y(x,y).
Classification classify_degenerate(const BiPoly& X, const BiPoly& Y, int N);

// Closed-form F1 origin classification (alpha = 2m+2k-1, beta = m+k-1,
// a = -a^2 m, b = a(2m+k)); must agree with classify_degenerate.
Classification origin_structure_F1(const PZParams& prm);

LyapunovCertificate lyapunov_certificate(const PZParams& prm, const Rational& c1,
                                         const Rational& c2, const Rational& c3);

}  // namespace pz

#endif
