#include "pz/critical.hpp"

#include <algorithm>

namespace pz {

std::string to_string(PointKind k) {
    switch (k) {
        case PointKind::SaddleNode: return "SaddleNode";
        case PointKind::TwoHyperbolicSectors: return "TwoHyperbolicSectors";
        case PointKind::Saddle: return "Saddle";
        case PointKind::StableNode: return "StableNode";
        case PointKind::UnstableNode: return "UnstableNode";
        case PointKind::EllipticHyperbolic: return "EllipticHyperbolic";
        case PointKind::FocusOrCenter: return "FocusOrCenter";
        case PointKind::HyperbolicSaddle: return "HyperbolicSaddle";
        case PointKind::HyperbolicStableNode: return "HyperbolicStableNode";
        case PointKind::HyperbolicUnstableNode: return "HyperbolicUnstableNode";
        case PointKind::HyperbolicFocus: return "HyperbolicFocus";
        case PointKind::HyperbolicCenterCandidate: return "HyperbolicCenterCandidate";
        case PointKind::Degenerate: return "Degenerate";
        case PointKind::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

// Pure-x part of Qdot as a univariate polynomial (the y = 0 slice).
UniPoly pure_x_part(const GeneralizedSystem& sys) {
    std::vector<Rational> c;
    for (const auto& mn : sys.monomials()) {
        if (mn.ydeg != 0) continue;
        long e = to_long(mn.xexp);
        if (e >= static_cast<long>(c.size())) c.resize(static_cast<size_t>(e) + 1);
        c[static_cast<size_t>(e)] += mn.coeff;
    }
    return UniPoly(std::move(c));
}

void push_real_roots_of_power(CriticalPointSet& out, const Surd& rho, int gamma) {
    // real solutions of x^gamma = rho
    int s = rho.sign();
    if (s == 0) return;  // duplicate of the origin
    if (gamma % 2 == 0) {
        if (s < 0) {
            out.notes.push_back("even-index root of a negative value excluded (no real solution)");
            return;
        }
        out.points.push_back({ExactValue{rho, gamma, 1}, 0, false});
        out.points.push_back({ExactValue{rho, gamma, -1}, 0, false});
    } else {
        Surd mag = s > 0 ? rho : -rho;
        out.points.push_back({ExactValue{mag, gamma, s}, 0, false});
    }
}

}  // namespace

CriticalPointSet finite_critical_points(const FamilyClass& cls) {
    if (cls.tag == FamilyTag::NonPolynomial) throw NotPolynomial();
    CriticalPointSet out;
    GeneralizedSystem sys = instantiate_family(cls);
    UniPoly g = pure_x_part(sys);

    if (g.is_zero()) {
        out.points.push_back({ExactValue::rational(0), 0, true});
        out.notes.push_back("pure-x part vanishes identically: the whole line y = 0 is critical");
        return out;
    }

    // nonzero terms of g, ascending exponents
    std::vector<std::pair<int, Rational>> terms;
    for (int e = 0; e <= g.degree(); ++e)
        if (g.coeff(e) != 0) terms.push_back({e, g.coeff(e)});

    int e_min = terms.front().first;
    if (e_min >= 1) out.points.push_back({ExactValue::rational(0), 0, true});

    if (terms.size() == 2) {
        // c_hi x^{e_hi} + c_lo x^{e_lo} = 0 beyond the origin: x^gamma = -c_lo/c_hi
        int gamma = terms[1].first - terms[0].first;
        Rational rho = -terms[0].second / terms[1].second;
        push_real_roots_of_power(out, Surd(rho), gamma);
        if (cls.tag == FamilyTag::F2 && cls.r) {
            Rational closed = -2 * cls.params.c / (cls.params.b * cls.params.b * (*cls.r + 1));
            out.notes.push_back("paper closed form x^gamma = -2c/(b^2(r+1)) = " + to_string(closed) +
                                "; roots above solved directly from the instantiated polynomial");
        }
        if (cls.tag == FamilyTag::F5 && cls.r) {
            Rational closed = -2 * cls.params.c / (cls.params.a * (*cls.r + 1));
            out.notes.push_back("paper closed form x^gamma = -2c/(a(r+1)) = " + to_string(closed) +
                                "; roots above solved directly from the instantiated polynomial");
        }
    } else if (terms.size() == 3) {
        // trinomial with exponents in arithmetic progression (the F1 shape):
        // A u^2 + B u + C with u = x^gamma
        int gamma = terms[1].first - terms[0].first;
        if (terms[2].first - terms[1].first != gamma) {
            out.notes.push_back("unsupported exponent pattern; only the origin is reported");
            return out;
        }
        const Rational &A = terms[2].second, &B = terms[1].second, &C = terms[0].second;
        Rational disc = B * B - 4 * A * C;
        if (disc < 0) {
            out.complex_roots_excluded = true;
            out.notes.push_back("discriminant c^2 - 4a^2b^2m^2 < 0: nontrivial roots are complex");
            return out;
        }
        Surd root = Surd::sqrt_of(disc);
        Surd rho1 = Rational(1, 2) / A * (Surd(-B) + root);
        Surd rho2 = Rational(1, 2) / A * (Surd(-B) - root);
        push_real_roots_of_power(out, rho1, gamma);
        if (rho2 != rho1) push_real_roots_of_power(out, rho2, gamma);
        else out.notes.push_back("double root: coincident critical points merged");
    } else if (terms.size() > 3) {
        out.notes.push_back("unsupported term count; only the origin is reported");
    }
    // single term: only the origin (already added when e_min >= 1)
    if (terms.size() == 1 && e_min == 0)
        out.notes.push_back("constant pure-x part is nonzero: no finite critical points");
    return out;
}

CriticalPointSet finite_critical_points(const PZParams& prm) {
    FamilyClass cls = classify_family(prm);
    if (cls.tag != FamilyTag::NonPolynomial) return finite_critical_points(cls);

    // Generalized field with some negative monomial exponents. The y = 0
    // slice factors as x^(2m-2k-1) * (a^2 m x^(4k) + c x^(2k) + b^2 m);
    // roots are taken from the x-cleared polynomial representative.
    CriticalPointSet out;
    out.notes.push_back(
        "non-polynomial exponent set: roots taken from the x-cleared representative "
        "of x^(2m-2k-1) (a^2 m x^(4k) + c x^(2k) + b^2 m)");
    out.points.push_back({ExactValue::rational(0), 0, true});

    const Rational &a = prm.a, &b = prm.b, &c = prm.c, &m = prm.m, &k = prm.k;
    Rational twok_r = 2 * k;
    if (!is_integer(twok_r) || twok_r <= 0) {
        out.notes.push_back("2k is not a positive integer: only the origin is reported");
        return out;
    }
    int gamma = static_cast<int>(to_long(twok_r));

    Rational A = a * a * m, B = c, C = b * b * m;
    if (A == 0) {
        if (B == 0) {
            if (C != 0)
                out.notes.push_back("constant pure-x factor is nonzero: origin only");
            return out;
        }
        push_real_roots_of_power(out, Surd(-C / B), gamma);
        return out;
    }
    Rational disc = B * B - 4 * A * C;
    if (disc < 0) {
        out.complex_roots_excluded = true;
        out.notes.push_back("discriminant c^2 - 4a^2b^2m^2 < 0: nontrivial roots are complex");
        return out;
    }
    Surd root = Surd::sqrt_of(disc);
    Surd rho1 = Rational(1, 2) / A * (Surd(-B) + root);
    Surd rho2 = Rational(1, 2) / A * (Surd(-B) - root);
    push_real_roots_of_power(out, rho1, gamma);
    if (rho2 != rho1) push_real_roots_of_power(out, rho2, gamma);
    else out.notes.push_back("double root: coincident critical points merged");
    return out;
}

namespace {

Surd eval_x_axis(const BiPoly& p, const Surd& x) {
    Surd acc{Rational(0)};
    for (const auto& [key, v] : p.terms()) {
        if (key.second != 0) continue;
        Surd t{v};
        for (int i = 0; i < key.first; ++i) t = t * x;
        acc = acc + t;
    }
    return acc;
}

Classification classify_from_trace_det_exact(const Surd& T, const Surd& D, Classification cl) {
    int sd = D.sign();
    int st = T.sign();
    if (sd < 0) {
        cl.kind = PointKind::HyperbolicSaddle;
        cl.trace.push_back("det<0");
        return cl;
    }
    if (sd == 0) {
        cl.kind = PointKind::Degenerate;
        cl.trace.push_back("zero_eigenvalue");
        return cl;
    }
    Surd disc = T * T - Rational(4) * D;
    int sdisc = disc.sign();
    if (sdisc >= 0) {
        cl.kind = st < 0 ? PointKind::HyperbolicStableNode : PointKind::HyperbolicUnstableNode;
        cl.trace.push_back(st < 0 ? "real_same_sign_negative" : "real_same_sign_positive");
    } else if (st != 0) {
        cl.kind = PointKind::HyperbolicFocus;
        cl.trace.push_back(st < 0 ? "focus_stable" : "focus_unstable");
    } else {
        cl.kind = PointKind::HyperbolicCenterCandidate;
        cl.trace.push_back("pure_imaginary");
    }
    return cl;
}

}  // namespace

Classification linearize(const PlanarPolySystem& sys, const CriticalPoint& pt) {
    Classification cl;
    BiPoly Px = sys.P.dx(), Py = sys.P.dy(), Qx = sys.Q.dx(), Qy = sys.Q.dy();

    if (pt.x.is_rational()) {
        Rational x = pt.x.as_rational(), y = pt.y;
        Rational j11 = Px.eval(x, y), j12 = Py.eval(x, y);
        Rational j21 = Qx.eval(x, y), j22 = Qy.eval(x, y);
        Rational T = j11 + j22, D = j11 * j22 - j12 * j21;
        cl.eigenvalues = solve_monic_quadratic(-T, D);
        cl.trace.push_back("exact_rational_jacobian");
        return classify_from_trace_det_exact(Surd(T), Surd(D), cl);
    }
    if (pt.x.n == 1) {
        // surd abscissa, y = 0: Jacobian entries are surds over one radicand
        Surd x = pt.x.sgn < 0 ? -pt.x.rho : pt.x.rho;
        Surd j11 = eval_x_axis(Px, x), j12 = eval_x_axis(Py, x);
        Surd j21 = eval_x_axis(Qx, x), j22 = eval_x_axis(Qy, x);
        Surd T = j11 + j22, D = j11 * j22 - j12 * j21;
        cl.trace.push_back("exact_surd_jacobian");
        return classify_from_trace_det_exact(T, D, cl);
    }
    // n-th-root abscissa: numeric classification
    double x = pt.x.to_double(), y = to_double(pt.y);
    double T = Px.eval(x, y) + Qy.eval(x, y);
    double D = Px.eval(x, y) * Qy.eval(x, y) - Py.eval(x, y) * Qx.eval(x, y);
    cl.trace.push_back("numeric_jacobian");
    const double eps = 1e-9;
    if (D < -eps) {
        cl.kind = PointKind::HyperbolicSaddle;
    } else if (D > eps) {
        double disc = T * T - 4 * D;
        if (disc >= -eps)
            cl.kind = T < 0 ? PointKind::HyperbolicStableNode : PointKind::HyperbolicUnstableNode;
        else
            cl.kind = std::abs(T) > eps ? PointKind::HyperbolicFocus
                                        : PointKind::HyperbolicCenterCandidate;
    } else {
        cl.kind = PointKind::Degenerate;
    }
    return cl;
}

Classification classify_degenerate(const BiPoly& X, const BiPoly& Y, int N) {
    for (const auto& [key, v] : X.terms())
        if (key.first + key.second <= 1) throw NormalFormViolation();
    for (const auto& [key, v] : Y.terms())
        if (key.first + key.second <= 1) throw NormalFormViolation();

    Classification cl;
    TruncatedSeries F = series_implicit_solve(X, N);
    TruncatedSeries f = Y.compose_y(F);
    Rational a;
    int alpha = 0;
    try {
        auto [lead, idx] = series_leading_term(f);
        a = lead;
        alpha = idx;
    } catch (const AllZero&) {
        throw TruncationTooLow();
    }
    cl.alpha = alpha;
    cl.a_lead = a;

    TruncatedSeries phi = (X.dx() + Y.dy()).compose_y(F);
    bool phi_zero = false;
    Rational b;
    int beta = 0;
    try {
        auto [lead, idx] = series_leading_term(phi);
        b = lead;
        beta = idx;
        cl.beta = beta;
        cl.b_lead = b;
    } catch (const AllZero&) {
        phi_zero = true;
        cl.trace.push_back("phi_identically_zero");
    }

    if (alpha % 2 == 0) {
        cl.trace.push_back("alpha_even");
        if (!phi_zero && alpha > 2 * beta + 1) {
            cl.kind = PointKind::SaddleNode;
            cl.trace.push_back("a:alpha>2beta+1");
        } else {
            cl.kind = PointKind::TwoHyperbolicSectors;
            cl.trace.push_back(phi_zero ? "a:phi==0" : "a:alpha<2beta+1");
        }
        return cl;
    }
    cl.trace.push_back("alpha_odd");
    if (a > 0) {
        cl.kind = PointKind::Saddle;
        cl.trace.push_back("b:a>0");
        return cl;
    }
    cl.trace.push_back("c:a<0");
    if (phi_zero) {
        cl.kind = PointKind::FocusOrCenter;
        cl.trace.push_back("c6:phi==0");
        return cl;
    }
    bool node_window = alpha > 2 * beta + 1 ||
                       (alpha == 2 * beta + 1 && b * b + 4 * a * (beta + 1) >= 0);
    if (node_window) {
        if (beta % 2 == 0) {
            cl.kind = b < 0 ? PointKind::StableNode : PointKind::UnstableNode;
            cl.trace.push_back(alpha == 2 * beta + 1 ? "c2:beta_even" : "c1:beta_even");
        } else {
            cl.kind = PointKind::EllipticHyperbolic;
            cl.trace.push_back(alpha == 2 * beta + 1 ? "c4:beta_odd" : "c3:beta_odd");
        }
        return cl;
    }
    cl.kind = PointKind::FocusOrCenter;
    cl.trace.push_back(alpha < 2 * beta + 1 ? "c6:alpha<2beta+1" : "c5:discriminant<0");
    return cl;
}

Classification origin_structure_F1(const PZParams& prm) {
    if (prm.a == 0 || prm.b == 0 || prm.c == 0)
        throw WrongFamily("origin_structure_F1 requires nonzero a, b, c (the F1 pattern)");
    if (prm.c <= 0) throw WrongFamily("origin_structure_F1 requires c > 0");
    if (!is_integer(prm.m + prm.k))
        throw WrongFamily("origin_structure_F1 requires integer m + k");

    Classification cl;
    long alpha = to_long(2 * prm.m + 2 * prm.k - 1);
    long beta = to_long(prm.m + prm.k - 1);
    Rational abar = -prm.a * prm.a * prm.m;
    Rational bbar = prm.a * (2 * prm.m + prm.k);
    cl.alpha = static_cast<int>(alpha);
    cl.beta = static_cast<int>(beta);
    cl.a_lead = abar;
    cl.b_lead = bbar;
    cl.trace.push_back("closed_form_F1");
    cl.trace.push_back("alpha_odd");
    cl.trace.push_back("c:a<0");
    // alpha = 2 beta + 1 and bbar^2 + 4 abar (beta+1) = a^2 k^2 >= 0
    if (beta % 2 == 0) {
        cl.kind = bbar < 0 ? PointKind::StableNode : PointKind::UnstableNode;
        cl.trace.push_back("c2:beta_even");
    } else {
        cl.kind = PointKind::EllipticHyperbolic;
        cl.trace.push_back("c4:beta_odd");
    }
    return cl;
}

LyapunovCertificate lyapunov_certificate(const PZParams& prm, const Rational& c1,
                                         const Rational& c2, const Rational& c3) {
    if (prm.k != 0) throw WrongCase("lyapunov_certificate applies to k = 0, m >= 1");
    if (prm.m < 1) throw WrongCase("lyapunov_certificate applies to k = 0, m >= 1");
    LyapunovCertificate cert;
    cert.c1 = c1;
    cert.c2 = c2;
    cert.c3 = c3;
    cert.positive = (c1 > 0) && (4 * c1 * c3 - c2 * c2 >= 0);

    const Rational &a = prm.a, &b = prm.b, &c = prm.c, &m = prm.m;
    bool cond1 = (a * a * m + c + b * b * m) == 0;
    bool cond2 = (2 * m * c1 * (a + b) + m * c2) == 0;
    bool cond3 = (c2 + 4 * c3 * (a + b)) < 0;
    cert.derivative_conditions = {
        {"a^2 m + c + b^2 m = 0", cond1},
        {"2 m c1 (a+b) + m c2 = 0", cond2},
        {"c2 + 4 c3 (a+b) < 0", cond3},
    };
    cert.holds = cert.positive && cond1 && cond2 && cond3;
    cert.notes.push_back(
        "the m-odd and m-even condition lists coincide; the single shared list is used");
    return cert;
}

}  // namespace pz
