#include "pz/portrait.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace pz {

std::string to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

std::string to_string(Termination t) {
    switch (t) {
        case Termination::TimeLimit: return "time limit";
        case Termination::WindowExit: return "window exit";
        case Termination::StepUnderflow: return "step underflow";
        case Termination::NearCritical: return "near-critical";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------- integrator

namespace {

struct Vec2 {
    double x, y;
};

// Dormand-Prince 5(4) pair.
struct DpStep {
    Vec2 y5;      // 5th-order solution
    double err;   // scaled error norm of the embedded 4th-order difference
};

DpStep dp_step(const Rhs2& f, double x, double y, double h, double tol) {
    auto ev = [&](double px, double py) { return f(px, py); };
    auto k1 = ev(x, y);
    auto k2 = ev(x + h * (1.0 / 5) * k1[0], y + h * (1.0 / 5) * k1[1]);
    auto k3 = ev(x + h * (3.0 / 40 * k1[0] + 9.0 / 40 * k2[0]),
                 y + h * (3.0 / 40 * k1[1] + 9.0 / 40 * k2[1]));
    auto k4 = ev(x + h * (44.0 / 45 * k1[0] - 56.0 / 15 * k2[0] + 32.0 / 9 * k3[0]),
                 y + h * (44.0 / 45 * k1[1] - 56.0 / 15 * k2[1] + 32.0 / 9 * k3[1]));
    auto k5 = ev(x + h * (19372.0 / 6561 * k1[0] - 25360.0 / 2187 * k2[0] +
                          64448.0 / 6561 * k3[0] - 212.0 / 729 * k4[0]),
                 y + h * (19372.0 / 6561 * k1[1] - 25360.0 / 2187 * k2[1] +
                          64448.0 / 6561 * k3[1] - 212.0 / 729 * k4[1]));
    auto k6 = ev(x + h * (9017.0 / 3168 * k1[0] - 355.0 / 33 * k2[0] + 46732.0 / 5247 * k3[0] +
                          49.0 / 176 * k4[0] - 5103.0 / 18656 * k5[0]),
                 y + h * (9017.0 / 3168 * k1[1] - 355.0 / 33 * k2[1] + 46732.0 / 5247 * k3[1] +
                          49.0 / 176 * k4[1] - 5103.0 / 18656 * k5[1]));
    double x5 = x + h * (35.0 / 384 * k1[0] + 500.0 / 1113 * k3[0] + 125.0 / 192 * k4[0] -
                         2187.0 / 6784 * k5[0] + 11.0 / 84 * k6[0]);
    double y5 = y + h * (35.0 / 384 * k1[1] + 500.0 / 1113 * k3[1] + 125.0 / 192 * k4[1] -
                         2187.0 / 6784 * k5[1] + 11.0 / 84 * k6[1]);
    auto k7 = ev(x5, y5);
    double x4 = x + h * (5179.0 / 57600 * k1[0] + 7571.0 / 16695 * k3[0] + 393.0 / 640 * k4[0] -
                         92097.0 / 339200 * k5[0] + 187.0 / 2100 * k6[0] + 1.0 / 40 * k7[0]);
    double y4 = y + h * (5179.0 / 57600 * k1[1] + 7571.0 / 16695 * k3[1] + 393.0 / 640 * k4[1] -
                         92097.0 / 339200 * k5[1] + 187.0 / 2100 * k6[1] + 1.0 / 40 * k7[1]);
    double sx = tol * (1.0 + std::abs(x5)), sy = tol * (1.0 + std::abs(y5));
    double ex = (x5 - x4) / sx, ey = (y5 - y4) / sy;
    DpStep st;
    st.y5 = {x5, y5};
    st.err = std::sqrt(0.5 * (ex * ex + ey * ey));
    return st;
}

}  // namespace

Trajectory integrate(const Rhs2& rhs, double x0, double y0, double tmax, double tol,
                     const Window& window, const std::vector<std::pair<double, double>>& critical,
                     Direction dir) {
    if (!(tol > 0) || !(tmax > 0)) throw DomainError("integrate requires tol > 0 and tmax > 0");
    Trajectory tr;
    tr.x0 = x0;
    tr.y0 = y0;
    tr.direction = dir;
    tr.terminated = Termination::TimeLimit;
    const double sign = (dir == Direction::Forward) ? 1.0 : -1.0;
    Rhs2 f = [&](double x, double y) {
        auto v = rhs(x, y);
        return std::array<double, 2>{sign * v[0], sign * v[1]};
    };

    double tau = 0, x = x0, y = y0;
    tr.samples.push_back({0.0, x, y});
    double h = std::min(1e-3, tmax);
    const size_t max_samples = 200000;

    while (tau < tmax && tr.samples.size() < max_samples) {
        if (h > tmax - tau) h = tmax - tau;
        DpStep st = dp_step(f, x, y, h, tol);
        if (!std::isfinite(st.y5.x) || !std::isfinite(st.y5.y) || !std::isfinite(st.err)) {
            h *= 0.5;
            if (h < 1e-12) {
                tr.terminated = Termination::StepUnderflow;
                return tr;
            }
            continue;
        }
        if (st.err > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(st.err, -0.2));
            if (h < 1e-12) {
                tr.terminated = Termination::StepUnderflow;
                return tr;
            }
            continue;
        }
        tau += h;
        x = st.y5.x;
        y = st.y5.y;
        tr.samples.push_back({sign * tau, x, y});
        if (!window.contains(x, y)) {
            tr.terminated = Termination::WindowExit;
            return tr;
        }
        for (const auto& [cx, cy] : critical) {
            if (std::hypot(x - cx, y - cy) < 1e-8) {
                tr.terminated = Termination::NearCritical;
                return tr;
            }
        }
        double fac = (st.err == 0) ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(st.err, -0.2)));
        h *= fac;
    }
    tr.terminated = Termination::TimeLimit;
    return tr;
}

Trajectory integrate(const PlanarPolySystem& sys, std::pair<double, double> seed, double tmax,
                     double tol) {
    Rhs2 rhs = [&sys](double x, double y) {
        return std::array<double, 2>{sys.P.eval(x, y), sys.Q.eval(x, y)};
    };
    Window big{-1e6, 1e6, -1e6, 1e6};
    return integrate(rhs, seed.first, seed.second, tmax, tol, big);
}

// ---------------------------------------------------------------- quadrature

namespace {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                        0.140653259715525, 0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

std::pair<double, double> gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc, resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double f1 = f(c - hl * kXgk[j]), f2 = f(c + hl * kXgk[j]);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    return {resk * hl, std::abs((resk - resg) * hl)};
}

double gk_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth) {
    auto [val, err] = gk15(f, a, b);
    if (err <= tol || depth > 50) return val;
    double c = 0.5 * (a + b);
    return gk_adaptive(f, a, c, tol / 2, depth + 1) + gk_adaptive(f, c, b, tol / 2, depth + 1);
}

}  // namespace

double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    return gk_adaptive(f, a, b, tol, 0);
}

double riccati_quadrature(double b, double c, double t0, double z0, double t) {
    // 3s^2 + 2c must stay positive on the path
    double lo = std::min(t0, t), hi = std::max(t0, t);
    double smin = (lo <= 0 && 0 <= hi) ? 0.0 : std::min(std::abs(lo), std::abs(hi));
    if (3 * smin * smin + 2 * c <= 0) throw DomainError("3t^2 + 2c <= 0 on the integration path");

    double K = z0 * std::pow(3 * t0 * t0 + 2 * c, 1.0 / 6);
    double integral = gauss_kronrod(
        [&](double s) { return b * std::pow(3 * s * s + 2 * c, -5.0 / 6); }, t0, t, 1e-10);
    return (K - integral) * std::pow(3 * t * t + 2 * c, -1.0 / 6);
}

// ------------------------------------------------------------- verification

namespace {

// 4th-order central difference on a uniform grid.
double d4(const std::vector<double>& a, size_t i, double dg) {
    return (8 * (a[i + 1] - a[i - 1]) - (a[i + 2] - a[i - 2])) / (12 * dg);
}

}  // namespace

TransportSamples transport(const std::vector<double>& s, const std::vector<double>& w,
                           double dgrid) {
    size_t n = s.size();
    if (n < 9 || w.size() != n) throw DomainError("transport requires >= 9 matched samples");
    TransportSamples ts;
    ts.s = s;
    ts.w = w;
    ts.w1.assign(n, 0.0);
    ts.w2.assign(n, 0.0);
    std::vector<double> sdot(n, 0.0);
    for (size_t i = 2; i + 2 < n; ++i) {
        sdot[i] = d4(s, i, dgrid);
        if (std::abs(sdot[i]) < 1e-10)
            throw SingularMap("change of variables stalls: ds/dgrid below 1e-10");
        ts.w1[i] = d4(w, i, dgrid) / sdot[i];
    }
    for (size_t i = 4; i + 4 < n; ++i) ts.w2[i] = d4(ts.w1, i, dgrid) / sdot[i];
    ts.lo = 4;
    ts.hi = static_cast<int>(n) - 5;
    return ts;
}

double residual_norm(const TransportSamples& ts,
                     const std::function<std::vector<double>(double, double, double, double)>& terms,
                     int n_samples) {
    if (ts.hi < ts.lo) throw DomainError("no valid transported samples");
    double max_term = 0, max_res = 0;
    int count = std::max(1, n_samples);
    for (int j = 0; j < count; ++j) {
        size_t i = static_cast<size_t>(ts.lo + (static_cast<long>(ts.hi - ts.lo) * j) /
                                                   std::max(1, count - 1));
        std::vector<double> tv = terms(ts.s[i], ts.w[i], ts.w1[i], ts.w2[i]);
        double sum = 0;
        for (double t : tv) {
            sum += t;
            max_term = std::max(max_term, std::abs(t));
        }
        max_res = std::max(max_res, std::abs(sum));
    }
    if (max_term == 0) return 0;
    return max_res / max_term;
}

VerificationReport verify_pipeline(const PZParams& prm, double x0, double y0, double t_end,
                                   int n_samples) {
    VerificationReport rep;
    const double a = to_double(prm.a), b = to_double(prm.b), c = to_double(prm.c);
    const double m = to_double(prm.m), k = to_double(prm.k);
    const double c0 = c - 2 * a * b * m;
    if (m == 0) throw ZeroM();
    if (c0 == 0) throw ZeroC0();
    const double q0 = c0 / m, l1 = (2 * m + k) / m, lam = a * b * k * k / (m * m);
    const double G = l1 - 3 / q0, Lam = lam / q0, mu = -(m + k) / (2 * m);
    const double nuprod = a * b * k * k / (m * c0) - (m * m - k * k) / (4 * m * m);

    // generalized field
    auto monos = build_field(prm).monomials();
    auto Q = [&](double x, double y) {
        double s = 0;
        for (const auto& mn : monos)
            s += to_double(mn.coeff) * std::pow(x, to_double(mn.xexp)) * (mn.ydeg ? y : 1.0);
        return s;
    };
    // Riccati time map t(x, y) and its partials (closed-form map record)
    auto tmap = [&](double x, double y) {
        return y * std::pow(x, -m) - a * std::pow(x, k) - b * std::pow(x, -k);
    };
    auto tdot = [&](double x, double y) {
        double dtdx = -m * y * std::pow(x, -m - 1) - a * k * std::pow(x, k - 1) +
                      b * k * std::pow(x, -k - 1);
        double dtdy = std::pow(x, -m);
        return dtdx * y + dtdy * Q(x, y);
    };
    // augmented state (x, y, h) with h' = (log w)' = g(t) * t', g = a k x^k/(m t^2 + c0)
    auto rhs3 = [&](const std::array<double, 3>& s) {
        double x = s[0], y = s[1];
        double t = tmap(x, y);
        double g = a * k * std::pow(x, k) / (m * t * t + c0);
        return std::array<double, 3>{y, Q(x, y), g * tdot(x, y)};
    };

    // dg near 1e-3 balances finite-difference truncation against roundoff
    const int N = std::max(200, static_cast<int>(std::lround(t_end / 1e-3)));
    const double dg = t_end / N;
    std::vector<double> xs(N + 1), ys(N + 1), hs(N + 1);
    std::array<double, 3> st{x0, y0, 0.0};
    xs[0] = x0;
    ys[0] = y0;
    hs[0] = 0;
    for (int i = 0; i < N; ++i) {
        auto k1 = rhs3(st);
        auto at = [&](const std::array<double, 3>& kk, double f) {
            return std::array<double, 3>{st[0] + f * kk[0], st[1] + f * kk[1], st[2] + f * kk[2]};
        };
        auto k2 = rhs3(at(k1, dg / 2));
        auto k3 = rhs3(at(k2, dg / 2));
        auto k4 = rhs3(at(k3, dg));
        for (int j = 0; j < 3; ++j) st[j] += dg / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        if (!(st[0] > 1e-9) || !std::isfinite(st[0]) || !std::isfinite(st[1]))
            throw SingularMap("source orbit left the domain x > 0 of the change of variables");
        xs[size_t(i) + 1] = st[0];
        ys[size_t(i) + 1] = st[1];
        hs[size_t(i) + 1] = st[2];
    }

    std::vector<double> tt(N + 1), zz(N + 1), gg(N + 1), xi(N + 1), zeta(N + 1), ww(N + 1),
        uL(N + 1);
    double hshift = hs[N / 2];  // keep w = exp(h) well-scaled
    for (int i = 0; i <= N; ++i) {
        size_t u = static_cast<size_t>(i);
        tt[u] = tmap(xs[u], ys[u]);
        zz[u] = std::pow(xs[u], k);
        gg[u] = a * k * zz[u] / (m * tt[u] * tt[u] + c0);
        if (q0 <= 0) throw ZeroQ0();
        xi[u] = tt[u] / std::sqrt(tt[u] * tt[u] + q0);
        zeta[u] = (1 - xi[u]) / 2;
        ww[u] = std::exp(hs[u] - hshift);
        uL[u] = std::pow(1 - xi[u] * xi[u], mu / 2) * ww[u];
    }

    auto add_stage = [&](const std::string& name, double r) {
        rep.stages.push_back({name, r});
        rep.max_residual = std::max(rep.max_residual, r);
    };

    // stage 1: Riccati, first order in z(t)
    TransportSamples tz = transport(tt, zz, dg);
    auto riccati_terms = [&](double cc) {
        return [=](double t, double z, double z1, double) {
            return std::vector<double>{(-m * t * t + 2 * m * a * b - cc) * z1,
                                       -(b * k + k * t * z + a * k * z * z)};
        };
    };
    add_stage("riccati", residual_norm(tz, riccati_terms(c), n_samples));
    rep.control_residual = residual_norm(tz, riccati_terms(c + 1), n_samples);

    // stage 2: second-order linear equation in log-derivative form g = w'/w
    TransportSamples tg = transport(tt, gg, dg);
    add_stage("linear", residual_norm(
                            tg,
                            [&](double t, double g, double g1, double) {
                                double P2 = m * t * t + c0;
                                return std::vector<double>{P2 * P2 * (g1 + g * g),
                                                           (2 * m + k) * t * P2 * g, a * b * k * k};
                            },
                            n_samples));

    // stage 3: normalized form (monic leading coefficient)
    add_stage("normalized", residual_norm(
                                tg,
                                [&](double t, double g, double g1, double) {
                                    double P2 = t * t + q0;
                                    return std::vector<double>{P2 * P2 * (g1 + g * g),
                                                               l1 * t * P2 * g, lam};
                                },
                                n_samples));

    // stage 4: Gegenbauer form in xi
    TransportSamples tu = transport(xi, ww, dg);
    add_stage("gegenbauer", residual_norm(
                                tu,
                                [&](double s, double u, double u1, double u2) {
                                    return std::vector<double>{(1 - s * s) * u2, G * s * u1,
                                                               Lam * u};
                                },
                                n_samples));

    // stage 5: hypergeometric form in zeta = (1 - xi)/2
    TransportSamples th = transport(zeta, ww, dg);
    add_stage("hypergeometric",
              residual_norm(
                  th,
                  [&](double s, double u, double u1, double u2) {
                      return std::vector<double>{s * (1 - s) * u2, -(G / 2) * (1 - 2 * s) * u1,
                                                 Lam * u};
                  },
                  n_samples));

    // stage 6: associated Legendre equation for u = (1 - xi^2)^(mu/2) w
    TransportSamples tl = transport(xi, uL, dg);
    add_stage("legendre", residual_norm(
                              tl,
                              [&](double s, double u, double u1, double u2) {
                                  return std::vector<double>{
                                      (1 - s * s) * u2, -2 * s * u1,
                                      (nuprod - mu * mu / (1 - s * s)) * u};
                              },
                              n_samples));

    rep.notes.push_back(
        "derivative transport by 4th-order Richardson-refined central differences on the "
        "integration grid");
    rep.notes.push_back("control residual perturbs the Riccati constant coefficient by 1");
    return rep;
}

// ----------------------------------------------------------------- portrait

namespace {

UniPoly y0_slice(const BiPoly& q) {
    std::vector<Rational> c;
    for (const auto& [key, v] : q.terms()) {
        if (key.second != 0) continue;
        if (key.first >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(key.first) + 1);
        c[static_cast<size_t>(key.first)] += v;
    }
    return UniPoly(std::move(c));
}

}  // namespace

PortraitData phase_portrait(const PlanarPolySystem& sys, const Window& window, int n_seeds) {
    PortraitData pd;
    pd.window = window;

    std::vector<std::pair<double, double>> crits;
    BiPoly yterm = BiPoly::term(1, 0, 1);
    if (sys.P == yterm) {
        UniPoly q = y0_slice(sys.Q);
        if (!q.is_zero()) {
            for (const Rational& r : rational_roots(q)) {
                CriticalPoint cp{ExactValue::rational(r), 0, r == 0};
                Classification cls = linearize(sys, cp);
                pd.critical_points.push_back({to_double(r), 0.0, cls.kind, to_string(r)});
                crits.push_back({to_double(r), 0.0});
            }
        }
    }
    if (sys.degree() >= 1) pd.equator_points = infinity_analysis(sys);

    std::vector<std::pair<double, double>> seeds;
    int nb = std::max(4, n_seeds / 2);
    double W = window.xmax - window.xmin, H = window.ymax - window.ymin;
    double per = 2 * (W + H);
    for (int i = 0; i < nb; ++i) {
        double d = per * i / nb;
        double x, y;
        if (d < W) {
            x = window.xmin + d;
            y = window.ymin;
        } else if (d < W + H) {
            x = window.xmax;
            y = window.ymin + (d - W);
        } else if (d < 2 * W + H) {
            x = window.xmax - (d - W - H);
            y = window.ymax;
        } else {
            x = window.xmin;
            y = window.ymax - (d - 2 * W - H);
        }
        seeds.push_back({x, y});
    }
    int ng = std::max(1, static_cast<int>(std::floor(std::sqrt(double(std::max(1, n_seeds - nb))))));
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j)
            seeds.push_back({window.xmin + W * (i + 0.5) / ng, window.ymin + H * (j + 0.5) / ng});
    for (const auto& [cx, cy] : crits)
        for (int d = 0; d < 8; ++d) {
            double ang = 2 * 3.14159265358979323846 * d / 8;
            seeds.push_back({cx + 1e-3 * std::cos(ang), cy + 1e-3 * std::sin(ang)});
        }

    Rhs2 rhs = [&sys](double x, double y) {
        return std::array<double, 2>{sys.P.eval(x, y), sys.Q.eval(x, y)};
    };
    for (const auto& seed : seeds) {
        if (!window.contains(seed.first, seed.second)) continue;
        for (Direction dir : {Direction::Forward, Direction::Backward})
            pd.trajectories.push_back(
                integrate(rhs, seed.first, seed.second, 30.0, 1e-8, window, crits, dir));
    }
    return pd;
}

// ----------------------------------------------------------------- renderers

namespace {

const char* kind_color(PointKind k) {
    switch (k) {
        case PointKind::HyperbolicSaddle:
        case PointKind::Saddle: return "#d62728";
        case PointKind::HyperbolicStableNode:
        case PointKind::StableNode: return "#1f77b4";
        case PointKind::HyperbolicUnstableNode:
        case PointKind::UnstableNode: return "#ff7f0e";
        case PointKind::HyperbolicFocus:
        case PointKind::FocusOrCenter: return "#9467bd";
        case PointKind::HyperbolicCenterCandidate: return "#2ca02c";
        default: return "#7f7f7f";
    }
}

}  // namespace

std::string render_svg(const PortraitData& data) {
    const Window& w = data.window;
    auto mx = [&](double x) { return (x - w.xmin) / (w.xmax - w.xmin) * 800.0; };
    auto my = [&](double y) { return 800.0 - (y - w.ymin) / (w.ymax - w.ymin) * 800.0; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\" stroke=\"black\"/>\n";
    if (w.xmin < 0 && w.xmax > 0)
        s += "<line x1=\"" + format_double(mx(0)) + "\" y1=\"0\" x2=\"" + format_double(mx(0)) +
             "\" y2=\"800\" stroke=\"#cccccc\"/>\n";
    if (w.ymin < 0 && w.ymax > 0)
        s += "<line x1=\"0\" y1=\"" + format_double(my(0)) + "\" x2=\"800\" y2=\"" +
             format_double(my(0)) + "\" stroke=\"#cccccc\"/>\n";

    for (size_t i = 0; i < data.trajectories.size(); ++i) {
        const Trajectory& tr = data.trajectories[i];
        if (tr.samples.size() < 2) continue;
        std::string pts;
        for (const Sample& sm : tr.samples) {
            if (!pts.empty()) pts += " ";
            pts += format_double(mx(sm.x)) + "," + format_double(my(sm.y));
        }
        s += "<polyline fill=\"none\" stroke=\"#4682b4\" stroke-width=\"1\" points=\"" + pts +
             "\"/>\n";
        // arrowhead at the midpoint sample
        size_t mid = tr.samples.size() / 2;
        if (mid + 1 < tr.samples.size()) {
            double ax = mx(tr.samples[mid].x), ay = my(tr.samples[mid].y);
            double bx = mx(tr.samples[mid + 1].x), by = my(tr.samples[mid + 1].y);
            double dx = bx - ax, dy = by - ay;
            double nrm = std::hypot(dx, dy);
            if (nrm > 1e-12) {
                dx /= nrm;
                dy /= nrm;
                double px = -dy, py = dx;
                auto p = [&](double X, double Y) {
                    return format_double(X) + "," + format_double(Y);
                };
                s += "<polygon class=\"arrow\" fill=\"#4682b4\" points=\"" +
                     p(ax + 6 * dx, ay + 6 * dy) + " " + p(ax - 3 * dx + 3 * px, ay - 3 * dy + 3 * py) +
                     " " + p(ax - 3 * dx - 3 * px, ay - 3 * dy - 3 * py) + "\"/>\n";
            }
        }
    }

    for (const PortraitPoint& cp : data.critical_points) {
        s += "<circle class=\"cp\" cx=\"" + format_double(mx(cp.x)) + "\" cy=\"" +
             format_double(my(cp.y)) + "\" r=\"5\" fill=\"" + kind_color(cp.kind) +
             "\" stroke=\"black\"/>\n";
    }

    // legend
    double ly = 20;
    for (const PortraitPoint& cp : data.critical_points) {
        s += "<circle cx=\"15\" cy=\"" + format_double(ly - 4) + "\" r=\"5\" fill=\"" +
             kind_color(cp.kind) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"25\" y=\"" + format_double(ly) + "\" font-size=\"12\">" +
             to_string(cp.kind) + " (" + format_double(cp.x) + ", " + format_double(cp.y) +
             ")</text>\n";
        ly += 16;
    }
    s += "</svg>\n";
    return s;
}

std::string render_csv(const PortraitData& data) {
    std::string s = "trajectory_id,t,x,y\n";
    for (size_t i = 0; i < data.trajectories.size(); ++i)
        for (const Sample& sm : data.trajectories[i].samples)
            s += std::to_string(i) + "," + format_double(sm.t) + "," + format_double(sm.x) + "," +
                 format_double(sm.y) + "\n";
    return s;
}

}  // namespace pz
