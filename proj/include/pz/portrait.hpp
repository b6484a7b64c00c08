#ifndef PZ_PORTRAIT_HPP
#define PZ_PORTRAIT_HPP

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pz/compactify.hpp"
#include "pz/pzfield.hpp"
#include "pz/transforms.hpp"

namespace pz {

// This module is the only floating-point layer; everything else is exact.

enum class Direction { Forward, Backward };
enum class Termination { TimeLimit, WindowExit, StepUnderflow, NearCritical };

std::string to_string(Direction d);
std::string to_string(Termination t);

struct Sample {
    double t, x, y;
};

struct Window {
    double xmin = -4, xmax = 4, ymin = -4, ymax = 4;
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

struct Trajectory {
    std::vector<Sample> samples;
    double x0 = 0, y0 = 0;
    Direction direction = Direction::Forward;
    Termination terminated = Termination::TimeLimit;
};

// (x, y) -> (xdot, ydot)
using Rhs2 = std::function<std::array<double, 2>(double, double)>;

// Dormand-Prince 4(5) adaptive integration with window-exit, step-underflow
// (|h| < 1e-12) and near-critical (< 1e-8) stopping.
Trajectory integrate(const Rhs2& rhs, double x0, double y0, double tmax, double tol,
                     const Window& window,
                     const std::vector<std::pair<double, double>>& critical = {},
                     Direction dir = Direction::Forward);

Trajectory integrate(const PlanarPolySystem& sys, std::pair<double, double> seed, double tmax,
                     double tol);

// Adaptive 15-point Gauss-Kronrod quadrature.
double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double tol);

// Closed-form quadrature solution of the biparametric Riccati equation
// (-(3/2)t^2 - c) dz/dt = b/2 + (1/2) t z with z(t0) = z0:
// z(t) = (K - int b (3s^2+2c)^(-5/6) ds) (3t^2+2c)^(-1/6).
double riccati_quadrature(double b, double c, double t0, double z0, double t);

// Derivative transport for a change of variables sampled on a uniform grid:
// given s_i and w_i, returns dw/ds and d^2w/ds^2 by 4th-order central
// differences (Richardson-refined) in the grid parameter. The outer
// 4 points on each end carry no valid derivatives.
struct TransportSamples {
    std::vector<double> s, w, w1, w2;
    int lo = 0, hi = 0;  // index range [lo, hi] with valid w1, w2
};
TransportSamples transport(const std::vector<double>& s, const std::vector<double>& w,
                           double dgrid);

// Max |sum of terms| / max |term| over n_samples indices of a transported
// sample set; `terms(s, w, w1, w2)` lists the target equation's terms.
double residual_norm(const TransportSamples& ts,
                     const std::function<std::vector<double>(double, double, double, double)>& terms,
                     int n_samples);

struct StageResidual {
    std::string stage;
    double residual = 0;
};

struct VerificationReport {
    std::vector<StageResidual> stages;
    double max_residual = 0;
    double control_residual = 0;  // deliberately perturbed target
    std::vector<std::string> notes;
};

// Integrates the Lienard field numerically and checks every stage of
// full_pipeline by residuals after the closed-form change of variables.
VerificationReport verify_pipeline(const PZParams& prm, double x0, double y0, double t_end,
                                   int n_samples);

struct PortraitPoint {
    double x = 0, y = 0;
    PointKind kind = PointKind::Unclassified;
    std::string exact;  // exact abscissa when available
};

struct PortraitData {
    Window window;
    std::vector<Trajectory> trajectories;
    std::vector<PortraitPoint> critical_points;
    std::vector<InfinityPoint> equator_points;
};

PortraitData phase_portrait(const PlanarPolySystem& sys, const Window& window = Window{},
                            int n_seeds = 64);

// Deterministic renderers: 800x800 viewBox SVG; CSV with header
// trajectory_id,t,x,y and LF line endings.
std::string render_svg(const PortraitData& data);
std::string render_csv(const PortraitData& data);

// Shortest round-trip decimal formatting.
std::string format_double(double v);

}  // namespace pz

#endif
