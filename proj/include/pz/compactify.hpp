#ifndef PZ_COMPACTIFY_HPP
#define PZ_COMPACTIFY_HPP

#include <string>
#include <vector>

#include "pz/critical.hpp"
#include "pz/pzfield.hpp"

namespace pz {

enum class Chart { U1, U2 };

std::string to_string(Chart ch);

// Compactified flow in one Poincare chart, after the v^(d-1) time rescaling.
// P_chart drives u, Q_chart drives v.
struct ChartSystem {
    Chart chart = Chart::U1;
    BiPoly P_chart, Q_chart;  // in (u, v)
    int degree_used = 0;
};

ChartSystem chart_transform(const PlanarPolySystem& sys, Chart chart);

struct InfinityPoint {
    Chart chart = Chart::U1;
    CriticalPoint point;  // (u, v) coordinates of the chart
    Classification cls;
    bool on_equator = true;
    std::vector<std::string> notes;
};

// Critical points of each chart system on the equator v = 0, classified;
// chart critical points found off the equator along u = 0 are reported too,
// flagged not-at-infinity.
std::vector<InfinityPoint> infinity_analysis(const PlanarPolySystem& sys);

// Rational roots of a nonzero rational-coefficient polynomial
// (rational-root theorem on the integer-scaled polynomial).
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace pz

#endif
