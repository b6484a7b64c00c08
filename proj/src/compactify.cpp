#include "pz/compactify.hpp"

#include <algorithm>
#include <set>

namespace pz {

std::string to_string(Chart ch) { return ch == Chart::U1 ? "U1" : "U2"; }

namespace {

// v^d * R(1/v, u/v) for U1; v^d * R(u/v, 1/v) for U2.
BiPoly lift(const BiPoly& R, int d, Chart chart) {
    BiPoly out;
    for (const auto& [key, c] : R.terms()) {
        int du = (chart == Chart::U1) ? key.second : key.first;
        out.add_term(c, du, d - key.first - key.second);
    }
    return out;
}

}  // namespace

ChartSystem chart_transform(const PlanarPolySystem& sys, Chart chart) {
    int d = sys.degree();
    if (d < 0) throw DomainError("chart_transform requires a nonzero system");
    ChartSystem cs;
    cs.chart = chart;
    cs.degree_used = d;
    BiPoly u = BiPoly::term(1, 1, 0);
    BiPoly v = BiPoly::term(1, 0, 1);
    BiPoly Pl = lift(sys.P, d, chart), Ql = lift(sys.Q, d, chart);
    if (chart == Chart::U1) {
        cs.P_chart = Ql - u * Pl;
        cs.Q_chart = -(v * Pl);
    } else {
        cs.P_chart = Pl - u * Ql;
        cs.Q_chart = -(v * Ql);
    }
    return cs;
}

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<Int> divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    std::set<Rational> roots;

    // strip the x^t factor
    int lo = 0;
    while (p.coeff(lo) == 0) ++lo;
    if (lo > 0) roots.insert(0);
    int deg = p.degree() - lo;
    if (deg > 0) {
        // integer-scale the stripped polynomial
        Int L = 1;
        for (int i = 0; i <= deg; ++i) {
            Int den = boost::multiprecision::denominator(p.coeff(lo + i));
            L = L / int_gcd(L, den) * den;
        }
        std::vector<Int> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            Rational scaled = p.coeff(lo + i) * Rational(L);
            c[static_cast<size_t>(i)] = boost::multiprecision::numerator(scaled);
        }
        for (const Int& num : divisors(c.front()))
            for (const Int& den : divisors(c.back()))
                for (int sgn : {1, -1}) {
                    Rational cand = Rational(Rational(sgn) * Rational(num) / Rational(den));
                    if (roots.count(cand)) continue;
                    Rational acc = 0;
                    for (int i = deg; i >= 0; --i) acc = acc * cand + Rational(c[size_t(i)]);
                    if (acc == 0) roots.insert(cand);
                }
    }
    return std::vector<Rational>(roots.begin(), roots.end());
}

namespace {

// v = 0 slice of a chart polynomial, as a polynomial in u.
UniPoly equator_slice(const BiPoly& p) {
    std::vector<Rational> c;
    for (const auto& [key, v] : p.terms()) {
        if (key.second != 0) continue;
        if (key.first >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(key.first) + 1);
        c[static_cast<size_t>(key.first)] += v;
    }
    return UniPoly(std::move(c));
}

// u = 0 slice, as a polynomial in v.
UniPoly axis_slice(const BiPoly& p) {
    std::vector<Rational> c;
    for (const auto& [key, v] : p.terms()) {
        if (key.first != 0) continue;
        if (key.second >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(key.second) + 1);
        c[static_cast<size_t>(key.second)] += v;
    }
    return UniPoly(std::move(c));
}

// multiply the coefficient of each y^j term by s^j
BiPoly scale_y(const BiPoly& p, const Rational& s) {
    BiPoly out;
    for (const auto& [key, v] : p.terms()) {
        Rational f = v;
        for (int j = 0; j < key.second; ++j) f *= s;
        out.add_term(f, key.first, key.second);
    }
    return out;
}

PointKind flip_stability(PointKind k) {
    if (k == PointKind::StableNode) return PointKind::UnstableNode;
    if (k == PointKind::UnstableNode) return PointKind::StableNode;
    if (k == PointKind::HyperbolicStableNode) return PointKind::HyperbolicUnstableNode;
    if (k == PointKind::HyperbolicUnstableNode) return PointKind::HyperbolicStableNode;
    return k;
}

InfinityPoint analyze_chart_point(const ChartSystem& cs, const Rational& u0, const Rational& v0,
                                  bool on_equator) {
    InfinityPoint ip;
    ip.chart = cs.chart;
    ip.point = {ExactValue::rational(u0), v0, u0 == 0 && v0 == 0};
    ip.on_equator = on_equator;

    BiPoly Pt = cs.P_chart.translated(u0, v0);
    BiPoly Qt = cs.Q_chart.translated(u0, v0);
    Rational a11 = Pt.coeff(1, 0), a12 = Pt.coeff(0, 1);
    Rational a21 = Qt.coeff(1, 0), a22 = Qt.coeff(0, 1);
    Rational T = a11 + a22, D = a11 * a22 - a12 * a21;

    if (T != 0 || D != 0) {
        PlanarPolySystem loc{Pt, Qt};
        CriticalPoint origin{ExactValue::rational(0), 0, true};
        ip.cls = linearize(loc, origin);
        return ip;
    }

    // both eigenvalues zero: nilpotent or fully degenerate linear part
    if (a11 != 0 || a21 != 0 || a22 != 0 || a12 == 0) {
        ip.cls.kind = PointKind::Unclassified;
        ip.notes.push_back(
            "linear part is not in the nilpotent normal form (0 lambda; 0 0): "
            "normal-form reduction out of scope");
        return ip;
    }
    Rational lambda = a12;
    // rescale v -> lambda*w and time -> lambda*t to reach udot = w + X(u,w)
    BiPoly lin_v = BiPoly::term(lambda, 0, 1);
    BiPoly X = Rational(1) / lambda * scale_y(Pt - lin_v, lambda);
    BiPoly Y = Rational(1) / (lambda * lambda) * scale_y(Qt, lambda);
    try {
        ip.cls = classify_degenerate(X, Y, 16);
    } catch (const NormalFormViolation&) {
        ip.cls.kind = PointKind::Unclassified;
        ip.notes.push_back("nilpotent point rejected by the normal-form check");
        return ip;
    } catch (const TruncationTooLow&) {
        ip.cls.kind = PointKind::Unclassified;
        ip.notes.push_back("series truncation too low to resolve the leading behavior");
        return ip;
    }
    if (lambda < 0) {
        ip.cls.kind = flip_stability(ip.cls.kind);
        ip.notes.push_back("time rescaled by a negative factor: stability reversed");
    }
    return ip;
}

}  // namespace

std::vector<InfinityPoint> infinity_analysis(const PlanarPolySystem& sys) {
    std::vector<InfinityPoint> out;
    for (Chart chart : {Chart::U1, Chart::U2}) {
        ChartSystem cs = chart_transform(sys, chart);

        UniPoly eq = equator_slice(cs.P_chart);
        if (eq.is_zero()) {
            InfinityPoint ip;
            ip.chart = chart;
            ip.point = {ExactValue::rational(0), 0, true};
            ip.cls.kind = PointKind::Unclassified;
            ip.notes.push_back("the whole equator is critical in this chart");
            out.push_back(std::move(ip));
        } else {
            for (const Rational& u0 : rational_roots(eq))
                out.push_back(analyze_chart_point(cs, u0, 0, true));
        }

        // chart critical points along the u = 0 axis, off the equator
        UniPoly ax = axis_slice(cs.P_chart);
        if (!ax.is_zero()) {
            for (const Rational& v0 : rational_roots(ax)) {
                if (v0 == 0) continue;  // equator point, handled above
                if (cs.Q_chart.eval(Rational(0), v0) != 0) continue;
                auto ip = analyze_chart_point(cs, 0, v0, false);
                ip.notes.push_back("chart critical point off the equator: not at infinity");
                out.push_back(std::move(ip));
            }
        }
    }
    return out;
}

}  // namespace pz
