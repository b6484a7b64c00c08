#ifndef PZ_BIPOLY_HPP
#define PZ_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "pz/series.hpp"
#include "pz/unipoly.hpp"

namespace pz {

// Sparse bivariate polynomial: (degree in x, degree in y) -> coefficient.
// Zero-valued terms are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly term(const Rational& coeff, int dx, int dy) {
        BiPoly p;
        p.add_term(coeff, dx, dy);
        return p;
    }

    void add_term(const Rational& coeff, int dx, int dy) {
        if (coeff == 0) return;
        auto it = terms_.find({dx, dy});
        if (it == terms_.end()) {
            terms_.emplace(Key{dx, dy}, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [k, v] : terms_) d = std::max(d, k.second);
        return d;
    }
    Rational coeff(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(v, k.first, k.second);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.terms_) r.add_term(-v, k.first, k.second);
        return r;
    }
    BiPoly operator-() const { return BiPoly() - *this; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_)
                r.add_term(va * vb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    friend BiPoly operator*(const Rational& s, const BiPoly& p) {
        BiPoly r;
        for (const auto& [k, v] : p.terms_) r.add_term(s * v, k.first, k.second);
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly dx() const {
        BiPoly r;
        for (const auto& [k, v] : terms_)
            if (k.first > 0) r.add_term(Rational(k.first) * v, k.first - 1, k.second);
        return r;
    }
    BiPoly dy() const {
        BiPoly r;
        for (const auto& [k, v] : terms_)
            if (k.second > 0) r.add_term(Rational(k.second) * v, k.first, k.second - 1);
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational s = 0;
        for (const auto& [k, v] : terms_) {
            Rational t = v;
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int j = 0; j < k.second; ++j) t *= y;
            s += t;
        }
        return s;
    }
    double eval(double x, double y) const {
        double s = 0;
        for (const auto& [k, v] : terms_) {
            double t = to_double(v);
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int j = 0; j < k.second; ++j) t *= y;
            s += t;
        }
        return s;
    }

    // Substitute (x, y) -> (x + x0, y + y0).
    BiPoly translated(const Rational& x0, const Rational& y0) const {
        BiPoly r;
        for (const auto& [k, v] : terms_) {
            UniPoly px = UniPoly{x0, 1}.pow(k.first);
            UniPoly py = UniPoly{y0, 1}.pow(k.second);
            for (int i = 0; i <= px.degree(); ++i)
                for (int j = 0; j <= py.degree(); ++j)
                    r.add_term(v * px.coeff(i) * py.coeff(j), i, j);
        }
        return r;
    }

    // Substitute y -> F(x), truncated at F's order.
    TruncatedSeries compose_y(const TruncatedSeries& F) const {
        int n = F.order();
        TruncatedSeries out(n);
        std::map<int, TruncatedSeries> fpow;  // cached powers of F
        for (const auto& [k, v] : terms_) {
            TruncatedSeries t(n);
            if (k.second == 0) {
                t.set_coeff(0, 1);
            } else {
                auto it = fpow.find(k.second);
                if (it == fpow.end()) it = fpow.emplace(k.second, F.pow(k.second)).first;
                t = it->second;
            }
            // multiply by v * x^{k.first}
            TruncatedSeries shifted(n);
            for (int j = 0; j + k.first < n; ++j)
                shifted.set_coeff(j + k.first, v * t.coeff(j));
            out += shifted;
        }
        return out;
    }

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const {
        if (terms_.empty()) return "0";
        // highest total degree first, then x-degree descending
        std::map<std::pair<int, int>, Rational> ordered;
        for (const auto& [k, v] : terms_)
            ordered[{-(k.first + k.second), -k.first}] = v;
        std::string out;
        for (const auto& [ok, v] : ordered) {
            int tot = -ok.first, dx = -ok.second, dy = tot - dx;
            bool neg = v < 0;
            Rational mag = neg ? Rational(-v) : v;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            bool unit = (mag == 1) && (dx + dy > 0);
            if (!unit) out += to_string(mag);
            auto app = [&](const std::string& var, int d) {
                if (d == 0) return;
                if (!out.empty() && (out.back() != '-' && out.back() != ' ') && unit == false)
                    out += "*";
                unit = false;  // separator handling for the second variable
                out += var;
                if (d > 1) out += "^" + std::to_string(d);
            };
            app(xv, dx);
            app(yv, dy);
        }
        return out;
    }

private:
    std::map<Key, Rational> terms_;
};

// Solves y + X(x, y) = 0 for y = F(x) with F(0) = 0, F'(0) = 0 by
// degree-by-degree coefficient matching. Requires that X has no constant
// term and that its pure-y linear coefficient differs from -1.
inline TruncatedSeries series_implicit_solve(const BiPoly& X, int N) {
    if (X.coeff(0, 0) != 0) throw NoFormalSolution();
    Rational lambda = X.coeff(0, 1);  // pure-y linear term
    if (lambda == -1) throw NoFormalSolution();
    TruncatedSeries F(N);
    for (int n = 1; n < N; ++n) {
        TruncatedSeries residual = F + X.compose_y(F);
        // coefficient of x^n depends linearly on f_n through (1 + lambda)
        F.set_coeff(n, F.coeff(n) - residual.coeff(n) / (1 + lambda));
    }
    return F;
}

}  // namespace pz

#endif
