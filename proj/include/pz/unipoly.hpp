#ifndef PZ_UNIPOLY_HPP
#define PZ_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pz/rational.hpp"

namespace pz {

// Univariate polynomial over Rational, coefficients ascending by degree.
// Canonical form: no trailing zero coefficients; the zero polynomial is
// the empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(const Rational& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    static UniPoly monomial(const Rational& coeff, int degree) {
        if (coeff == 0) return {};
        std::vector<Rational> c(static_cast<size_t>(degree) + 1);
        c.back() = coeff;
        return UniPoly(std::move(c));
    }
    static UniPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(k)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
        return UniPoly(std::move(c));
    }
    UniPoly operator-() const {
        std::vector<Rational> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& p) {
        if (s == 0) return {};
        std::vector<Rational> c(p.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& p, const Rational& s) { return s * p; }
    friend UniPoly operator/(const UniPoly& p, const Rational& s) { return Rational(1) / s * p; }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(i) * c_[i];
        return UniPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }
    double eval(double x) const {
        double v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
        return v;
    }

    UniPoly pow(int e) const {
        UniPoly r{Rational(1)};
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // p(x + s): composition with a shift of the variable.
    UniPoly shifted(const Rational& s) const {
        UniPoly r;
        UniPoly base{s, 1};  // x + s
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * base + UniPoly(*it);
        return r;
    }

    // Quotient and remainder; requires a nonzero divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw ZeroDenominator();
        UniPoly rem = a;
        std::vector<Rational> q;
        int db = b.degree();
        if (rem.degree() >= db) q.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= db) {
            int shift = rem.degree() - db;
            Rational factor = rem.leading() / b.leading();
            q[static_cast<size_t>(shift)] = factor;
            rem -= monomial(factor, shift) * b;
        }
        return {UniPoly(std::move(q)), rem};
    }

    // Monic gcd; gcd(0, 0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a / a.leading();
        return a;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rational ck = coeff(k);
            if (ck == 0) continue;
            bool neg = ck < 0;
            Rational mag = neg ? Rational(-ck) : ck;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            bool unit = (mag == 1) && k != 0;
            if (!unit) out += to_string(mag);
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly poly_derivative(const UniPoly& p) { return p.derivative(); }

}  // namespace pz

#endif
