#ifndef PZ_RATFUN_HPP
#define PZ_RATFUN_HPP

#include <string>
#include <utility>

#include "pz/unipoly.hpp"

namespace pz {

// Rational function num/den in canonical form: gcd-reduced, monic denominator.
// Equality of rational functions is structural equality of the canonical form.
class RatFun {
public:
    RatFun() : num_(), den_{Rational(1)} {}
    RatFun(const Rational& r) : num_(r), den_{Rational(1)} {}  // NOLINT: implicit by design
    RatFun(UniPoly num, UniPoly den) { reduce(std::move(num), std::move(den)); }
    explicit RatFun(UniPoly num) : num_(std::move(num)), den_{Rational(1)} {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    double eval(double x) const { return num_.eval(x) / den_.eval(x); }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void reduce(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw ZeroDenominator();
        if (num.is_zero()) {
            num_ = {};
            den_ = UniPoly{Rational(1)};
            return;
        }
        UniPoly g = UniPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = UniPoly::divmod(num, g).first;
            den = UniPoly::divmod(den, g).first;
        }
        Rational lead = den.leading();
        num_ = num / lead;
        den_ = den / lead;
    }

    UniPoly num_, den_;
};

inline RatFun ratfun_simplify(const UniPoly& num, const UniPoly& den) { return RatFun(num, den); }

}  // namespace pz

#endif
