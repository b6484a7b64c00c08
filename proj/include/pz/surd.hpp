#ifndef PZ_SURD_HPP
#define PZ_SURD_HPP

#include <cmath>
#include <string>

#include "pz/rational.hpp"

namespace pz {

// Quadratic surd p + q*sqrt(d) with rational p, q and a nonnegative integer
// radicand d. Normalized so that d is square-reduced (small square factors
// pulled out, perfect squares folded into the rational part) and d = 0
// whenever the value is rational.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& rational) : p_(rational) {}  // NOLINT: implicit by design
    Surd(Rational p, Rational q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
        normalize();
    }

    // sqrt of a nonnegative rational, exact: sqrt(n/m) = sqrt(n*m)/m.
    static Surd sqrt_of(const Rational& r) {
        if (r < 0) throw DomainError("Surd::sqrt_of of a negative rational");
        if (r == 0) return Surd(Rational(0));
        Int n = numerator(r), m = denominator(r);
        return Surd(Rational(0), Rational(1, m), n * m);
    }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coeff() const { return q_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return q_ == 0; }
    const Rational& as_rational() const {
        if (!is_rational()) throw DomainError("surd is irrational");
        return p_;
    }

    double to_double() const {
        double root = std::sqrt(d_.convert_to<double>());
        return pz::to_double(p_) + pz::to_double(q_) * root;
    }

    friend Surd operator+(const Surd& a, const Surd& b) {
        require_compatible(a, b);
        return Surd(a.p_ + b.p_, a.q_ + b.q_, a.q_ != 0 ? a.d_ : b.d_);
    }
    friend Surd operator-(const Surd& a, const Surd& b) {
        require_compatible(a, b);
        return Surd(a.p_ - b.p_, a.q_ - b.q_, a.q_ != 0 ? a.d_ : b.d_);
    }
    Surd operator-() const { return Surd(-p_, -q_, d_); }
    friend Surd operator*(const Surd& a, const Surd& b) {
        require_compatible(a, b);
        Int d = a.q_ != 0 ? a.d_ : b.d_;
        return Surd(a.p_ * b.p_ + a.q_ * b.q_ * Rational(d), a.p_ * b.q_ + a.q_ * b.p_, d);
    }
    friend Surd operator*(const Rational& s, const Surd& a) { return Surd(s * a.p_, s * a.q_, a.d_); }
    Surd conjugate() const { return Surd(p_, -q_, d_); }
    Surd inverse() const {
        Rational norm = p_ * p_ - q_ * q_ * Rational(d_);
        if (norm == 0) throw DomainError("surd has no inverse");
        return Surd(p_ / norm, -q_ / norm, d_);
    }

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
    }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    // Sign of the value; exact (compares p^2 against q^2 d when signs differ).
    int sign() const {
        if (q_ == 0) return p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
        int sp = p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
        int sq = q_ > 0 ? 1 : -1;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        Rational lhs = p_ * p_, rhs = q_ * q_ * Rational(d_);
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sp : sq;
    }

    std::string str() const {
        if (q_ == 0) return to_string(p_);
        std::string root = "sqrt(" + d_.str() + ")";
        std::string qs = (q_ == 1) ? root : (q_ == -1 ? "-" + root : to_string(q_) + "*" + root);
        if (p_ == 0) return qs;
        return to_string(p_) + (q_ > 0 ? " + " : " - ") +
               (q_ == 1 || q_ == -1 ? root : to_string(abs(q_)) + "*" + root);
    }

private:
    static void require_compatible(const Surd& a, const Surd& b) {
        if (a.q_ != 0 && b.q_ != 0 && a.d_ != b.d_)
            throw DomainError("surd arithmetic over distinct radicands");
    }

    void normalize() {
        if (d_ < 0) throw DomainError("negative radicand");
        if (q_ == 0 || d_ == 0) {
            q_ = 0;
            d_ = 0;
            return;
        }
        // pull out small square factors
        for (Int f = 2; f * f <= d_ && f < 1000; ++f) {
            while (d_ % (f * f) == 0) {
                d_ /= f * f;
                q_ *= Rational(f);
            }
        }
        Int s = sqrt(d_);
        if (s * s == d_) {
            p_ += q_ * Rational(s);
            q_ = 0;
            d_ = 0;
        } else if (d_ == 1) {
            p_ += q_;
            q_ = 0;
            d_ = 0;
        }
    }

    Rational p_ = 0, q_ = 0;
    Int d_ = 0;
};

}  // namespace pz

#endif
