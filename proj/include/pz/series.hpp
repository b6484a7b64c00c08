#ifndef PZ_SERIES_HPP
#define PZ_SERIES_HPP

#include <utility>
#include <vector>

#include "pz/unipoly.hpp"

namespace pz {

// Formal power series truncated at order N: coefficients of x^0 .. x^{N-1}
// are stored, terms of degree >= N are unknown. Arithmetic never claims
// coefficients beyond the common truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order)) {}
    TruncatedSeries(std::vector<Rational> coeffs, int order)
        : c_(std::move(coeffs)) {
        c_.resize(static_cast<size_t>(order));
    }
    static TruncatedSeries from_poly(const UniPoly& p, int order) {
        TruncatedSeries s(order);
        for (int k = 0; k < order; ++k) s.c_[static_cast<size_t>(k)] = p.coeff(k);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    Rational coeff(int k) const {
        return (k >= 0 && k < order()) ? c_[static_cast<size_t>(k)] : Rational(0);
    }
    void set_coeff(int k, const Rational& v) { c_.at(static_cast<size_t>(k)) = v; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[size_t(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[size_t(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i)
            for (int j = 0; i + j < r.order(); ++j)
                r.c_[size_t(i + j)] += a.coeff(i) * b.coeff(j);
        return r;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        TruncatedSeries r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    TruncatedSeries operator-() const { return Rational(-1) * *this; }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries pow(int e) const {
        TruncatedSeries r(order());
        r.c_[0] = 1;
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

    std::string str(const std::string& var = "x") const {
        UniPoly p(c_);
        return p.str(var) + " + O(" + var + "^" + std::to_string(order()) + ")";
    }

private:
    std::vector<Rational> c_;
};

// First nonzero coefficient and its index; throws AllZero when every stored
// coefficient vanishes (the caller's "Phi == 0" branch).
inline std::pair<Rational, int> series_leading_term(const TruncatedSeries& s) {
    for (int k = 0; k < s.order(); ++k)
        if (s.coeff(k) != 0) return {s.coeff(k), k};
    throw AllZero();
}

}  // namespace pz

#endif
