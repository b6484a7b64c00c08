#ifndef PZ_QUADROOT_HPP
#define PZ_QUADROOT_HPP

#include <utility>

#include "pz/surd.hpp"

namespace pz {

// A root of a monic quadratic with rational coefficients: either a real
// quadratic surd or a complex-conjugate record re +/- i*im.
struct QuadRoot {
    bool is_complex = false;
    Surd re;  // the full value when real
    Surd im;  // zero when real

    double real_double() const { return re.to_double(); }
    double imag_double() const { return im.to_double(); }

    friend bool operator==(const QuadRoot& a, const QuadRoot& b) {
        return a.is_complex == b.is_complex && a.re == b.re && a.im == b.im;
    }

    std::string str() const {
        if (!is_complex) return re.str();
        return re.str() + " +/- i*(" + im.str() + ")";
    }
};

// Roots of x^2 + B x + C = 0, exact.
inline std::pair<QuadRoot, QuadRoot> solve_monic_quadratic(const Rational& B, const Rational& C) {
    Rational disc = B * B - 4 * C;
    QuadRoot r1, r2;
    if (disc >= 0) {
        Surd root = Surd::sqrt_of(disc);
        r1.re = Rational(1, 2) * (Surd(-B) + root);
        r2.re = Rational(1, 2) * (Surd(-B) - root);
    } else {
        r1.is_complex = r2.is_complex = true;
        r1.re = r2.re = Surd(-B / 2);
        r1.im = Rational(1, 2) * Surd::sqrt_of(-disc);
        r2.im = -r1.im;
    }
    return {r1, r2};
}

}  // namespace pz

#endif
