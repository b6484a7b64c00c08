#ifndef PZ_PZFIELD_HPP
#define PZ_PZFIELD_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pz/bipoly.hpp"

namespace pz {

// The five parameters of the Polyanin-Zaitsev family, all exact rationals.
struct PZParams {
    Rational a, b, c, m, k;

    Rational alpha() const { return a * (2 * m + k); }
    Rational beta() const { return b * (2 * m - k); }
    Rational c0() const { return c - 2 * a * b * m; }
};

// One monomial of Qdot in the generalized (possibly non-polynomial) system:
// coeff * x^xexp * y^ydeg with ydeg in {0, 1}. Pdot is always y.
struct GenMonomial {
    Rational coeff;
    Rational xexp;
    int ydeg = 0;

    friend bool operator==(const GenMonomial& a, const GenMonomial& b) {
        return a.coeff == b.coeff && a.xexp == b.xexp && a.ydeg == b.ydeg;
    }
};

struct PlanarPolySystem {
    BiPoly P, Q;

    int degree() const { return std::max(P.total_degree(), Q.total_degree()); }
};

// xdot = y, ydot = sum of monomials; exponents kept exact as rationals,
// equal (exponent, y-degree) monomials merged, zero coefficients dropped.
class GeneralizedSystem {
public:
    GeneralizedSystem() = default;
    explicit GeneralizedSystem(std::vector<GenMonomial> monos) {
        for (auto& mn : monos) add(mn);
    }

    void add(const GenMonomial& mn) {
        if (mn.coeff == 0) return;
        for (auto& e : monos_) {
            if (e.xexp == mn.xexp && e.ydeg == mn.ydeg) {
                e.coeff += mn.coeff;
                canonicalize();
                return;
            }
        }
        monos_.push_back(mn);
        canonicalize();
    }

    const std::vector<GenMonomial>& monomials() const { return monos_; }

    bool is_polynomial() const {
        for (const auto& mn : monos_)
            if (!is_integer(mn.xexp) || mn.xexp < 0) return false;
        return true;
    }

    PlanarPolySystem to_planar() const {
        if (!is_polynomial()) throw NotPolynomial();
        PlanarPolySystem sys;
        sys.P.add_term(1, 0, 1);
        for (const auto& mn : monos_)
            sys.Q.add_term(mn.coeff, static_cast<int>(to_long(mn.xexp)), mn.ydeg);
        return sys;
    }

    friend bool operator==(const GeneralizedSystem& a, const GeneralizedSystem& b) {
        return a.monos_ == b.monos_;
    }

    std::string str() const {
        if (monos_.empty()) return "0";
        std::string out;
        for (const auto& mn : monos_) {
            bool neg = mn.coeff < 0;
            Rational mag = neg ? Rational(-mn.coeff) : mn.coeff;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            bool unit = (mag == 1) && (mn.xexp != 0 || mn.ydeg != 0);
            if (!unit) out += to_string(mag);
            if (mn.xexp != 0) {
                if (!unit) out += "*";
                out += "x";
                if (mn.xexp != 1) out += "^(" + to_string(mn.xexp) + ")";
                unit = false;
            }
            if (mn.ydeg == 1) {
                if (!unit) out += "*";
                out += "y";
            }
        }
        return out;
    }

private:
    void canonicalize() {
        monos_.erase(std::remove_if(monos_.begin(), monos_.end(),
                                    [](const GenMonomial& mn) { return mn.coeff == 0; }),
                     monos_.end());
        std::sort(monos_.begin(), monos_.end(), [](const GenMonomial& a, const GenMonomial& b) {
            if (a.ydeg != b.ydeg) return a.ydeg > b.ydeg;
            return a.xexp > b.xexp;
        });
    }

    std::vector<GenMonomial> monos_;
};

enum class FamilyTag { F1, F2, F3, F4, F5, F6, F7, NonPolynomial };

std::string to_string(FamilyTag tag);

struct FamilyClass {
    FamilyTag tag = FamilyTag::NonPolynomial;
    std::optional<long> s, p, r;
    PZParams params;
    bool degenerate = false;  // the all-zero a=b=c=0 case, mapped to F4
};

// ydot = (a(2m+k) x^{m+k-1} + b(2m-k) x^{m-k-1}) y
//        - a^2 m x^{2m+2k-1} - c x^{2m-1} - b^2 m x^{2m-2k-1}
GeneralizedSystem build_field(const PZParams& prm);

FamilyClass classify_family(const PZParams& prm);

// System built from the family display with the class's integers; equals
// build_field(cls.params) monomial-for-monomial.
GeneralizedSystem instantiate_family(const FamilyClass& cls);

}  // namespace pz

#endif
