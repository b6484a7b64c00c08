#ifndef PZ_LINEAR_ODE_HPP
#define PZ_LINEAR_ODE_HPP

#include <string>
#include <utility>
#include <vector>

#include "pz/ratfun.hpp"

namespace pz {

// Homogeneous linear ODE a_n y^(n) + ... + a_1 y' + a_0 y = 0 with
// rational-function coefficients, stored from the nth-derivative
// coefficient down to the zeroth (n + 1 entries).
class LinearODE {
public:
    LinearODE(std::string var, std::vector<RatFun> coeffs_desc)
        : var_(std::move(var)), coeffs_(std::move(coeffs_desc)) {
        if (coeffs_.size() < 2) throw DomainError("LinearODE needs order >= 1");
        if (coeffs_.front().is_zero()) throw DomainError("LinearODE leading coefficient is zero");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& var() const { return var_; }
    const std::vector<RatFun>& coeffs() const { return coeffs_; }

    // coefficient multiplying y^(j)
    const RatFun& coeff_of_deriv(int j) const {
        return coeffs_.at(static_cast<size_t>(order() - j));
    }

    LinearODE with_monic_leading() const {
        std::vector<RatFun> c = coeffs_;
        RatFun lead = c.front();
        for (auto& ci : c) ci = ci / lead;
        return LinearODE(var_, std::move(c));
    }

    friend bool operator==(const LinearODE& a, const LinearODE& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        std::string out;
        int n = order();
        for (int j = n; j >= 0; --j) {
            const RatFun& c = coeff_of_deriv(j);
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.str(var_) + ")*y";
            if (j > 0) {
                out += "^(" + std::to_string(j) + ")";
            }
        }
        return out.empty() ? "0 = 0" : out + " = 0";
    }

private:
    std::string var_;
    std::vector<RatFun> coeffs_;
};

}  // namespace pz

#endif
