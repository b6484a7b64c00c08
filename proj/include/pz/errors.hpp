#ifndef PZ_ERRORS_HPP
#define PZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pz {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is the zero polynomial") {}
};

struct NoFormalSolution : Error {
    NoFormalSolution() : Error("degree-1 solvability condition fails: coefficient of y in X is -1") {}
};

struct AllZero : Error {
    AllZero() : Error("series is zero through its truncation order") {}
};

struct SubstitutionUndefined : Error {
    SubstitutionUndefined() : Error("substitution divides by a*k = 0") {}
};

struct DegenerateLeading : Error {
    DegenerateLeading() : Error("leading coefficient a2 = 0") {}
};

struct NonzeroL0 : Error {
    NonzeroL0() : Error("normalized form has l0 != 0") {}
};

struct ZeroQ0 : Error {
    ZeroQ0() : Error("q0 = 0") {}
};

struct ZeroC0 : Error {
    ZeroC0() : Error("c0 = c - 2abm = 0") {}
};

struct ZeroM : Error {
    ZeroM() : Error("m = 0") {}
};

struct NotPolynomial : Error {
    NotPolynomial() : Error("parameter set does not yield a polynomial system") {}
};

struct WrongFamily : Error {
    explicit WrongFamily(const std::string& what) : Error(what) {}
};

struct WrongCase : Error {
    explicit WrongCase(const std::string& what) : Error(what) {}
};

struct TruncationTooLow : Error {
    TruncationTooLow() : Error("leading term not determined within the truncation order") {}
};

struct NormalFormViolation : Error {
    NormalFormViolation() : Error("system is not in the normal form xdot = y + X with X, Y of degree >= 2") {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct SingularMap : Error {
    explicit SingularMap(const std::string& what) : Error(what) {}
};

struct StageError : Error {
    std::string stage;
    StageError(std::string stage_, const std::string& what)
        : Error("stage " + stage_ + ": " + what), stage(std::move(stage_)) {}
};

}  // namespace pz

#endif
