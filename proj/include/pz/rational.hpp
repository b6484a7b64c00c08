#ifndef PZ_RATIONAL_HPP
#define PZ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pz/errors.hpp"

namespace pz {

// Exact scalar field for everything outside the portrait module.
// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + r.str());
    return numerator(r).convert_to<long>();
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p/q", "p", optional leading sign; used by the CLI flag parser.
inline Rational parse_rational(std::string_view s) {
    auto bad = [&] { return DomainError("cannot parse rational '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        throw bad();
    }
}

// Exact square root when the argument is a perfect square of a rational;
// returns false otherwise.
inline bool exact_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rational(sn, sd);
    return true;
}

}  // namespace pz

#endif
