#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace corput {

// Exact arithmetic carrier for every rational-valued quantity in the
// library. Arbitrary precision: denominators of the form (b-1) * b^j can
// grow without an overflow failure mode.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Int rat_den(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

Int floor_rat(const Rational& q);

// Fractional part, always in [0,1).
Rational frac1(const Rational& q);

Int pow_int(const Int& base, unsigned exp);

// Canonical text form: "13/32", "-3/4"; integers drop the denominator ("0").
std::string rational_str(const Rational& q);

// Accepts "p/q", plain integers and decimals ("0.35" -> 7/20, "2.5e-1" -> 1/4).
std::optional<Rational> parse_rational(const std::string& s);

// Nearest rational with denominator 2^l, or nullopt when farther than tol.
std::optional<Rational> snap_dyadic(double x, int l, double tol);

// Exponent e such that den(q) == 2^e, when the denominator is a power of two.
std::optional<int> dyadic_exponent(const Rational& q);

}  // namespace corput
