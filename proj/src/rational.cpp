#include "corput/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace corput {

Int floor_rat(const Rational& q) {
  Int n = rat_num(q);
  Int d = rat_den(q);  // always > 0 in canonical form
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

Rational frac1(const Rational& q) {
  Rational r = q - Rational(floor_rat(q));
  return r;
}

Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

std::string rational_str(const Rational& q) {
  Int n = rat_num(q);
  Int d = rat_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& input) {
  std::string s = input;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) return std::nullopt;

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string ns = s.substr(0, slash);
    std::string ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) return std::nullopt;
    Int n(ns), d(ds);
    if (d == 0) return std::nullopt;
    Rational q(n, d);
    return neg ? -q : q;
  }

  // decimal with optional exponent
  long long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = (es[0] == '-');
      es.erase(es.begin());
    }
    if (!all_digits(es) || es.size() > 6) return std::nullopt;
    exp10 = std::stoll(es);
    if (eneg) exp10 = -exp10;
  }
  std::string intpart = s, fracpart;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    intpart = s.substr(0, dot);
    fracpart = s.substr(dot + 1);
  }
  if (intpart.empty() && fracpart.empty()) return std::nullopt;
  if (!intpart.empty() && !all_digits(intpart)) return std::nullopt;
  if (!fracpart.empty() && !all_digits(fracpart)) return std::nullopt;

  Int num = intpart.empty() ? Int(0) : Int(intpart);
  Int den = 1;
  for (char c : fracpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  exp10 += 0;
  if (exp10 > 0)
    num *= pow_int(10, static_cast<unsigned>(exp10));
  else if (exp10 < 0)
    den *= pow_int(10, static_cast<unsigned>(-exp10));
  Rational q(num, den);
  return neg ? -q : q;
}

std::optional<Rational> snap_dyadic(double x, int l, double tol) {
  if (l < 0 || l > 62 || !std::isfinite(x)) return std::nullopt;
  const double scale = std::ldexp(1.0, l);  // 2^l
  const double r = std::round(x * scale);
  if (std::fabs(x - r / scale) > tol) return std::nullopt;
  Rational q(Int(static_cast<long long>(r)), pow_int(2, static_cast<unsigned>(l)));
  return q;
}

std::optional<int> dyadic_exponent(const Rational& q) {
  Int d = rat_den(q);
  if (d <= 0) return std::nullopt;
  if ((d & (d - 1)) != 0) return std::nullopt;
  return static_cast<int>(boost::multiprecision::msb(d));
}

}  // namespace corput
