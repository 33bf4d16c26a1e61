#pragma once

#include <utility>
#include <vector>

#include "corput/rational.hpp"

namespace corput {

// Continuous piecewise-affine function on [0,1] over exact rationals, in
// canonical breakpoint form: strictly increasing breakpoints from 0 to 1,
// no interior breakpoint where the left and right slopes agree. Evaluation
// outside [0,1] reduces the argument mod 1.
class PiecewiseAffine {
 public:
  PiecewiseAffine();  // the zero function

  // Validates ordering/range and canonicalizes (merges collinear points).
  static PiecewiseAffine from_breakpoints(std::vector<Rational> xs,
                                          std::vector<Rational> vs);

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return vs_; }

  Rational eval(const Rational& x) const;
  double eval_d(double x) const;

  PiecewiseAffine operator+(const PiecewiseAffine& other) const;
  PiecewiseAffine negate() const;
  // x -> f(1 - x)
  PiecewiseAffine reflect() const;
  // x -> f(frac(c x)); requires f(0) = f(1).
  PiecewiseAffine scale_periodic(long long c) const;

  Rational max_value() const;
  Rational min_value() const;

  bool operator==(const PiecewiseAffine&) const = default;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> vs_;
};

struct AffineLine {
  Rational slope;
  Rational icept;

  Rational at(const Rational& x) const { return slope * x + icept; }
};

// Breakpoints (x, value) of max over the lines restricted to [lo, hi]:
// the two endpoints plus every crossing strictly inside.
std::vector<std::pair<Rational, Rational>> upper_envelope(
    std::vector<AffineLine> lines, const Rational& lo, const Rational& hi);

}  // namespace corput
