#pragma once

#include <optional>
#include <vector>

#include "corput/rational.hpp"

namespace corput {

// Ordered list of points on the unit torus [0,1). When `exact` is present it
// is a parallel list of exact rational values agreeing with the floats to
// 1e-15 entrywise.
struct TorusPointSet {
  std::vector<double> points;
  std::optional<std::vector<Rational>> exact;

  std::size_t size() const { return points.size(); }
};

TorusPointSet make_point_set(std::vector<double> pts);
TorusPointSet make_exact_point_set(std::vector<Rational> pts);

// Throws std::invalid_argument when a point is outside [0,1) or the exact
// list disagrees with the floats.
void validate(const TorusPointSet& ps);

// Sorted ascending by float value; the exact list is permuted alongside.
TorusPointSet sorted_copy(const TorusPointSet& ps);

// Largest exponent e over the exact denominators 2^e. Empty when exact
// values are absent or some denominator is not a power of two.
std::optional<int> max_dyadic_exponent(const TorusPointSet& ps);

}  // namespace corput
