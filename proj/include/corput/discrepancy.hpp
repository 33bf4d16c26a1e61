#pragma once

#include <optional>
#include <string>

#include "corput/points.hpp"

namespace corput {

// Extreme and one-sided discrepancies of a point-set prefix. Exact rationals
// are filled when the points carry exact values (error_bound 0); otherwise
// the doubles stand alone with a 1e-12 comparison slack.
struct DiscrepancyReport {
  int n = 0;
  double d = 0.0;
  double d_plus = 0.0;
  double d_minus = 0.0;
  std::optional<Rational> d_exact, d_plus_exact, d_minus_exact;
  std::string method;  // "geometric" | "faure-series"
  double error_bound = 0.0;
};

// Number of the first n points inside [alpha, beta).
int count_in_interval(const TorusPointSet& x, double alpha, double beta, int n);
long long count_in_interval_exact(const TorusPointSet& x, const Rational& alpha,
                                  const Rational& beta, int n);

// A([alpha,beta), n, X) - (beta - alpha) n.
double local_discrepancy_R(const TorusPointSet& x, double alpha, double beta,
                           int n);
Rational local_discrepancy_R_exact(const TorusPointSet& x, const Rational& alpha,
                                   const Rational& beta, int n);

// Supremum over subintervals, computed via the one-sided prefix extremes:
// n D+ = max_i (C_i - n v_i), n D- = max_i (n v_i - C_{i-1}) over the sorted
// distinct values v_i with cumulative counts C_i, and D = D+ + D-. The
// one-sided limits at the jumps make the (possibly unattained) supremum exact.
DiscrepancyReport extreme_discrepancy(const TorusPointSet& x, int n);

// Cubic-root exponential-sum bound on the extreme discrepancy. The k-sum is
// truncated at k_max; the tail is majorized by 6/(pi^2 k_max) since every
// averaged exponential sum has modulus <= 1, so `bound` is a true upper
// bound for the full series expression.
struct LevequeResult {
  double bound = 0.0;
  double bracket_partial = 0.0;  // (6/pi^2) sum_{k<=k_max} |S_k/n|^2 / k^2
  double bracket_tail = 0.0;     // 6/(pi^2 k_max)
  long long k_max = 0;
};
LevequeResult leveque_bound(const TorusPointSet& x, int n, long long k_max);

}  // namespace corput
