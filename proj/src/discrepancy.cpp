#include "corput/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace corput {

namespace {

void check_prefix(const TorusPointSet& x, int n) {
  if (n < 1 || n > static_cast<int>(x.size()))
    throw std::invalid_argument("prefix length out of range");
}

}  // namespace

int count_in_interval(const TorusPointSet& x, double alpha, double beta, int n) {
  if (!(0.0 <= alpha && alpha < beta && beta <= 1.0))
    throw std::invalid_argument("malformed interval");
  check_prefix(x, n);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    const double p = x.points[static_cast<std::size_t>(i)];
    if (alpha <= p && p < beta) ++c;
  }
  return c;
}

long long count_in_interval_exact(const TorusPointSet& x, const Rational& alpha,
                                  const Rational& beta, int n) {
  if (!(0 <= alpha && alpha < beta && beta <= 1))
    throw std::invalid_argument("malformed interval");
  check_prefix(x, n);
  if (!x.exact) throw std::invalid_argument("point set has no exact values");
  long long c = 0;
  for (int i = 0; i < n; ++i) {
    const Rational& p = (*x.exact)[static_cast<std::size_t>(i)];
    if (alpha <= p && p < beta) ++c;
  }
  return c;
}

double local_discrepancy_R(const TorusPointSet& x, double alpha, double beta,
                           int n) {
  return count_in_interval(x, alpha, beta, n) - (beta - alpha) * n;
}

Rational local_discrepancy_R_exact(const TorusPointSet& x, const Rational& alpha,
                                   const Rational& beta, int n) {
  return Rational(count_in_interval_exact(x, alpha, beta, n)) -
         (beta - alpha) * n;
}

namespace {

template <typename T>
void prefix_extremes(std::vector<T> vals, int n, T& ndp, T& ndm) {
  std::sort(vals.begin(), vals.end());
  ndp = T(0);
  ndm = T(0);
  long long cum = 0;
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    const T& v = vals[i];
    // just left of v: count cum; at/just right of v: count cum + mult
    const T below = T(n) * v - T(cum);
    if (below > ndm) ndm = below;
    cum += static_cast<long long>(j - i);
    const T above = T(cum) - T(n) * v;
    if (above > ndp) ndp = above;
    i = j;
  }
}

}  // namespace

DiscrepancyReport extreme_discrepancy(const TorusPointSet& x, int n) {
  check_prefix(x, n);
  DiscrepancyReport rep;
  rep.n = n;
  rep.method = "geometric";
  if (x.exact) {
    std::vector<Rational> vals(x.exact->begin(), x.exact->begin() + n);
    Rational ndp, ndm;
    prefix_extremes(std::move(vals), n, ndp, ndm);
    rep.d_plus_exact = ndp / n;
    rep.d_minus_exact = ndm / n;
    rep.d_exact = (ndp + ndm) / n;
    rep.d_plus = to_double(*rep.d_plus_exact);
    rep.d_minus = to_double(*rep.d_minus_exact);
    rep.d = to_double(*rep.d_exact);
    rep.error_bound = 0.0;
  } else {
    std::vector<double> vals(x.points.begin(), x.points.begin() + n);
    double ndp, ndm;
    prefix_extremes(std::move(vals), n, ndp, ndm);
    rep.d_plus = ndp / n;
    rep.d_minus = ndm / n;
    rep.d = (ndp + ndm) / n;
    rep.error_bound = 1e-12;
  }
  return rep;
}

LevequeResult leveque_bound(const TorusPointSet& x, int n, long long k_max) {
  check_prefix(x, n);
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  constexpr double kPi = std::numbers::pi;
  std::vector<std::complex<double>> sums(static_cast<std::size_t>(k_max),
                                         std::complex<double>(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    const double p = x.points[static_cast<std::size_t>(i)];
    const std::complex<double> w = std::polar(1.0, 2.0 * kPi * p);
    std::complex<double> z = w;
    for (long long k = 1; k <= k_max; ++k) {
      sums[static_cast<std::size_t>(k - 1)] += z;
      z *= w;
    }
  }
  double partial = 0.0;
  for (long long k = 1; k <= k_max; ++k) {
    const double mod = std::abs(sums[static_cast<std::size_t>(k - 1)]) / n;
    partial += mod * mod / (static_cast<double>(k) * static_cast<double>(k));
  }
  LevequeResult res;
  res.k_max = k_max;
  res.bracket_partial = 6.0 / (kPi * kPi) * partial;
  res.bracket_tail = 6.0 / (kPi * kPi * static_cast<double>(k_max));
  res.bound = std::cbrt(res.bracket_partial + res.bracket_tail);
  return res;
}

}  // namespace corput
