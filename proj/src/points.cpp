#include "corput/points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corput {

TorusPointSet make_point_set(std::vector<double> pts) {
  TorusPointSet ps;
  ps.points = std::move(pts);
  validate(ps);
  return ps;
}

TorusPointSet make_exact_point_set(std::vector<Rational> pts) {
  TorusPointSet ps;
  ps.points.reserve(pts.size());
  for (const Rational& q : pts) ps.points.push_back(to_double(q));
  ps.exact = std::move(pts);
  validate(ps);
  return ps;
}

void validate(const TorusPointSet& ps) {
  for (double x : ps.points) {
    if (!(x >= 0.0 && x < 1.0))
      throw std::invalid_argument("point outside [0,1)");
  }
  if (ps.exact) {
    if (ps.exact->size() != ps.points.size())
      throw std::invalid_argument("exact list length mismatch");
    for (std::size_t i = 0; i < ps.points.size(); ++i) {
      const Rational& q = (*ps.exact)[i];
      if (q < 0 || q >= 1) throw std::invalid_argument("exact point outside [0,1)");
      if (std::fabs(ps.points[i] - to_double(q)) > 1e-15)
        throw std::invalid_argument("exact/float disagreement");
    }
  }
}

TorusPointSet sorted_copy(const TorusPointSet& ps) {
  std::vector<std::size_t> idx(ps.points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return ps.points[a] < ps.points[b]; });
  TorusPointSet out;
  out.points.reserve(idx.size());
  for (std::size_t i : idx) out.points.push_back(ps.points[i]);
  if (ps.exact) {
    std::vector<Rational> ex;
    ex.reserve(idx.size());
    for (std::size_t i : idx) ex.push_back((*ps.exact)[i]);
    out.exact = std::move(ex);
  }
  return out;
}

std::optional<int> max_dyadic_exponent(const TorusPointSet& ps) {
  if (!ps.exact) return std::nullopt;
  int best = 0;
  for (const Rational& q : *ps.exact) {
    auto e = dyadic_exponent(q);
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

}  // namespace corput
