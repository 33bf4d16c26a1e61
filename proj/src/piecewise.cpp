#include "corput/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace corput {

namespace {

// Drops interior breakpoints where the incoming and outgoing slopes agree.
void canonicalize(std::vector<Rational>& xs, std::vector<Rational>& vs) {
  if (xs.size() < 3) return;
  std::vector<Rational> cx, cv;
  cx.reserve(xs.size());
  cv.reserve(vs.size());
  cx.push_back(xs[0]);
  cv.push_back(vs[0]);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const Rational lhs = (vs[i] - cv.back()) * (xs[i + 1] - xs[i]);
    const Rational rhs = (vs[i + 1] - vs[i]) * (xs[i] - cx.back());
    if (lhs != rhs) {
      cx.push_back(xs[i]);
      cv.push_back(vs[i]);
    }
  }
  cx.push_back(xs.back());
  cv.push_back(vs.back());
  xs = std::move(cx);
  vs = std::move(cv);
}

}  // namespace

PiecewiseAffine::PiecewiseAffine() : xs_{0, 1}, vs_{0, 0} {}

PiecewiseAffine PiecewiseAffine::from_breakpoints(std::vector<Rational> xs,
                                                  std::vector<Rational> vs) {
  if (xs.size() != vs.size() || xs.size() < 2)
    throw std::invalid_argument("need matching lists with >= 2 breakpoints");
  if (xs.front() != 0 || xs.back() != 1)
    throw std::invalid_argument("breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  canonicalize(xs, vs);
  PiecewiseAffine pa;
  pa.xs_ = std::move(xs);
  pa.vs_ = std::move(vs);
  return pa;
}

Rational PiecewiseAffine::eval(const Rational& x) const {
  Rational t = (x >= 0 && x < 1) ? x : frac1(x);
  if (x == 1) t = 1;  // value at the right endpoint, not the wrap
  auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
  // t < 1 lands strictly inside; t == 1 uses the last segment
  std::size_t hi = it == xs_.end() ? xs_.size() - 1
                                   : static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const Rational dx = xs_[hi] - xs_[lo];
  return vs_[lo] + (vs_[hi] - vs_[lo]) * (t - xs_[lo]) / dx;
}

double PiecewiseAffine::eval_d(double x) const { return to_double(eval(Rational(x))); }

PiecewiseAffine PiecewiseAffine::operator+(const PiecewiseAffine& other) const {
  const auto& ax = xs_;
  const auto& bx = other.xs_;
  std::vector<Rational> xs, vs;
  xs.reserve(ax.size() + bx.size());
  std::size_t i = 0, j = 0;
  std::size_t sa = 0, sb = 0;  // current segment cursors
  auto interp = [](const std::vector<Rational>& X, const std::vector<Rational>& V,
                   std::size_t seg, const Rational& x) -> Rational {
    if (x == X[seg]) return V[seg];
    return V[seg] + (V[seg + 1] - V[seg]) * (x - X[seg]) / (X[seg + 1] - X[seg]);
  };
  while (i < ax.size() || j < bx.size()) {
    Rational x;
    if (j == bx.size() || (i < ax.size() && ax[i] <= bx[j]))
      x = ax[i];
    else
      x = bx[j];
    while (i < ax.size() && ax[i] == x) ++i;
    while (j < bx.size() && bx[j] == x) ++j;
    while (sa + 2 < ax.size() && ax[sa + 1] <= x) ++sa;
    while (sb + 2 < bx.size() && bx[sb + 1] <= x) ++sb;
    xs.push_back(x);
    vs.push_back(interp(ax, vs_, sa, x) + interp(bx, other.vs_, sb, x));
  }
  return from_breakpoints(std::move(xs), std::move(vs));
}

PiecewiseAffine PiecewiseAffine::negate() const {
  PiecewiseAffine out = *this;
  for (Rational& v : out.vs_) v = -v;
  return out;
}

PiecewiseAffine PiecewiseAffine::reflect() const {
  std::vector<Rational> xs, vs;
  xs.reserve(xs_.size());
  vs.reserve(vs_.size());
  for (std::size_t i = xs_.size(); i-- > 0;) {
    xs.push_back(Rational(1) - xs_[i]);
    vs.push_back(vs_[i]);
  }
  return from_breakpoints(std::move(xs), std::move(vs));
}

PiecewiseAffine PiecewiseAffine::scale_periodic(long long c) const {
  if (c < 1) throw std::invalid_argument("scale factor must be >= 1");
  if (c == 1) return *this;
  if (vs_.front() != vs_.back())
    throw std::invalid_argument("scale_periodic needs f(0) == f(1)");
  std::vector<Rational> xs, vs;
  xs.reserve((xs_.size() - 1) * static_cast<std::size_t>(c) + 1);
  vs.reserve(xs.capacity());
  const Rational cr(c);
  for (long long r = 0; r < c; ++r) {
    // one period maps to [r/c, (r+1)/c); skip the right endpoint of each block
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
      xs.push_back((xs_[i] + Rational(r)) / cr);
      vs.push_back(vs_[i]);
    }
  }
  xs.push_back(1);
  vs.push_back(vs_.back());
  return from_breakpoints(std::move(xs), std::move(vs));
}

Rational PiecewiseAffine::max_value() const {
  Rational best = vs_.front();
  for (const Rational& v : vs_) best = std::max(best, v);
  return best;
}

Rational PiecewiseAffine::min_value() const {
  Rational best = vs_.front();
  for (const Rational& v : vs_) best = std::min(best, v);
  return best;
}

std::vector<std::pair<Rational, Rational>> upper_envelope(
    std::vector<AffineLine> lines, const Rational& lo, const Rational& hi) {
  if (lines.empty()) throw std::invalid_argument("no lines");
  if (!(lo < hi)) throw std::invalid_argument("empty interval");

  // one line per slope: the one with the largest intercept
  std::sort(lines.begin(), lines.end(), [](const AffineLine& a, const AffineLine& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    return a.icept < b.icept;
  });
  std::vector<AffineLine> uniq;
  for (const AffineLine& l : lines) {
    if (!uniq.empty() && uniq.back().slope == l.slope)
      uniq.back() = l;  // larger intercept wins
    else
      uniq.push_back(l);
  }

  // convex-hull stack over slope-sorted lines; crossings must move right
  auto cross = [](const AffineLine& a, const AffineLine& b) {
    return (b.icept - a.icept) / (a.slope - b.slope);
  };
  std::vector<AffineLine> hull;
  for (const AffineLine& l : uniq) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], hull.back()))
      hull.pop_back();
    hull.push_back(l);
  }

  // hull[i] is maximal on [crossings[i-1], crossings[i]]
  std::vector<Rational> crossings;
  crossings.reserve(hull.size());
  for (std::size_t i = 0; i + 1 < hull.size(); ++i)
    crossings.push_back(cross(hull[i], hull[i + 1]));

  std::size_t li = 0;
  while (li < crossings.size() && crossings[li] <= lo) ++li;

  std::vector<std::pair<Rational, Rational>> out;
  out.emplace_back(lo, hull[li].at(lo));
  while (li < crossings.size() && crossings[li] < hi) {
    out.emplace_back(crossings[li], hull[li + 1].at(crossings[li]));
    ++li;
  }
  out.emplace_back(hi, hull[li].at(hi));
  return out;
}

}  // namespace corput
