#include "corput/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "corput/family.hpp"  // splitmix64

namespace corput {

std::optional<SelectionPolicy> SelectionPolicy::parse(const std::string& s) {
  if (s == "smallest") return smallest();
  if (s == "largest") return largest();
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string head = s.substr(0, colon);
    const std::string arg = s.substr(colon + 1);
    try {
      std::size_t used = 0;
      if (head == "index") {
        const int k = std::stoi(arg, &used);
        if (used == arg.size() && k >= 0) return at_index(k);
      } else if (head == "random") {
        const unsigned long long v = std::stoull(arg, &used);
        if (used == arg.size()) return random(v);
      }
    } catch (...) {
    }
  }
  return std::nullopt;
}

std::string SelectionPolicy::str() const {
  switch (kind) {
    case Kind::Smallest:
      return "smallest";
    case Kind::Largest:
      return "largest";
    case Kind::Index:
      return "index:" + std::to_string(index);
    case Kind::Random:
      return "random:" + std::to_string(rng_seed);
  }
  return "?";
}

GapMinimum find_gap_minimum(const TorusPointSet& sorted_pts, int gap_index,
                            const Kernel& k) {
  const auto& pts = sorted_pts.points;
  const int n = static_cast<int>(pts.size());
  if (n < 1) throw std::invalid_argument("empty point set");
  if (gap_index < 0 || gap_index >= n)
    throw std::invalid_argument("gap index out of range");
  const double a = pts[static_cast<std::size_t>(gap_index)];
  const double b =
      gap_index + 1 < n ? pts[static_cast<std::size_t>(gap_index + 1)] : pts[0] + 1.0;
  if (!(b > a)) throw std::invalid_argument("zero-width gap");

  // Safeguarded Newton on E'(x). E' is strictly increasing on the open arc,
  // so the sign pattern must be -...-+...+; we track the extreme locations
  // of each sign to assert it.
  double lo = a, hi = b;
  double x = 0.5 * (a + b);
  double last_neg = -std::numeric_limits<double>::infinity();
  double first_pos = std::numeric_limits<double>::infinity();
  bool saw_neg = false, saw_pos = false, hit_zero = false;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double y = x >= 1.0 ? x - 1.0 : x;
    double d1 = 0.0, d2 = 0.0;
    k.energy_derivs(pts, y, d1, d2);
    if (d1 == 0.0) {
      hit_zero = true;
      lo = hi = x;
      break;
    }
    if (d1 > 0.0) {
      saw_pos = true;
      first_pos = std::min(first_pos, x);
      hi = x;
    } else {
      saw_neg = true;
      last_neg = std::max(last_neg, x);
      lo = x;
    }
    if (saw_neg && saw_pos && !(last_neg < first_pos))
      throw std::logic_error("gap energy derivative not monotone");
    double xn = x - d1 / d2;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    x = xn;
  }
  x = 0.5 * (lo + hi);
  const double y = x >= 1.0 ? x - 1.0 : x;
  GapMinimum gm;
  gm.arg = y;
  gm.value = k.energy(pts, y);
  gm.gap_index = gap_index;
  gm.interior = hit_zero || (saw_neg && saw_pos);
  return gm;
}

CandidateSet candidate_minima(const TorusPointSet& pts, const Kernel& k,
                              double tie_tolerance) {
  if (pts.size() < 1) throw std::invalid_argument("need at least one point");
  TorusPointSet sorted = sorted_copy(pts);
  CandidateSet cs;
  std::vector<std::pair<double, double>> minima;  // (arg, energy)
  const int n = static_cast<int>(sorted.size());
  if (k.batch_gap_minima(sorted.points, minima)) {
    cs.skipped_gaps = n - static_cast<int>(minima.size());
  } else {
    for (int g = 0; g < n; ++g) {
      try {
        const GapMinimum gm = find_gap_minimum(sorted, g, k);
        minima.emplace_back(gm.arg, gm.value);
      } catch (const std::invalid_argument&) {
        ++cs.skipped_gaps;  // duplicate points: zero-width gap
      }
    }
  }
  if (minima.empty()) throw std::invalid_argument("no nonempty gaps");

  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : minima) best = std::min(best, m.second);
  const double threshold = best + tie_tolerance * (1.0 + std::fabs(best));
  for (const auto& m : minima) {
    if (m.second <= threshold) {
      cs.args.push_back(m.first);
      cs.values.push_back(m.second);
    }
  }
  cs.best_value = best;

  std::vector<std::size_t> order(cs.args.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return cs.args[i] < cs.args[j]; });
  std::vector<double> args, vals;
  for (std::size_t i : order) {
    args.push_back(cs.args[i]);
    vals.push_back(cs.values[i]);
  }
  cs.args = std::move(args);
  cs.values = std::move(vals);

  if (auto me = max_dyadic_exponent(pts)) {
    const int level = std::min(*me + 1, 60);
    std::vector<Rational> exact;
    exact.reserve(cs.args.size());
    bool ok = true;
    for (double arg : cs.args) {
      auto q = snap_dyadic(arg, level, 1e-9);
      if (!q) {
        ok = false;
        break;
      }
      exact.push_back(*q);
    }
    if (ok) cs.exact = std::move(exact);
  }
  return cs;
}

std::vector<double> GreedyTrajectory::all_points() const {
  std::vector<double> out = seed.points;
  out.insert(out.end(), chosen.begin(), chosen.end());
  return out;
}

TorusPointSet GreedyTrajectory::point_set() const {
  TorusPointSet ps;
  ps.points = all_points();
  if (exact_points) ps.exact = exact_points;
  return ps;
}

GreedyTrajectory make_trajectory(const TorusPointSet& seed,
                                 std::string kernel_name,
                                 SelectionPolicy policy, double tie_tolerance) {
  validate(seed);
  if (seed.size() < 1) throw std::invalid_argument("empty seed");
  std::vector<double> s = seed.points;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("seed has duplicate points");
  GreedyTrajectory traj;
  traj.seed = seed;
  traj.kernel_name = std::move(kernel_name);
  traj.policy = policy;
  traj.tie_tolerance = tie_tolerance;
  traj.exact_points = seed.exact;
  return traj;
}

void greedy_step(GreedyTrajectory& traj, const Kernel& k) {
  if (traj.total_points() < 1) throw std::invalid_argument("empty trajectory");
  const TorusPointSet current = traj.point_set();
  CandidateSet cs = candidate_minima(current, k, traj.tie_tolerance);

  const std::size_t count = cs.args.size();
  std::size_t pick = 0;
  switch (traj.policy.kind) {
    case SelectionPolicy::Kind::Smallest:
      pick = 0;
      break;
    case SelectionPolicy::Kind::Largest:
      pick = count - 1;
      break;
    case SelectionPolicy::Kind::Index:
      pick = static_cast<std::size_t>(traj.policy.index) % count;
      break;
    case SelectionPolicy::Kind::Random: {
      const std::uint64_t step = traj.candidates_per_step.size();
      pick = splitmix64(traj.policy.rng_seed ^ splitmix64(step)) % count;
      break;
    }
  }

  traj.chosen.push_back(cs.args[pick]);
  if (traj.exact_points) {
    if (cs.exact)
      traj.exact_points->push_back((*cs.exact)[pick]);
    else
      traj.exact_points.reset();  // left the dyadic world
  }
  traj.candidates_per_step.push_back(std::move(cs));
}

GreedyTrajectory greedy_run(const TorusPointSet& seed, const Kernel& k, int n,
                            SelectionPolicy policy, double tie_tolerance) {
  if (n < static_cast<int>(seed.size()))
    throw std::invalid_argument("n smaller than the seed");
  GreedyTrajectory traj = make_trajectory(seed, k.name(), policy, tie_tolerance);
  while (static_cast<int>(traj.total_points()) < n) greedy_step(traj, k);
  return traj;
}

std::vector<Rational> predicted_minima_dyadic(long long n) {
  if (n <= 0) throw std::invalid_argument("n must be >= 1");
  int m1 = -1;
  Rational shift = 0;
  for (int e = 0; e < 63; ++e) {
    if ((n >> e) & 1) {
      if (m1 < 0) m1 = e;
      shift += Rational(1, pow_int(2, static_cast<unsigned>(e + 1)));
    }
  }
  if (m1 > 22) throw std::invalid_argument("candidate set too large to list");
  const Int den = pow_int(2, static_cast<unsigned>(m1));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(1) << m1);
  for (Int i = 0; i < den; ++i) out.push_back(Rational(i, den) + shift);
  return out;
}

}  // namespace corput
