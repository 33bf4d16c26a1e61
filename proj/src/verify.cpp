#include "corput/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "corput/parallel.hpp"

namespace corput {

namespace {

// Completes a prefix of images to a member of the base-2^m family, or
// reports the first offending prefix position. offset is the absolute index
// of prefix[0] in the original trajectory (for error reporting).
struct Completion {
  bool ok = false;
  std::vector<int> images;
  int bad_index = -1;
};

Completion complete_prefix(int m, const std::vector<int>& prefix, int offset) {
  Completion res;
  if (m == 1) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] != static_cast<int>(i)) {
        res.bad_index = offset + static_cast<int>(i);
        return res;
      }
    }
    res.ok = true;
    res.images = {0, 1};
    return res;
  }
  const int b = 1 << m;
  const int half = b / 2;

  std::vector<int> s1_prefix;
  for (std::size_t i = 0; i < prefix.size() && i < static_cast<std::size_t>(half); ++i) {
    if (prefix[i] % 2 != 0) {
      res.bad_index = offset + static_cast<int>(i);
      return res;
    }
    s1_prefix.push_back(prefix[i] / 2);
  }
  Completion c1 = complete_prefix(m - 1, s1_prefix, offset);
  if (!c1.ok) {
    res.bad_index = c1.bad_index;
    return res;
  }

  int a = 1;
  std::vector<int> s2_prefix;
  if (prefix.size() > static_cast<std::size_t>(half)) {
    a = prefix[static_cast<std::size_t>(half)];
    if (a % 2 != 1) {
      res.bad_index = offset + half;
      return res;
    }
    for (std::size_t i = static_cast<std::size_t>(half); i < prefix.size(); ++i) {
      int v = prefix[i] - a;
      v %= b;
      if (v < 0) v += b;
      if (v % 2 != 0) {
        res.bad_index = offset + static_cast<int>(i);
        return res;
      }
      s2_prefix.push_back(v / 2);
    }
  }
  Completion c2 = complete_prefix(m - 1, s2_prefix, offset + half);
  if (!c2.ok) {
    res.bad_index = c2.bad_index;
    return res;
  }

  res.ok = true;
  res.images.reserve(static_cast<std::size_t>(b));
  for (int v : c1.images) res.images.push_back(2 * v);
  for (int v : c2.images) res.images.push_back((2 * v + a) % b);
  return res;
}

}  // namespace

MatchResult match_trajectory_to_permutation(const GreedyTrajectory& traj) {
  MatchResult res;
  const std::vector<double> pts = traj.all_points();
  const int n = static_cast<int>(pts.size());
  if (n < 2) {
    res.error = "trajectory shorter than 2 points";
    return res;
  }
  if (traj.seed.size() != 1 || std::fabs(traj.seed.points[0]) > 1e-9) {
    res.error = "matching requires seed {0}";
    return res;
  }
  int m = 1;
  while ((1 << m) < n) ++m;
  const int b = 1 << m;

  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  double max_resid = 0.0;
  std::set<int> seen;
  for (int k = 0; k < n; ++k) {
    const double scaled = pts[static_cast<std::size_t>(k)] * b;
    const int v = static_cast<int>(std::llround(scaled));
    const double resid = std::fabs(scaled - v) / b;
    max_resid = std::max(max_resid, resid);
    if (v < 0 || v >= b || resid > 1e-9 || !seen.insert(v).second) {
      res.error = "point does not sit on the dyadic grid";
      res.first_bad_index = k;
      res.max_residual = max_resid;
      res.m = m;
      return res;
    }
    prefix.push_back(v);
  }
  res.max_residual = max_resid;
  res.m = m;

  Completion c = complete_prefix(m, prefix, 0);
  if (!c.ok) {
    res.error = "no family permutation is consistent with the trajectory";
    res.first_bad_index = c.bad_index;
    return res;
  }
  res.sigma = Permutation::from_images(std::move(c.images));
  if (!family_membership(res.sigma)) {
    res.error = "completed permutation failed the membership check";
    return res;
  }
  res.matched_prefix_length = n;
  res.ok = true;
  return res;
}

GreedyVdcReport check_greedy_equals_vdc(const Kernel& k, int n) {
  GreedyVdcReport rep;
  rep.n = n;
  const TorusPointSet seed = make_exact_point_set({Rational(0)});
  const GreedyTrajectory traj =
      greedy_run(seed, k, n, SelectionPolicy::smallest());
  const std::vector<double> pts = traj.all_points();
  for (int i = 0; i < n; ++i) {
    const double want = to_double(radical_inverse(i, 2));
    if (std::fabs(pts[static_cast<std::size_t>(i)] - want) > 1e-9) {
      rep.first_fail_index = i;
      rep.note = "chosen point differs from the binary radical inverse";
      return rep;
    }
  }
  for (std::size_t s = 0; s < traj.candidates_per_step.size(); ++s) {
    const long long have_n = static_cast<long long>(traj.seed.size() + s);
    const std::vector<Rational> want = predicted_minima_dyadic(have_n);
    const auto& cs = traj.candidates_per_step[s];
    if (!cs.exact || *cs.exact != want) {
      rep.first_fail_index = static_cast<int>(have_n);
      rep.note = "candidate set differs from the dyadic prediction";
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

FamilyEquivReport check_family_equivalences(int m, int n_max, int sample,
                                            std::uint64_t rng_seed,
                                            bool include_one_sided) {
  FamilyEquivReport rep;
  rep.m = m;
  rep.n_max = n_max;

  std::vector<Permutation> members;
  if (sample <= 0) {
    members = enumerate_family(m);
  } else {
    for (int i = 0; i < sample; ++i)
      members.push_back(sample_family(m, rng_seed, static_cast<std::uint64_t>(i)));
  }
  rep.checked = static_cast<int>(members.size());

  const int b = 1 << m;
  const PsiTriple reference = psi_functions(b, canonical_sigma_m(m));
  std::vector<FaureSeries> classic;
  classic.reserve(static_cast<std::size_t>(n_max));
  {
    const PsiTriple base2 = psi_functions(2, Permutation::identity(2));
    for (int n = 1; n <= n_max; ++n)
      classic.push_back(faure_discrepancy_series(base2, n));
  }

  std::vector<std::string> faults(members.size());
  parallel_for(members.size(), [&](std::size_t i) {
    const Permutation& sigma = members[i];
    const PsiTriple t = psi_functions(b, sigma);
    if (t.psi != reference.psi) {
      faults[i] = sigma.str() + ": psi differs";
      return;
    }
    for (int n = 1; n <= n_max; ++n) {
      const FaureSeries s = faure_discrepancy_series(t, n);
      const FaureSeries& c = classic[static_cast<std::size_t>(n - 1)];
      if (s.nd != c.nd) {
        faults[i] = sigma.str() + ": discrepancy differs at n=" + std::to_string(n);
        return;
      }
      if (include_one_sided &&
          (s.nd_plus != c.nd_plus || s.nd_minus != c.nd_minus)) {
        faults[i] =
            sigma.str() + ": one-sided discrepancy differs at n=" + std::to_string(n);
        return;
      }
    }
  });
  for (const std::string& f : faults)
    if (!f.empty()) rep.violations.push_back(f);
  rep.psi_equal = rep.series_equal = rep.violations.empty();
  rep.pass = rep.violations.empty();
  return rep;
}

SelfSimilarityReport check_self_similarity(int trials, std::uint64_t rng_seed) {
  SelfSimilarityReport rep;
  rep.trials = trials;
  std::mt19937_64 rng(rng_seed);
  const std::vector<Permutation> p3 = enumerate_family(3);
  for (int t = 0; t < trials; ++t) {
    const bool base2 = (t % 2 == 0);
    const int b = base2 ? 2 : 8;
    const Permutation sigma = base2 ? Permutation::identity(2)
                                    : p3[rng() % p3.size()];
    // aligned block: b^m0 | n1, segment length b^m0, everything below b^cap
    const int cap = base2 ? 12 : 4;
    const int m0 = static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    long long pm0 = 1;
    for (int e = 0; e < m0; ++e) pm0 *= b;
    long long ceiling = 1;
    for (int e = 0; e < cap; ++e) ceiling *= b;
    const long long slots = ceiling / pm0;  // >= b since m0 < cap
    const long long n1 = pm0 * static_cast<long long>(
                                   rng() % static_cast<std::uint64_t>(slots - 1));
    const long long n2 = n1 + pm0;
    try {
      vdc_segment(n1, n2, b, sigma);  // throws iff the identity fails
    } catch (const std::logic_error& e) {
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                            " b=" + std::to_string(b) + ": " + e.what();
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

ExploreReport explore_candidate_counts(const TorusPointSet& seed,
                                       const Kernel& k, int n) {
  ExploreReport rep;
  GreedyTrajectory traj = greedy_run(seed, k, n, SelectionPolicy::smallest());
  rep.candidate_counts.reserve(traj.candidates_per_step.size());
  for (const auto& cs : traj.candidates_per_step)
    rep.candidate_counts.push_back(static_cast<int>(cs.args.size()));
  return rep;
}

}  // namespace corput
