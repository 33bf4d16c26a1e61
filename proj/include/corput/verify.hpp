#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corput/discrepancy.hpp"
#include "corput/faure.hpp"
#include "corput/greedy.hpp"
#include "corput/radical.hpp"

namespace corput {

struct MatchResult {
  bool ok = false;
  int m = 0;
  Permutation sigma;
  int matched_prefix_length = 0;
  double max_residual = 0.0;
  int first_bad_index = -1;
  std::string error;
};

// Recovers a family permutation sigma in base 2^m (2^{m-1} < N <= 2^m) with
// x_k = sigma(k)/2^m for the whole trajectory, by recursive decomposition of
// the prefix (first half -> sigma_1, entry 2^{m-1} -> odd shift a, remainder
// -> prefix of sigma_2), never by enumeration. Requires seed {0}.
MatchResult match_trajectory_to_permutation(const GreedyTrajectory& traj);

struct GreedyVdcReport {
  bool pass = false;
  int n = 0;
  int first_fail_index = -1;
  std::string note;
};

// Runs the smallest policy from seed {0} and checks chosen[k] against the
// classical binary radical inverse (1e-9) and every candidate set against
// the dyadic minima prediction (exact, after snapping).
GreedyVdcReport check_greedy_equals_vdc(const Kernel& k, int n);

struct FamilyEquivReport {
  bool pass = false;
  int m = 0;
  int n_max = 0;
  int checked = 0;
  bool psi_equal = false;
  bool series_equal = false;
  std::vector<std::string> violations;
};

// psi-identity across the family plus exact equality of the extreme
// discrepancy with the classical base-2 values for n <= n_max.
// sample = 0 enumerates (m <= 4); otherwise `sample` draws are checked.
// include_one_sided additionally demands D+ and D- equality; that stronger
// claim is false in general (only the sum psi = psi+ + psi- is family
// invariant; the sides trade places under value complement), so it exists
// for demonstrating the counterexamples.
FamilyEquivReport check_family_equivalences(int m, int n_max, int sample = 0,
                                            std::uint64_t rng_seed = 1,
                                            bool include_one_sided = false);

struct SelfSimilarityReport {
  bool pass = false;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

// Random aligned segments of permuted radical-inverse sequences compared
// against the shifted-block identity, exact.
SelfSimilarityReport check_self_similarity(int trials, std::uint64_t rng_seed);

struct ExploreReport {
  std::vector<int> candidate_counts;  // per step
};

// Exploratory only: records candidate-set sizes for an arbitrary seed.
ExploreReport explore_candidate_counts(const TorusPointSet& seed,
                                       const Kernel& k, int n);

}  // namespace corput
