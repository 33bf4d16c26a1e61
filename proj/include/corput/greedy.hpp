#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corput/kernels.hpp"
#include "corput/points.hpp"

namespace corput {

// Rule for picking among tied global minima. Random draws are stateless:
// the choice at step s is splitmix64(rng_seed ^ splitmix64(s)) mod #ties,
// so runs are reproducible independent of threading or resumption.
struct SelectionPolicy {
  enum class Kind { Smallest, Largest, Index, Random };
  Kind kind = Kind::Smallest;
  int index = 0;               // Index: k-th candidate, k modulo the set size
  std::uint64_t rng_seed = 0;  // Random

  static SelectionPolicy smallest() { return {Kind::Smallest, 0, 0}; }
  static SelectionPolicy largest() { return {Kind::Largest, 0, 0}; }
  static SelectionPolicy at_index(int k) { return {Kind::Index, k, 0}; }
  static SelectionPolicy random(std::uint64_t seed) {
    return {Kind::Random, 0, seed};
  }
  // smallest | largest | index:<k> | random:<seed>
  static std::optional<SelectionPolicy> parse(const std::string& s);
  std::string str() const;
};

struct GapMinimum {
  double arg = 0.0;    // position in [0,1)
  double value = 0.0;  // energy there
  int gap_index = -1;
  bool interior = true;  // false when the bracket collapsed onto a gap end
};

// Unique minimizer of the summed energy on the open arc between consecutive
// sorted points (the last gap wraps through 1). Newton-accelerated bisection
// on the energy derivative, bracketed to width <= 1e-13; golden-section on
// the energy itself would only be needed for kernels without derivatives.
// Throws std::invalid_argument for a zero-width gap (duplicate points) and
// std::logic_error if the derivative changes sign more than once.
GapMinimum find_gap_minimum(const TorusPointSet& sorted_pts, int gap_index,
                            const Kernel& k);

struct CandidateSet {
  std::vector<double> args;    // ascending positions
  std::vector<double> values;  // energies, parallel to args
  // Dyadic snaps of args when the point set itself is exact dyadic.
  std::optional<std::vector<Rational>> exact;
  double best_value = 0.0;
  int skipped_gaps = 0;  // zero-width gaps skipped (the diagnostic)
};

// All gap minima whose energy is within tie_tolerance * (1 + |best|) of the
// global minimum, sorted by position.
CandidateSet candidate_minima(const TorusPointSet& pts, const Kernel& k,
                              double tie_tolerance = 1e-9);

struct GreedyTrajectory {
  TorusPointSet seed;
  std::string kernel_name;
  SelectionPolicy policy;
  double tie_tolerance = 1e-9;
  std::vector<double> chosen;  // points appended after the seed
  std::vector<CandidateSet> candidates_per_step;
  // seed + chosen as exact rationals, kept while every append snaps dyadically
  std::optional<std::vector<Rational>> exact_points;

  std::size_t total_points() const { return seed.size() + chosen.size(); }
  std::vector<double> all_points() const;
  TorusPointSet point_set() const;
};

GreedyTrajectory make_trajectory(const TorusPointSet& seed,
                                 std::string kernel_name,
                                 SelectionPolicy policy,
                                 double tie_tolerance = 1e-9);

// Appends one candidate set and the policy-chosen point.
void greedy_step(GreedyTrajectory& traj, const Kernel& k);

// Trajectory with n total points. Rejects seeds with duplicate points.
GreedyTrajectory greedy_run(const TorusPointSet& seed, const Kernel& k, int n,
                            SelectionPolicy policy,
                            double tie_tolerance = 1e-9);

// Minima of the summed energy of the first n points of the classical binary
// radical-inverse sequence: with n = sum_h 2^{m_h} (m_1 < ... < m_k),
// the 2^{m_1} points i/2^{m_1} + sum_h 1/2^{m_h+1}. Sorted ascending.
std::vector<Rational> predicted_minima_dyadic(long long n);

}  // namespace corput
