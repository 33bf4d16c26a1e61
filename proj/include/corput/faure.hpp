#pragma once

#include <vector>

#include "corput/family.hpp"
#include "corput/piecewise.hpp"

namespace corput {

// phi_{b,h}^sigma: on the cell [(k-1)/b, k/b) the counting function of the
// one-period point set (sigma(0)/b, ..., sigma(b-1)/b) against [0, h/b),
// recentred by the linear term:
//   h <= sigma(k-1):  #{i < k : sigma(i) < h} - h x
//   h >  sigma(k-1):  (b-h) x - #{i < k : sigma(i) >= h}
// Exact piecewise-affine on [0,1] with phi(1) = phi(0) = 0.
PiecewiseAffine phi_function(int b, const Permutation& sigma, int h);

struct PsiTriple {
  PiecewiseAffine plus;   // max_h phi_h
  PiecewiseAffine minus;  // max_h (-phi_h)
  PiecewiseAffine psi;    // plus + minus
  int base = 0;
  bool zero_fixed = false;  // sigma(0) == 0
};

// Exact upper envelopes over h, cell by cell.
PsiTriple psi_functions(int b, const Permutation& sigma);

// N D_N, N D_N^+, N D_N^- of the permuted radical-inverse sequence, as exact
// rationals. The series over scales j is summed for j = 1..J with
// J = floor(log_b n) + 1; past J the argument drops below 1/b where
// sigma(0) = 0 forces psi(x) = (b-1)x (psi+ likewise, psi- = 0), so the tail
// telescopes to n / b^J exactly.
struct FaureSeries {
  Rational nd;
  Rational nd_plus;
  Rational nd_minus;
};
FaureSeries faure_discrepancy_series(const PsiTriple& t, long long n);
FaureSeries faure_discrepancy_series(int b, const Permutation& sigma,
                                     long long n);

// For m = 1..m_max: max over [0,1] of F_m(x)/m where
// F_m(x) = sum_{j=0}^{m-1} psi(x b^j). The sequence is non-increasing and
// bounds the asymptotic discrepancy constant from above.
std::vector<std::pair<int, Rational>> f_m_and_alpha(int b,
                                                    const Permutation& sigma,
                                                    int m_max);

// F_m itself (for export/plotting).
PiecewiseAffine f_m_function(int b, const Permutation& sigma, int m);

}  // namespace corput
