#pragma once

#include <vector>

#include "corput/family.hpp"
#include "corput/points.hpp"

namespace corput {

// Base-b expansion, least significant digit first, trailing zeros trimmed.
struct DigitVector {
  int base = 2;
  std::vector<int> digits;

  long long value() const;
};

DigitVector digits_base_b(long long n, int b);

// Permuted radical inverse S_b^sigma(n) = sum_j sigma(a_j(n)) / b^{j+1},
// reduced into [0,1). For sigma(0) != 0 the infinite tail over the implicit
// zero digits is the closed form sigma(0) / ((b-1) b^L) past the top digit.
Rational permuted_radical_inverse(long long n, int b, const Permutation& sigma);

// Classical radical inverse (identity permutation).
Rational radical_inverse(long long n, int b);

// { S_b^sigma(i) : n1 <= i < n2 } in index order, exact rationals. When
// sigma(0) = 0 and the segment is aligned (n2 - n1 = b^m0 divides n1), the
// self-similarity identity
//   segment = { j/b^m0 } + sum_j sigma(a_{m_j}(n1)) / b^{m_j+1}
// is verified internally; a violation raises std::logic_error.
TorusPointSet vdc_segment(long long n1, long long n2, int b,
                          const Permutation& sigma);

}  // namespace corput
