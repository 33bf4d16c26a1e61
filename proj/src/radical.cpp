#include "corput/radical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace corput {

long long DigitVector::value() const {
  long long v = 0;
  long long place = 1;
  for (int d : digits) {
    v += d * place;
    place *= base;
  }
  return v;
}

DigitVector digits_base_b(long long n, int b) {
  if (b < 2) throw std::invalid_argument("base must be >= 2");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  DigitVector dv;
  dv.base = b;
  while (n > 0) {
    dv.digits.push_back(static_cast<int>(n % b));
    n /= b;
  }
  return dv;
}

Rational permuted_radical_inverse(long long n, int b,
                                  const Permutation& sigma) {
  if (sigma.base() != b) throw std::invalid_argument("permutation size != base");
  const DigitVector dv = digits_base_b(n, b);
  Rational acc = 0;
  Int place = b;
  for (int d : dv.digits) {
    acc += Rational(sigma(d), place);
    place *= b;
  }
  if (sigma(0) != 0) {
    // all digits above the top one are 0; their images form a geometric tail
    const Int bl = pow_int(b, static_cast<unsigned>(dv.digits.size()));
    acc += Rational(sigma(0), (b - 1) * bl);
  }
  return frac1(acc);  // sigma(0) = b-1 puts S(0) at 1, which wraps to 0
}

Rational radical_inverse(long long n, int b) {
  return permuted_radical_inverse(n, b, Permutation::identity(b));
}

namespace {

// n2 - n1 = b^m0 with b^m0 | n1; returns m0.
std::optional<int> aligned_segment_exponent(long long n1, long long n2, int b) {
  const long long len = n2 - n1;
  long long p = 1;
  int m0 = 0;
  while (p < len) {
    p *= b;
    ++m0;
  }
  if (p != len) return std::nullopt;
  if (n1 % p != 0) return std::nullopt;
  return m0;
}

}  // namespace

TorusPointSet vdc_segment(long long n1, long long n2, int b,
                          const Permutation& sigma) {
  if (!(n2 > n1 && n1 >= 0)) throw std::invalid_argument("need n2 > n1 >= 0");
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(n2 - n1));
  for (long long i = n1; i < n2; ++i)
    pts.push_back(permuted_radical_inverse(i, b, sigma));

  if (sigma(0) == 0) {
    if (auto m0 = aligned_segment_exponent(n1, n2, b)) {
      // shift = sum over the digits of n1 of sigma(digit) / b^{position+1}
      Rational shift = 0;
      const DigitVector dv = digits_base_b(n1, b);
      Int place = b;
      for (int d : dv.digits) {
        if (d != 0) shift += Rational(sigma(d), place);
        place *= b;
      }
      const Int grid = pow_int(b, static_cast<unsigned>(*m0));
      std::set<Rational> expected;
      for (Int j = 0; j < grid; ++j) expected.insert(Rational(j, grid) + shift);
      std::set<Rational> actual(pts.begin(), pts.end());
      if (actual != expected)
        throw std::logic_error("segment self-similarity identity violated");
    }
  }
  return make_exact_point_set(std::move(pts));
}

}  // namespace corput
