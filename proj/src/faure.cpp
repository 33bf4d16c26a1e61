#include "corput/faure.hpp"

#include <stdexcept>

namespace corput {

namespace {

// cnt[k][h] = #{i < k : sigma(i) < h}
std::vector<std::vector<int>> prefix_count_table(int b, const Permutation& sigma) {
  std::vector<std::vector<int>> cnt(static_cast<std::size_t>(b) + 1,
                                    std::vector<int>(static_cast<std::size_t>(b) + 1, 0));
  for (int k = 1; k <= b; ++k) {
    for (int h = 0; h <= b; ++h) {
      cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)] =
          cnt[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(h)] +
          (sigma(k - 1) < h ? 1 : 0);
    }
  }
  return cnt;
}

// The affine piece of phi_{b,h} on cell k (1-based), as a global line.
AffineLine phi_cell_line(int b, const Permutation& sigma,
                         const std::vector<std::vector<int>>& cnt, int k, int h) {
  if (h <= sigma(k - 1)) {
    const int a = cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)];
    return AffineLine{Rational(-h), Rational(a)};
  }
  const int a_ge = k - cnt[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)];
  return AffineLine{Rational(b - h), Rational(-a_ge)};
}

PiecewiseAffine assemble_cells(
    int b, const std::vector<std::vector<std::pair<Rational, Rational>>>& cells) {
  std::vector<Rational> xs, vs;
  for (int k = 0; k < b; ++k) {
    const auto& cell = cells[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (k > 0 && i == 0) {
        if (vs.back() != cell[i].second)
          throw std::logic_error("discontinuity across cell boundary");
        continue;
      }
      xs.push_back(cell[i].first);
      vs.push_back(cell[i].second);
    }
  }
  return PiecewiseAffine::from_breakpoints(std::move(xs), std::move(vs));
}

}  // namespace

PiecewiseAffine phi_function(int b, const Permutation& sigma, int h) {
  if (sigma.base() != b) throw std::invalid_argument("permutation size != base");
  if (h < 0 || h >= b) throw std::invalid_argument("h out of range [0, b)");
  const auto cnt = prefix_count_table(b, sigma);
  std::vector<std::vector<std::pair<Rational, Rational>>> cells;
  cells.reserve(static_cast<std::size_t>(b));
  for (int k = 1; k <= b; ++k) {
    const AffineLine line = phi_cell_line(b, sigma, cnt, k, h);
    const Rational lo(k - 1, b), hi(k, b);
    cells.push_back({{lo, line.at(lo)}, {hi, line.at(hi)}});
  }
  return assemble_cells(b, cells);
}

PsiTriple psi_functions(int b, const Permutation& sigma) {
  if (sigma.base() != b) throw std::invalid_argument("permutation size != base");
  const auto cnt = prefix_count_table(b, sigma);
  std::vector<std::vector<std::pair<Rational, Rational>>> plus_cells, minus_cells;
  plus_cells.reserve(static_cast<std::size_t>(b));
  minus_cells.reserve(static_cast<std::size_t>(b));
  for (int k = 1; k <= b; ++k) {
    std::vector<AffineLine> lines, neg;
    lines.reserve(static_cast<std::size_t>(b));
    neg.reserve(static_cast<std::size_t>(b));
    for (int h = 0; h < b; ++h) {
      const AffineLine l = phi_cell_line(b, sigma, cnt, k, h);
      lines.push_back(l);
      neg.push_back(AffineLine{-l.slope, -l.icept});
    }
    const Rational lo(k - 1, b), hi(k, b);
    plus_cells.push_back(upper_envelope(std::move(lines), lo, hi));
    minus_cells.push_back(upper_envelope(std::move(neg), lo, hi));
  }
  PsiTriple t;
  t.base = b;
  t.zero_fixed = (sigma(0) == 0);
  t.plus = assemble_cells(b, plus_cells);
  t.minus = assemble_cells(b, minus_cells);
  t.psi = t.plus + t.minus;
  if (t.zero_fixed) {
    // first-cell behaviour the series tail closure relies on
    const Rational mid(1, 2 * b);
    if (t.psi.eval(mid) != Rational(b - 1, 2 * b) || t.minus.eval(mid) != 0)
      throw std::logic_error("psi first-cell slope check failed");
  }
  return t;
}

FaureSeries faure_discrepancy_series(const PsiTriple& t, long long n) {
  if (!t.zero_fixed)
    throw std::domain_error(
        "series tail closure requires a permutation fixing 0");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int b = t.base;
  int big_j = 1;
  Int bj = b;
  while (bj <= n) {
    bj *= b;
    ++big_j;
  }
  // now bj = b^J with b^{J-1} <= n < b^J
  FaureSeries out{Rational(0), Rational(0), Rational(0)};
  Int p = b;
  for (int j = 1; j <= big_j; ++j) {
    const Rational x = frac1(Rational(n, p));
    out.nd += t.psi.eval(x);
    out.nd_plus += t.plus.eval(x);
    out.nd_minus += t.minus.eval(x);
    p *= b;
  }
  const Rational tail(n, bj);
  out.nd += tail;
  out.nd_plus += tail;
  return out;
}

FaureSeries faure_discrepancy_series(int b, const Permutation& sigma,
                                     long long n) {
  return faure_discrepancy_series(psi_functions(b, sigma), n);
}

PiecewiseAffine f_m_function(int b, const Permutation& sigma, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const PsiTriple t = psi_functions(b, sigma);
  PiecewiseAffine f = t.psi;
  long long scale = b;
  for (int j = 1; j < m; ++j) {
    f = f + t.psi.scale_periodic(scale);
    scale *= b;
  }
  return f;
}

std::vector<std::pair<int, Rational>> f_m_and_alpha(int b,
                                                    const Permutation& sigma,
                                                    int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  const PsiTriple t = psi_functions(b, sigma);
  const std::size_t psi_pieces = t.psi.breakpoints().size();
  // breakpoint count grows like pieces * b^{m-1}
  double est = static_cast<double>(psi_pieces);
  for (int j = 1; j < m_max; ++j) {
    est *= b;
    if (est > 4e6) throw std::overflow_error("F_m too large for exact mode");
  }
  std::vector<std::pair<int, Rational>> out;
  out.reserve(static_cast<std::size_t>(m_max));
  PiecewiseAffine f = t.psi;
  out.emplace_back(1, f.max_value());
  long long scale = b;
  for (int m = 2; m <= m_max; ++m) {
    f = f + t.psi.scale_periodic(scale);
    scale *= b;
    out.emplace_back(m, Rational(f.max_value() / m));
  }
  return out;
}

}  // namespace corput
