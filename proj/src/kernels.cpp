#include "corput/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace corput {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

class LogSinKernel final : public Kernel {
 public:
  LogSinKernel()
      : Kernel("logsin", {}, /*singular=*/true, /*mean=*/1.0,
               /*theta=*/kPi * kPi) {}

  double eval(double t) const override {
    const double s = std::sin(kPi * t);
    if (s <= 0.0) return kInf;
    return 1.0 - std::log(2.0 * s);
  }
  double deriv1(double t) const override {
    return -kPi * std::cos(kPi * t) / std::sin(kPi * t);
  }
  double deriv2(double t) const override {
    const double s = std::sin(kPi * t);
    return kPi * kPi / (s * s);
  }

  double energy(std::span<const double> pts, double x) const override {
    double acc = 0.0;
    for (double p : pts) {
      const double s = std::sin(kPi * std::fabs(x - p));
      if (s <= 0.0) return kInf;
      acc += 1.0 - std::log(2.0 * s);
    }
    return acc;
  }
  void energy_derivs(std::span<const double> pts, double x, double& d1,
                     double& d2) const override {
    double a1 = 0.0, a2 = 0.0;
    for (double p : pts) {
      const double d = x - p;
      const double t = std::fabs(d);
      const double s = std::sin(kPi * t);
      const double c = std::cos(kPi * t);
      const double sgn = d < 0.0 ? -1.0 : 1.0;
      a1 -= sgn * kPi * c / s;
      a2 += kPi * kPi / (s * s);
    }
    d1 += a1;
    d2 += a2;
  }
};

class Bernoulli2Kernel final : public Kernel {
 public:
  Bernoulli2Kernel()
      : Kernel("bernoulli2", {}, /*singular=*/false, /*mean=*/0.0,
               /*theta=*/2.0) {}

  double eval(double t) const override { return t * t - t + 1.0 / 6.0; }
  double deriv1(double t) const override { return 2.0 * t - 1.0; }
  double deriv2(double) const override { return 2.0; }

  double energy(std::span<const double> pts, double x) const override {
    double acc = 0.0;
    for (double p : pts) {
      const double t = std::fabs(x - p);
      acc += t * t - t;
    }
    return acc + static_cast<double>(pts.size()) / 6.0;
  }
  void energy_derivs(std::span<const double> pts, double x, double& d1,
                     double& d2) const override {
    double a1 = 0.0;
    for (double p : pts) {
      const double d = x - p;
      a1 += 2.0 * d - (d < 0.0 ? -1.0 : 1.0);
    }
    d1 += a1;
    d2 += 2.0 * static_cast<double>(pts.size());
  }

  // E(y) = n y^2 - 2 S y + Q - sum |y - p| + n/6 with the absolute sum
  // resolved through prefix sums, so each gap minimum is a direct formula:
  // E'(y) = 2 n y - 2 S - (L - R) with L, R the point counts on each side,
  // constant within a gap.
  bool batch_gap_minima(std::span<const double> pts,
                        std::vector<std::pair<double, double>>& out) const override {
    const int n = static_cast<int>(pts.size());
    double s = 0.0, q = 0.0;
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i) {
      s += pts[static_cast<std::size_t>(i)];
      q += pts[static_cast<std::size_t>(i)] * pts[static_cast<std::size_t>(i)];
      prefix[static_cast<std::size_t>(i) + 1] = s;
    }
    const double dn = static_cast<double>(n);
    auto energy_at = [&](double y, int below) {
      const double abs_sum =
          y * (2.0 * below - dn) - 2.0 * prefix[static_cast<std::size_t>(below)] + s;
      return dn * y * y - 2.0 * s * y + q - abs_sum + dn / 6.0;
    };
    for (int g = 0; g < n; ++g) {
      const double a = pts[static_cast<std::size_t>(g)];
      const double b = g + 1 < n ? pts[static_cast<std::size_t>(g + 1)] : pts[0] + 1.0;
      if (!(b > a)) continue;  // zero-width gap
      double root = g + 1 < n ? (2.0 * s + 2.0 * (g + 1) - dn) / (2.0 * dn)
                              : (2.0 * s + dn) / (2.0 * dn);
      const double margin = (b - a) * 1e-9;
      root = std::min(std::max(root, a + margin), b - margin);
      double y = root;
      int below = g + 1;
      if (g + 1 == n) {
        // wrap gap: E' is the same affine function across the seam
        if (root >= 1.0) {
          y = root - 1.0;
          below = 0;
        } else {
          below = n;
        }
      }
      out.emplace_back(y, energy_at(y, below));
    }
    return true;
  }
};

class PowerKernel final : public Kernel {
 public:
  explicit PowerKernel(double p)
      : Kernel("power", {p}, /*singular=*/false,
               /*mean=*/std::pow(0.5, p) / (p + 1.0),
               // f'' vanishes at t = 1/2 for p > 2, so no uniform floor.
               p == 2.0 ? std::optional<double>(2.0) : std::nullopt),
        p_(p) {}

  double eval(double t) const override {
    return std::pow(std::fabs(t - 0.5), p_);
  }
  double deriv1(double t) const override {
    const double u = t - 0.5;
    const double s = u < 0.0 ? -1.0 : 1.0;
    return p_ * s * std::pow(std::fabs(u), p_ - 1.0);
  }
  double deriv2(double t) const override {
    const double u = std::fabs(t - 0.5);
    return p_ * (p_ - 1.0) * std::pow(u, p_ - 2.0);
  }

 private:
  double p_;
};

// Composite midpoint rule for \int_0^1 f(x) e^{-2 pi i k x} dx on a list of
// cells, `panels` panels per cell.
std::complex<double> midpoint_cells(const Kernel& f, long long k,
                                    const std::vector<double>& nodes,
                                    int panels) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t c = 0; c + 1 < nodes.size(); ++c) {
    const double a = nodes[c];
    const double h = (nodes[c + 1] - a) / panels;
    for (int i = 0; i < panels; ++i) {
      const double x = a + (i + 0.5) * h;
      const double w = -2.0 * kPi * static_cast<double>(k) * x;
      acc += f.eval(x) * std::complex<double>(std::cos(w), std::sin(w)) * h;
    }
  }
  return acc;
}

}  // namespace

double Kernel::energy(std::span<const double> pts, double x) const {
  double acc = 0.0;
  for (double p : pts) {
    const double t = std::fabs(x - p);
    if ((t == 0.0 || t == 1.0) && singular_at_zero()) return kInf;
    acc += eval(t);
  }
  return acc;
}

void Kernel::energy_derivs(std::span<const double> pts, double x, double& d1,
                           double& d2) const {
  for (double p : pts) {
    const double d = x - p;
    const double t = std::fabs(d);
    const double sgn = d < 0.0 ? -1.0 : 1.0;
    d1 += sgn * deriv1(t);
    d2 += deriv2(t);
  }
}

KernelPtr kernel_make(const std::string& name,
                      const std::vector<double>& params) {
  if (name == "logsin") return std::make_shared<LogSinKernel>();
  if (name == "bernoulli2") return std::make_shared<Bernoulli2Kernel>();
  if (name == "power") {
    if (params.size() != 1)
      throw std::invalid_argument("power kernel needs one parameter p");
    if (!(params[0] >= 2.0))
      throw std::invalid_argument("power kernel requires p >= 2");
    return std::make_shared<PowerKernel>(params[0]);
  }
  throw std::invalid_argument("unknown kernel: " + name);
}

KernelPtr kernel_from_string(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return kernel_make(spec);
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  try {
    std::size_t used = 0;
    const double p = std::stod(arg, &used);
    if (used != arg.size()) throw std::invalid_argument("");
    return kernel_make(name, {p});
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad kernel parameter: " + spec);
  }
}

double kernel_fourier_coeff(const Kernel& k, long long freq) {
  std::complex<double> value;
  if (!k.singular_at_zero()) {
    value = midpoint_cells(k, freq, {0.0, 1.0}, 1 << 16);
  } else {
    // Dyadic grading toward both endpoints; the leftover [0, 2^-48] slivers
    // contribute ~1e-13 for an integrable log singularity.
    const int depth = 48;
    std::vector<double> nodes;
    for (int j = depth; j >= 1; --j) nodes.push_back(std::ldexp(1.0, -j));
    nodes.insert(nodes.begin(), std::ldexp(1.0, -depth - 1));
    std::vector<double> mirrored = nodes;
    nodes.push_back(0.5);
    for (auto it = mirrored.rbegin(); it != mirrored.rend(); ++it)
      nodes.push_back(1.0 - *it);

    std::complex<double> prev = midpoint_cells(k, freq, nodes, 8);
    std::complex<double> prev_rich;
    bool have_rich = false;
    bool converged = false;
    for (int panels = 16; panels <= (1 << 14); panels *= 2) {
      const std::complex<double> cur = midpoint_cells(k, freq, nodes, panels);
      const std::complex<double> rich = (4.0 * cur - prev) / 3.0;
      value = rich;
      if (have_rich && std::abs(rich - prev_rich) < 1e-10) {
        converged = true;
        break;
      }
      prev_rich = rich;
      have_rich = true;
      prev = cur;
    }
    if (!converged)
      throw std::runtime_error(
          "fourier coefficient: quadrature did not reach 1e-10");
  }
  if (std::fabs(value.imag()) > 1e-10)
    throw std::runtime_error("fourier coefficient: imaginary residual " +
                             std::to_string(value.imag()));
  return value.real();
}

double point_energy(const TorusPointSet& pts, const Kernel& k, double x) {
  return k.energy(pts.points, x);
}

double total_pair_energy(const TorusPointSet& pts, const Kernel& k) {
  if (k.singular_at_zero())
    throw std::domain_error("pair energy undefined: kernel singular at 0");
  double acc = 0.0;
  const auto& p = pts.points;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      acc += k.eval(std::fabs(p[i] - p[j]));
  return acc;
}

}  // namespace corput
