#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corput/points.hpp"

namespace corput {

// Interaction function f on [0,1] with f(t) = f(1-t) and f'' > 0 on (0,1).
// Instances are immutable after construction; every member is pure and safe
// to call concurrently.
class Kernel {
 public:
  virtual ~Kernel() = default;

  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }
  bool singular_at_zero() const { return singular_; }
  double mean() const { return mean_; }
  // Uniform convexity floor: min of f'' over (0,1), when it is positive.
  std::optional<double> convexity_floor() const { return theta_; }

  virtual double eval(double t) const = 0;    // t in [0,1]
  virtual double deriv1(double t) const = 0;  // t in (0,1)
  virtual double deriv2(double t) const = 0;  // t in (0,1)

  // Sum of f(|x - p|) over pts; +inf when x coincides with a point and the
  // kernel is singular at 0.
  virtual double energy(std::span<const double> pts, double x) const;
  // Accumulates d1 += sum sgn(x-p) f'(|x-p|) and d2 += sum f''(|x-p|).
  // x must not coincide with any point.
  virtual void energy_derivs(std::span<const double> pts, double x,
                             double& d1, double& d2) const;
  // Fast path for kernels whose per-gap energy has a closed-form minimizer:
  // appends (arg in [0,1), energy) for every nonempty gap of the sorted
  // points, in gap order, skipping zero-width gaps. Returns false when no
  // closed form exists (callers fall back to the iterative solver).
  virtual bool batch_gap_minima(std::span<const double> sorted_pts,
                                std::vector<std::pair<double, double>>& out) const {
    (void)sorted_pts;
    (void)out;
    return false;
  }

 protected:
  Kernel(std::string name, std::vector<double> params, bool singular,
         double mean, std::optional<double> theta)
      : name_(std::move(name)),
        params_(std::move(params)),
        singular_(singular),
        mean_(mean),
        theta_(theta) {}

 private:
  std::string name_;
  std::vector<double> params_;
  bool singular_;
  double mean_;
  std::optional<double> theta_;
};

using KernelPtr = std::shared_ptr<const Kernel>;

// Catalog: "logsin" (1 - log(2 sin(pi t)), singular at 0, mean 1),
// "bernoulli2" (t^2 - t + 1/6, mean 0), "power" with params {p}, p >= 2
// (|t - 1/2|^p). Throws std::invalid_argument for unknown names or p < 2.
KernelPtr kernel_make(const std::string& name,
                      const std::vector<double>& params = {});

// CLI grammar: logsin | bernoulli2 | power:<p>
KernelPtr kernel_from_string(const std::string& spec);

// Real part of \int_0^1 f(x) e^{-2 pi i k x} dx. The imaginary part must
// vanish by symmetry; a residual above 1e-10 raises std::runtime_error.
// Smooth kernels use composite midpoint quadrature with 2^16 panels;
// singular kernels use a dyadically graded midpoint rule refined until two
// successive Richardson-accelerated passes agree to 1e-10.
double kernel_fourier_coeff(const Kernel& k, long long freq);

// Sum of f(|x - x_k|) over the point set (the +inf convention of energy()).
double point_energy(const TorusPointSet& pts, const Kernel& k, double x);

// Full double sum including the diagonal. Requires a bounded kernel;
// throws std::domain_error when f(0) is undefined.
double total_pair_energy(const TorusPointSet& pts, const Kernel& k);

}  // namespace corput
