#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "corput/kernels.hpp"
#include "oracles.hpp"

using namespace corput;

TEST_CASE("catalog values") {
  auto logsin = kernel_make("logsin");
  CHECK(logsin->eval(0.5) == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-12));
  CHECK(logsin->singular_at_zero());
  CHECK(logsin->mean() == doctest::Approx(1.0));
  CHECK(std::isinf(logsin->eval(0.0)));

  auto b2 = kernel_make("bernoulli2");
  CHECK(b2->eval(0.5) == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK(b2->eval(0.3) == doctest::Approx(b2->eval(0.7)).epsilon(1e-14));
  CHECK(b2->eval(0.3) == doctest::Approx(1.0 / 6.0 - 0.21).epsilon(1e-14));
  CHECK(b2->mean() == 0.0);
  CHECK(!b2->singular_at_zero());

  auto p3 = kernel_make("power", {3.0});
  CHECK(p3->eval(0.5) == 0.0);
  CHECK(p3->eval(0.0) == doctest::Approx(0.125));
  CHECK(p3->mean() == doctest::Approx(0.125 / 4.0));

  CHECK_THROWS_AS(kernel_make("riesz"), std::invalid_argument);
  CHECK_THROWS_AS(kernel_make("power", {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(kernel_make("power", {}), std::invalid_argument);
}

TEST_CASE("selection string grammar") {
  CHECK(kernel_from_string("logsin")->name() == "logsin");
  CHECK(kernel_from_string("power:2.5")->params()[0] == doctest::Approx(2.5));
  CHECK_THROWS_AS(kernel_from_string("power:x"), std::invalid_argument);
  CHECK_THROWS_AS(kernel_from_string("power:1"), std::invalid_argument);
}

TEST_CASE("symmetry and convexity on a grid") {
  for (const char* name : {"logsin", "bernoulli2"}) {
    auto k = kernel_make(name);
    for (int i = 1; i <= 99; ++i) {
      const double t = i / 100.0;
      CHECK(std::fabs(k->eval(t) - k->eval(1.0 - t)) < 1e-12);
      CHECK(k->deriv2(t) > 0.0);
    }
  }
  auto p = kernel_make("power", {2.5});
  for (int i = 1; i <= 99; ++i) {
    const double t = i / 100.0;
    CHECK(std::fabs(p->eval(t) - p->eval(1.0 - t)) < 1e-12);
    if (t != 0.5) CHECK(p->deriv2(t) > 0.0);
  }
}

TEST_CASE("derivatives match central differences") {
  const double h = 1e-5;
  for (const char* name : {"logsin", "bernoulli2"}) {
    auto k = kernel_make(name);
    for (int i = 1; i <= 19; ++i) {
      const double t = i / 20.0;
      const double d1 = (k->eval(t + h) - k->eval(t - h)) / (2.0 * h);
      const double d2 = (k->deriv1(t + h) - k->deriv1(t - h)) / (2.0 * h);
      CHECK(std::fabs(k->deriv1(t) - d1) <=
            1e-6 * std::max(1.0, std::fabs(d1)));
      CHECK(std::fabs(k->deriv2(t) - d2) <=
            1e-6 * std::max(1.0, std::fabs(d2)));
    }
  }
}

TEST_CASE("two-point sum has its minimum at the quarter point") {
  // g(x) = f(x) + f(1/2 + x) on [0,1/2] dips exactly at 1/4 and is
  // symmetric about it
  for (const char* name : {"logsin", "bernoulli2"}) {
    auto k = kernel_make(name);
    auto g = [&](double x) { return k->eval(x) + k->eval(0.5 + x); };
    const double argmin = testing::derivative_bisect_minimize(g, 1e-5, 0.5 - 1e-5);
    CHECK(std::fabs(argmin - 0.25) < 1e-9);
    for (int i = 1; i < 25; ++i) {
      const double x = i / 50.0;
      CHECK(g(x) == doctest::Approx(g(0.5 - x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fourier coefficients") {
  auto b2 = kernel_make("bernoulli2");
  CHECK(std::fabs(kernel_fourier_coeff(*b2, 0)) < 1e-10);
  const double pi = std::numbers::pi;
  CHECK(std::fabs(kernel_fourier_coeff(*b2, 1) - 1.0 / (2.0 * pi * pi)) < 1e-10);
  CHECK(std::fabs(kernel_fourier_coeff(*b2, -1) - 1.0 / (2.0 * pi * pi)) < 1e-10);
  CHECK(std::fabs(kernel_fourier_coeff(*b2, 5) - 1.0 / (50.0 * pi * pi)) < 1e-10);

  auto logsin = kernel_make("logsin");
  CHECK(std::fabs(kernel_fourier_coeff(*logsin, 1) - 0.5) < 1e-9);
  CHECK(std::fabs(kernel_fourier_coeff(*logsin, 2) - 0.25) < 1e-9);

  // decay floor used by the discrepancy bound
  for (int k = 1; k <= 64; ++k)
    CHECK(kernel_fourier_coeff(*b2, k) >= 0.05 / (static_cast<double>(k) * k));
}

TEST_CASE("point energy") {
  auto b2 = kernel_make("bernoulli2");
  auto logsin = kernel_make("logsin");
  const TorusPointSet zero = make_point_set({0.0});
  CHECK(point_energy(zero, *b2, 0.5) == doctest::Approx(-1.0 / 12.0));
  const TorusPointSet two = make_point_set({0.0, 0.5});
  CHECK(point_energy(two, *b2, 0.25) == doctest::Approx(-1.0 / 24.0).epsilon(1e-12));
  CHECK(std::isinf(point_energy(zero, *logsin, 0.0)));
}

TEST_CASE("pair energy") {
  auto b2 = kernel_make("bernoulli2");
  CHECK(total_pair_energy(make_point_set({0.0, 0.5}), *b2) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(total_pair_energy(make_point_set({0.37}), *b2) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(total_pair_energy(make_point_set({0.0, 1.0 / 3, 2.0 / 3}), *b2) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  auto logsin = kernel_make("logsin");
  CHECK_THROWS_AS(total_pair_energy(make_point_set({0.0, 0.5}), *logsin),
                  std::domain_error);
}
