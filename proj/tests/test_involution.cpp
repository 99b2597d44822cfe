// Copyright 2026 the involut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "involut/involution.hpp"

using namespace involut;
using Catch::Approx;

namespace {
const std::vector<std::pair<double, double>> kPairs = {
    {1, 2}, {2, 3}, {3, 4}, {1, 3}, {0.5, 1.5}, {2, 5}};
}

TEST_CASE("PhiParams critical point and peak") {
  for (auto [a, b] : kPairs) {
    const PhiParams p = PhiParams::create(a, b);
    CHECK(std::fabs(phi_derivative(p, p.x0)) < 1e-12);
    CHECK(phi(p, p.x0) == Approx(p.rho).margin(1e-15));
    for (int i = 1; i < 50; ++i) CHECK(phi(p, i / 50.0) <= p.rho + 1e-15);
  }
  SECTION("b = a+1 closed forms") {
    const PhiParams p = PhiParams::create(3, 4);
    CHECK(p.x0 == Approx(0.75).margin(1e-15));
    CHECK(p.rho == Approx(27.0 / 256.0).margin(1e-16));
  }
  CHECK_THROWS_AS(PhiParams::create(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(PhiParams::create(0, 1), std::invalid_argument);
}

TEST_CASE("phi evaluation") {
  const PhiParams p12 = PhiParams::create(1, 2);
  CHECK(phi(p12, 0.5) == 0.25);
  CHECK(phi(p12, 1.0) == 0.0);
  CHECK(phi(p12, 0.0) == 0.0);
  CHECK(phi(PhiParams::create(3, 4), 0.75) == Approx(27.0 / 256.0).margin(1e-17));
  CHECK_THROWS_AS(phi(p12, -0.1), std::domain_error);
  CHECK_THROWS_AS(phi(p12, 1.1), std::domain_error);
}

TEST_CASE("f_bisect oracle") {
  const PhiParams p12 = PhiParams::create(1, 2);
  CHECK(f_bisect(p12, 0.2, 1e-13) == Approx(0.8).margin(1e-13));
  CHECK(f_bisect(p12, p12.x0, 1e-13) == p12.x0);
  CHECK(f_bisect(p12, 0.0, 1e-13) == 1.0);
  CHECK(f_bisect(p12, 1.0, 1e-13) == 0.0);

  SECTION("(3,4) solves the level equation and is involutive") {
    const PhiParams p = PhiParams::create(3, 4);
    const double y = f_bisect(p, 0.2, 1e-13);
    CHECK(y > p.x0);
    CHECK(phi(p, y) == Approx(phi(p, 0.2)).margin(1e-12));
    CHECK(f_bisect(p, y, 1e-13) == Approx(0.2).margin(1e-12));
  }
}

TEST_CASE("g_eval against the closed form for (1,2)") {
  const PhiParams p = PhiParams::create(1, 2);
  // g_1(x) = (1 + |1-2x|)/2
  for (double x : {0.05, 0.2, 0.3, 0.45, 0.55, 0.7, 0.9, 0.99}) {
    const auto r = g_eval(p, x, 1e-11);
    CHECK(r.value == Approx((1.0 + std::fabs(1.0 - 2.0 * x)) / 2.0).margin(1e-10));
    CHECK(r.bound_on_tail <= 1e-11);
  }
  CHECK(g_eval(p, 0.3, 1e-11).value == Approx(0.7).margin(1e-10));
  CHECK(g_eval(p, 0.9, 1e-11).value == Approx(0.9).margin(1e-10));
}

TEST_CASE("g_eval near-peak switch") {
  const PhiParams p = PhiParams::create(2, 3);
  CHECK(g_eval(p, p.x0, 1e-10).value == p.x0);  // both branches agree at x0
  CHECK(g_eval(p, p.x0, 1e-10).method == EvalMethod::LinearRegime);
  const auto left = g_eval(p, p.x0 - 1e-5, 1e-10);
  CHECK(left.method == EvalMethod::Bisection);
  const auto right = g_eval(p, p.x0 + 1e-5, 1e-10);
  CHECK(right.method == EvalMethod::LinearRegime);
  CHECK(right.value == p.x0 + 1e-5);
  const auto far = g_eval(p, 0.2, 1e-10);
  CHECK(far.method == EvalMethod::Series);
  CHECK(far.terms_used > 0);
}

TEST_CASE("f_eval") {
  const PhiParams p12 = PhiParams::create(1, 2);
  CHECK(f_eval(p12, 0.75, 1e-11).value == Approx(0.25).margin(1e-10));
  for (auto [a, b] : kPairs) {
    const PhiParams p = PhiParams::create(a, b);
    CHECK(f_eval(p, 0.0, 1e-11).value == 1.0);
    CHECK(f_eval(p, 1.0, 1e-11).value == Approx(0.0).margin(1e-12));
  }
  SECTION("(3,4) against the bisection oracle") {
    const PhiParams p = PhiParams::create(3, 4);
    CHECK(f_eval(p, 0.9, 1e-11).value == Approx(f_bisect(p, 0.9, 1e-14)).margin(1e-10));
  }
}

TEST_CASE("involution law, piecewise structure, monotonicity") {
  for (auto [a, b] : kPairs) {
    const PhiParams p = PhiParams::create(a, b);
    double prev = 2.0;
    for (int i = 1; i <= 99; ++i) {
      const double x = i / 100.0;
      const double fx = f_eval(p, x, 1e-10).value;
      CHECK(std::fabs(f_eval(p, fx, 1e-10).value - x) < 1e-9);
      CHECK(std::fabs(phi(p, fx) - phi(p, x)) < 1e-10);
      CHECK(fx < prev);
      prev = fx;
      const double gx = g_eval(p, x, 1e-10).value;
      if (x <= p.x0 - 0.01) CHECK(std::fabs(gx - f_bisect(p, x, 1e-13)) < 1e-9);
      if (x >= p.x0 + 0.01) CHECK(std::fabs(gx - x) < 1e-9);
    }
  }
}

TEST_CASE("series vs bisection oracle on the left interval") {
  for (auto [a, b] : kPairs) {
    const PhiParams p = PhiParams::create(a, b);
    for (double x = 0.02; x <= p.x0 - 0.02; x += 0.04)
      CHECK(std::fabs(g_eval(p, x, 1e-10).value - f_bisect(p, x, 1e-14)) < 1e-9);
  }
}

TEST_CASE("log_g_eval") {
  const PhiParams p12 = PhiParams::create(1, 2);
  CHECK(log_g_eval(p12, 1.0, 1e-11) == 0.0);
  CHECK(log_g_eval(p12, 0.3, 1e-11) == Approx(-std::log(0.7)).margin(1e-10));
  for (double x : {0.55, 0.75, 0.95})
    CHECK(log_g_eval(p12, x, 1e-11) == Approx(-std::log(x)).margin(1e-10));

  SECTION("consistency with -log(g_eval) across pairs") {
    for (auto [a, b] : kPairs) {
      const PhiParams p = PhiParams::create(a, b);
      for (int i = 1; i <= 99; ++i) {
        const double x = i / 100.0;
        if (x > 0.99) continue;
        CHECK(std::fabs(log_g_eval(p, x, 1e-10) + std::log(g_eval(p, x, 1e-10).value)) < 1e-9);
      }
    }
  }
}

TEST_CASE("hypergeometric representation") {
  CHECK(hypergeom_g(2, 2.0 / 3.0, 1e-10) == Approx(2.0 / 3.0).margin(1e-12));
  CHECK(hypergeom_g(2, 0.2, 1e-11) ==
        Approx(g_eval(PhiParams::create(2, 3), 0.2, 1e-11).value).margin(1e-10));
  CHECK(hypergeom_g(3, 0.9, 1e-11) == Approx(0.9).margin(1e-10));

  SECTION("19-point grids for a in {2,3,4}, linear regime included") {
    for (int a : {2, 3, 4}) {
      const PhiParams p = PhiParams::create(a, a + 1.0);
      for (int i = 1; i <= 19; ++i) {
        const double x = i / 20.0;
        CHECK(std::fabs(hypergeom_g(a, x, 1e-10) - g_eval(p, x, 1e-10).value) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(hypergeom_g(1, 0.5, 1e-10), std::invalid_argument);
}

TEST_CASE("scaling relations") {
  const PhiParams p12 = PhiParams::create(1, 2);
  SECTION("gamma = 1 is the identity relation") {
    const auto rep = scaling_check(p12, 1.0, 0.4, 1e-12);
    CHECK(rep.passed);
  }
  SECTION("f_{2,4}(x) = sqrt(1 - x^2) from f_{1,2} = 1 - x") {
    const PhiParams p24 = PhiParams::create(2, 4);
    for (double x : {0.2, 0.5, 0.8})
      CHECK(f_eval(p24, x, 1e-12).value == Approx(std::sqrt(1 - x * x)).margin(1e-10));
    CHECK(scaling_check(p12, 2.0, 0.6, 1e-9).passed);
  }
  SECTION("(1,3) with gamma = 1/2 at sample points") {
    const PhiParams p13 = PhiParams::create(1, 3);
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9})
      CHECK(scaling_check(p13, 0.5, x, 1e-9).passed);
  }
}

TEST_CASE("prudnikov linear regime entry") {
  CHECK(prudnikov_linear_check(2.0, 0.75, 1e-10).passed);   // a=1
  CHECK(prudnikov_linear_check(3.0, 0.8, 1e-10).passed);    // a=2
  CHECK(prudnikov_linear_check(1.5, 0.5, 1e-10).passed);    // a=1/2, x0=1/3
  CHECK_THROWS_AS(prudnikov_linear_check(2.0, 0.2, 1e-10), std::domain_error);
}

TEST_CASE("INVOLUT_MAX_TERMS overrides the term cap") {
  setenv("INVOLUT_MAX_TERMS", "1234", 1);
  CHECK(SeriesLimits::from_env().max_terms == 1234);
  setenv("INVOLUT_MAX_TERMS", "bogus", 1);
  CHECK(SeriesLimits::from_env().max_terms == 100000);
  unsetenv("INVOLUT_MAX_TERMS");
  CHECK(SeriesLimits::from_env().max_terms == 100000);
}

TEST_CASE("convergence failure carries a partial result") {
  // just outside the bisection window, with a tolerance below what the
  // tail bound can certify before the term cap
  const PhiParams p = PhiParams::create(1, 2);
  SeriesLimits lim;
  lim.max_terms = 2000000;
  const double x = p.x0 - 1.3 * detail::near_peak_window(p, lim.max_terms);
  try {
    g_eval(p, x, 1e-30, lim);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.partial().terms_used == lim.max_terms);
    CHECK(e.partial().value > 0.0);
  }
}
