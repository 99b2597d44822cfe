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
#include <random>

#include "involut/power_series.hpp"

using namespace involut;

namespace {

// independent convolution oracle, plain double loop over exact coefficients
std::vector<BigRational> convolve(const PowerSeries& a, const PowerSeries& b) {
  std::vector<BigRational> r(a.order() + 1);
  for (long i = 0; i <= a.order(); ++i)
    for (long j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

PowerSeries geometric(long order) {  // 1/(1-x) = sum x^n
  PowerSeries s(order);
  for (long k = 0; k <= order; ++k) s.at(k) = 1;
  return s;
}

}  // namespace

TEST_CASE("series multiplication") {
  PowerSeries one_plus(4), one_minus(4);
  one_plus.at(0) = 1;
  one_plus.at(1) = 1;
  one_minus.at(0) = 1;
  one_minus.at(1) = -1;
  const PowerSeries prod = one_plus * one_minus;
  CHECK(prod[0] == 1);
  CHECK(prod[1] == 0);
  CHECK(prod[2] == -1);
  CHECK(prod[3] == 0);

  SECTION("multiplicative identity") {
    PowerSeries one(4);
    one.at(0) = 1;
    CHECK(one_plus * one == one_plus);
  }

  SECTION("e^x e^{-x} = 1 against the direct convolution oracle") {
    const long N = 10;
    PowerSeries ex(N), emx(N);
    for (long n = 0; n <= N; ++n) {
      ex.at(n) = BigRational(1) / BigRational(factorial(n));
      emx.at(n) = BigRational((n % 2 == 0) ? 1 : -1) / BigRational(factorial(n));
    }
    const auto oracle = convolve(ex, emx);
    const PowerSeries prod2 = ex * emx;
    for (long n = 0; n <= N; ++n) {
      CHECK(prod2[n] == oracle[n]);
      CHECK(prod2[n] == (n == 0 ? BigRational(1) : BigRational(0)));
    }
  }

  SECTION("order or point mismatch rejected") {
    PowerSeries other(5);
    CHECK_THROWS_AS(one_plus * other, std::invalid_argument);
    PowerSeries shifted(4, BigRational(1));
    CHECK_THROWS_AS(one_plus * shifted, std::invalid_argument);
  }
}

TEST_CASE("series reciprocal") {
  CHECK(reciprocal(geometric(6))[3] == 0);  // 1/(geometric) = 1 - x
  PowerSeries one(3);
  one.at(0) = 1;
  CHECK(reciprocal(one) == one);

  SECTION("1/(1-x) is the geometric series") {
    PowerSeries lin(6);
    lin.at(0) = 1;
    lin.at(1) = -1;
    CHECK(reciprocal(lin) == geometric(6));
  }

  SECTION("reciprocal of sum (an)_{n-1} w^n/n! with (0)_{-1} = -1, a = 1") {
    const long N = 6;
    PowerSeries u(N);
    for (long n = 0; n <= N; ++n)
      u.at(n) = pochhammer(BigRational(n), n - 1) / BigRational(factorial(n));
    CHECK(u[0] == -1);
    const PowerSeries v = reciprocal(u);
    const auto conv = convolve(u, v);
    CHECK(conv[0] == 1);
    for (long n = 1; n <= N; ++n) CHECK(conv[n] == 0);
  }

  SECTION("zero constant term rejected") {
    CHECK_THROWS_AS(reciprocal(PowerSeries::identity(4)), std::domain_error);
  }
}

TEST_CASE("series exp and log") {
  const long N = 9;
  CHECK(exp(PowerSeries(N))[0] == 1);  // exp(0) = 1

  PowerSeries one_plus_x(N);
  one_plus_x.at(0) = 1;
  one_plus_x.at(1) = 1;
  const PowerSeries l = log(one_plus_x);
  for (long n = 1; n <= N; ++n)
    CHECK(l[n] == BigRational((n % 2 == 1) ? 1 : -1, n));  // (-1)^{n+1}/n

  SECTION("round trips") {
    CHECK(exp(l) == one_plus_x);
    PowerSeries s(N);
    s.at(1) = BigRational(2, 3);
    s.at(3) = BigRational(-1, 5);
    s.at(7) = 4;
    CHECK(log(exp(s)) == s);
  }

  SECTION("normalization contract") {
    CHECK_THROWS_AS(exp(one_plus_x), std::invalid_argument);
    CHECK_THROWS_AS(log(PowerSeries(4)), std::invalid_argument);
  }
}

TEST_CASE("series composition") {
  const long N = 8;
  SECTION("geometric composed with x^2") {
    PowerSeries x2(N);
    x2.at(2) = 1;
    const PowerSeries c = compose(geometric(N), x2);
    for (long n = 0; n <= N; ++n) CHECK(c[n] == ((n % 2 == 0) ? 1 : 0));
  }
  SECTION("identity substitution") {
    PowerSeries s(N);
    s.at(0) = 3;
    s.at(2) = BigRational(1, 7);
    s.at(5) = -2;
    CHECK(compose(s, PowerSeries::identity(N)) == s);
  }
  SECTION("log(1+x) composed with e^x - 1 is x") {
    PowerSeries one_plus_x(N), em1(N);
    one_plus_x.at(0) = 1;
    one_plus_x.at(1) = 1;
    for (long n = 1; n <= N; ++n) em1.at(n) = BigRational(1) / BigRational(factorial(n));
    const PowerSeries c = compose(log(one_plus_x), em1);
    CHECK(c == PowerSeries::identity(N));
  }
  SECTION("nonzero inner constant term rejected") {
    PowerSeries bad(N);
    bad.at(0) = 1;
    CHECK_THROWS_AS(compose(geometric(N), bad), std::invalid_argument);
  }
}

TEST_CASE("series reversion") {
  CHECK(revert(PowerSeries::identity(5)) == PowerSeries::identity(5));

  SECTION("x - x^2 reverts to the Catalan series") {
    PowerSeries s(8);
    s.at(1) = 1;
    s.at(2) = -1;
    const PowerSeries t = revert(s);
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (long n = 1; n <= 8; ++n) CHECK(t[n] == catalan[n - 1]);
  }

  SECTION("reversion of w^a(1-w) at w=1 reproduces -(an)_{n-1}/n!") {
    for (BigRational a : {BigRational(1, 2), BigRational(1), BigRational(3, 2), BigRational(2),
                          BigRational(3)}) {
      const PowerSeries t = revert(expand_phi_at_one(a, a + 1, 12));
      for (long n = 1; n <= 12; ++n)
        CHECK(t[n] == -pochhammer(a * n, n - 1) / BigRational(factorial(n)));
    }
  }

  SECTION("random series round trips, s(t(x)) = x and revert(revert(s)) = s") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    const long N = 8;
    for (int trial = 0; trial < 50; ++trial) {
      PowerSeries s(N);
      for (long k = 2; k <= N; ++k) s.at(k) = BigRational(num(rng), den(rng));
      int lead = num(rng);
      if (lead == 0) lead = 1;
      s.at(1) = BigRational(lead, den(rng));
      const PowerSeries t = revert(s);
      CHECK(compose(s, t) == PowerSeries::identity(N));
      CHECK(compose(t, s) == PowerSeries::identity(N));
      CHECK(revert(t) == s);
    }
  }

  SECTION("non-invertible inputs rejected") {
    PowerSeries no_linear(4);
    no_linear.at(2) = 1;
    CHECK_THROWS_AS(revert(no_linear), std::domain_error);
    PowerSeries with_const(4);
    with_const.at(0) = 1;
    with_const.at(1) = 1;
    CHECK_THROWS_AS(revert(with_const), std::domain_error);
  }
}

TEST_CASE("expand_phi_at_one") {
  SECTION("integer cases by direct algebra") {
    const PowerSeries e12 = expand_phi_at_one(BigRational(1), BigRational(2), 4);
    CHECK(e12[0] == 0);
    CHECK(e12[1] == -1);
    CHECK(e12[2] == -1);
    CHECK(e12[3] == 0);

    const PowerSeries e13 = expand_phi_at_one(BigRational(1), BigRational(3), 4);
    CHECK(e13[1] == -2);
    CHECK(e13[2] == -3);
    CHECK(e13[3] == -1);
    CHECK(e13[4] == 0);
  }

  SECTION("a=1/2, b=3/2 against a finite-difference oracle") {
    const PowerSeries e = expand_phi_at_one(BigRational(1, 2), BigRational(3, 2), 5);
    auto phi = [](double w) { return std::sqrt(w) - w * std::sqrt(w); };
    // k-th Taylor coefficient via central differences with one Richardson step
    auto fd_coeff = [&](int k, double h) {
      double acc = 0.0;
      for (int i = 0; i <= k; ++i) {
        double binom = 1.0;
        for (int j = 0; j < i; ++j) binom = binom * (k - j) / (j + 1);
        acc += ((i % 2 == 0) ? 1.0 : -1.0) * binom * phi(1.0 + (0.5 * k - i) * h);
      }
      double fact = 1.0;
      for (int j = 2; j <= k; ++j) fact *= j;
      return acc / (std::pow(h, k) * fact);
    };
    for (int k = 1; k <= 5; ++k) {
      const double d = (4.0 * fd_coeff(k, 0.05) - fd_coeff(k, 0.1)) / 3.0;
      CHECK(std::fabs(d - to_double(e[k])) < 1e-4);
    }
    // remainder decays like u^6 at small u
    for (double u : {0.01, -0.01, 0.02}) {
      double partial = 0.0;
      for (long k = 0; k <= 5; ++k) partial += to_double(e[k]) * std::pow(u, double(k));
      CHECK(std::fabs(phi(1.0 + u) - partial) < 10.0 * std::pow(std::fabs(u), 6.0));
    }
  }

  SECTION("parameter order enforced") {
    CHECK_THROWS_AS(expand_phi_at_one(BigRational(2), BigRational(1), 4), std::invalid_argument);
  }
}
