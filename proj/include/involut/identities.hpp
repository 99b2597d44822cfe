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

#pragma once

#include <string>

#include "involut/coefficients.hpp"
#include "involut/power_series.hpp"
#include "involut/report.hpp"

namespace involut {

/// Pole in a term of a rational identity; the identity is not evaluated.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

inline void add_exact(IdentityReport& rep, long index, const BigRational& residual) {
  IdentityReport::Entry e;
  e.index = index;
  e.residual = std::fabs(to_double(residual));
  e.exact = to_fraction_string(residual);
  rep.details.push_back(std::move(e));
  if (residual != 0) rep.passed = false;
  if (e.residual > rep.max_residual) rep.max_residual = e.residual;
}

}  // namespace detail

/// Coefficient-level check of
///   -log[1 - sum (a'n)_{n-1} w^n/n!] = sum (a'n+1)_{n-1} w^n/n!
/// through order N, entirely in exact arithmetic.
inline IdentityReport verify_log_identity_formal(const BigRational& aprime, long N) {
  if (!(aprime > 0)) throw std::invalid_argument("verify_log_identity_formal: a' must be > 0");
  if (N < 2) throw std::invalid_argument("verify_log_identity_formal: N must be >= 2");

  PowerSeries inner(N);
  inner.at(0) = 1;
  const auto g = CoefficientFamily::g(aprime);
  for (long n = 1; n <= N; ++n) inner.at(n) = -coeff(g, n);
  const PowerSeries lhs = -log(inner);

  IdentityReport rep;
  rep.identity_name = "log_identity_formal(a'=" + to_fraction_string(aprime) + ")";
  rep.orders_lo = 1;
  rep.orders_hi = N;
  rep.exact_mode = true;
  rep.passed = true;
  const auto lg = CoefficientFamily::log_g(aprime);
  for (long n = 1; n <= N; ++n) detail::add_exact(rep, n, lhs[n] - coeff(lg, n));
  return rep;
}

/// Rothe-Hagen convolution identity for rational-argument binomials:
///
///   sum_{k=0}^{n} binom(x+kz, k) binom(y-kz, n-k) (p+kq)/((x+kz)(y-kz))
///     = [p(x+y-nz) + qnx] / [x (x+y) (y-nz)] * binom(x+y, n).
///
/// Terms whose prefactor denominator vanishes are reported as poles rather
/// than skipped.
inline IdentityReport rothe_hagen_check(const BigRational& x, const BigRational& y,
                                        const BigRational& z, const BigRational& p,
                                        const BigRational& q, long n) {
  if (n < 0) throw std::invalid_argument("rothe_hagen_check: n must be >= 0");
  for (long k = 0; k <= n; ++k) {
    if (x + k * z == 0) throw PoleError("rothe_hagen: pole at term k=" + std::to_string(k) + " (x + k z = 0)");
    if (y - k * z == 0) throw PoleError("rothe_hagen: pole at term k=" + std::to_string(k) + " (y - k z = 0)");
  }
  if (x == 0) throw PoleError("rothe_hagen: pole in closed form (x = 0)");
  if (x + y == 0) throw PoleError("rothe_hagen: pole in closed form (x + y = 0)");
  if (y - n * z == 0) throw PoleError("rothe_hagen: pole in closed form (y - n z = 0)");

  BigRational lhs = 0;
  for (long k = 0; k <= n; ++k)
    lhs += binomial(x + k * z, k) * binomial(y - k * z, n - k) * (p + k * q) / ((x + k * z) * (y - k * z));
  const BigRational rhs = (p * (x + y - n * z) + q * n * x) / (x * (x + y) * (y - n * z)) * binomial(x + y, n);

  IdentityReport rep;
  rep.identity_name = "rothe_hagen(n=" + std::to_string(n) + ")";
  rep.orders_lo = rep.orders_hi = n;
  rep.exact_mode = true;
  rep.passed = true;
  detail::add_exact(rep, n, lhs - rhs);
  return rep;
}

/// The specialization x=a, y=(a+1)n-1, z=a+1, p=a, q=a+1 that reduces
/// Rothe-Hagen to the convolution identity behind the log identity.
inline IdentityReport rothe_hagen_specialized(const BigRational& a, long n) {
  return rothe_hagen_check(a, (a + 1) * n - 1, a + 1, a, a + 1, n);
}

/// Direct exact check of
///   sum_{k=0}^{n} (ak+a+1)_k/k! (an-ak)_{n-k-1}/(n-k)! = -(an+a)_n/n!
/// with the (0)_{-1} = -1 convention supplying the k = n term.
inline IdentityReport convolution_check(const BigRational& a, long n) {
  if (!(a > 0)) throw std::invalid_argument("convolution_check: a must be > 0");
  if (n < 1) throw std::invalid_argument("convolution_check: n must be >= 1");
  BigRational lhs = 0;
  for (long k = 0; k <= n; ++k) {
    lhs += pochhammer(a * k + a + 1, k) / BigRational(factorial(k)) *
           pochhammer(a * (n - k), n - k - 1) / BigRational(factorial(n - k));
  }
  const BigRational rhs = -pochhammer(a * n + a, n) / BigRational(factorial(n));

  IdentityReport rep;
  rep.identity_name = "convolution(a=" + to_fraction_string(a) + ", n=" + std::to_string(n) + ")";
  rep.orders_lo = rep.orders_hi = n;
  rep.exact_mode = true;
  rep.passed = true;
  detail::add_exact(rep, n, lhs - rhs);
  return rep;
}

/// Higher-order Bernoulli polynomial B_k^{(n)}(z): k! times the w^k
/// coefficient of (w/(e^w - 1))^n e^{zw}, expanded exactly.
inline BigRational bernoulli_higher(long n, long k, const BigRational& z) {
  if (n < 1) throw std::invalid_argument("bernoulli_higher: n must be >= 1");
  if (k < 0) throw std::invalid_argument("bernoulli_higher: k must be >= 0");
  const long N = std::max<long>(k, 1);
  // (e^w - 1)/w truncated
  PowerSeries em1w(N);
  for (long j = 0; j <= N; ++j) em1w.at(j) = BigRational(1) / BigRational(factorial(j + 1));
  const PowerSeries kernel = reciprocal(em1w);
  PowerSeries prod(N);
  prod.at(0) = 1;
  for (long j = 0; j < n; ++j) prod = prod * kernel;
  PowerSeries ezw(N);
  for (long j = 0; j <= N; ++j) ezw.at(j) = rational_pow(z, j) / BigRational(factorial(j));
  prod = prod * ezw;
  return prod[k] * BigRational(factorial(k));
}

/// Checks the Bernoulli route to the log-series coefficients:
///   -(a'n + 1)_{n-1} = (-1)^n B_{n-1}^{(n)}(-n a').
inline IdentityReport verify_logg_coeff_via_bernoulli(const BigRational& aprime, long n) {
  if (!(aprime > 0)) throw std::invalid_argument("verify_logg_coeff_via_bernoulli: a' must be > 0");
  if (n < 1) throw std::invalid_argument("verify_logg_coeff_via_bernoulli: n must be >= 1");
  const BigRational lhs = -pochhammer(aprime * n + 1, n - 1);
  BigRational rhs = bernoulli_higher(n, n - 1, -aprime * n);
  if (n % 2 == 1) rhs = -rhs;

  IdentityReport rep;
  rep.identity_name =
      "logg_coeff_via_bernoulli(a'=" + to_fraction_string(aprime) + ", n=" + std::to_string(n) + ")";
  rep.orders_lo = rep.orders_hi = n;
  rep.exact_mode = true;
  rep.passed = true;
  detail::add_exact(rep, n, lhs - rhs);
  return rep;
}

}  // namespace involut
