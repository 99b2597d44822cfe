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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "involut/involution.hpp"
#include "involut/quadrature.hpp"
#include "involut/report.hpp"

namespace involut {

struct LambertEval {
  double value = 0;
  int iterations = 0;
  double residual = 0;
};

/// Principal branch W0 on [-1/e, inf): Halley iteration from a
/// branch-appropriate seed; near the branch point the p = sqrt(2(1+et))
/// expansion is used outright (Halley's denominator degenerates there).
inline LambertEval w0(double t) {
  const double em1 = std::exp(-1.0);
  if (t < -em1) {
    if (t > -em1 * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()))
      t = -em1;
    else
      throw std::domain_error("w0: argument below -1/e");
  }
  LambertEval out;
  const double p2 = 2.0 * (1.0 + std::numbers::e * t);
  if (p2 < 1e-5) {
    const double p = std::sqrt(std::max(p2, 0.0));
    out.value = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
    out.residual = std::fabs(out.value * std::exp(out.value) - t);
    return out;
  }
  double w = (t >= 0.0) ? std::log1p(t) : -1.0 + std::sqrt(p2) - p2 / 3.0;
  for (int it = 0; it < 60; ++it) {
    const double ew = std::exp(w);
    const double r = w * ew - t;
    out.iterations = it + 1;
    if (std::fabs(r) <= 1e-16 * std::max(1.0, std::fabs(t))) break;
    const double fp = ew * (w + 1.0);
    const double step = r / (fp - r * (w + 2.0) / (2.0 * (w + 1.0)));
    w -= step;
    if (std::fabs(step) <= 2.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) {
      out.iterations = it + 1;
      break;
    }
  }
  out.value = w;
  out.residual = std::fabs(w * std::exp(w) - t);
  return out;
}

/// Involution of phi(x) = -x log x: the y on the opposite side of 1/e with
/// y log y = x log x. The branch with y <= 1/e is bisected in u = log y
/// so that log f stays fully accurate as y approaches 0.
inline double log_f_lambert(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("log_f_lambert: x outside [0,1]");
  const double em1 = std::exp(-1.0);
  if (x == 0.0) return 0.0;  // f(0) = 1
  if (x == em1) return -1.0;
  const double s = x * std::log(x);
  if (x > em1) {
    // u e^u = s on u in (-inf, -1): decreasing, bracket [-746, -1]
    double lo = -746.0, hi = -1.0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid * std::exp(mid) - s > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }
  // y log y = s on y in [1/e, 1]: increasing
  double lo = em1, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (mid * std::log(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return std::log(0.5 * (lo + hi));
}

inline double f_lambert(double x) {
  if (x == 1.0) return 0.0;
  return std::exp(log_f_lambert(x));
}

namespace detail {

// same near-peak window shape as the power family: v = -w log w reaches its
// radius 1/e at w = 1/e, where partial sums converge like n^{-1/2}
inline double lambert_peak_window(long max_terms) {
  return std::sqrt(40.0 / (std::numbers::e * std::numbers::e * static_cast<double>(max_terms)));
}

}  // namespace detail

/// g(w) = 1 - sum_{n>=1} (n-1)^{n-1}/n! (-w log w)^n, with the
/// exp(W0(w log w)) path taken near w = 1/e where the series is slow.
inline double g_lambert(double w, double tol, const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("g_lambert: tol must be > 0");
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("g_lambert: w outside [0,1]");
  if (w == 0.0 || w == 1.0) return 1.0;
  const double em1 = std::exp(-1.0);
  if (std::fabs(w - em1) < detail::lambert_peak_window(limits.max_terms))
    return std::exp(w0(w * std::log(w)).value);
  const double v = -w * std::log(w);
  const long double logv = std::log(static_cast<long double>(v));
  auto term = [&](long n) {
    if (n == 1) return v;
    return static_cast<double>(std::exp((n - 1) * std::log(static_cast<long double>(n - 1)) -
                                        std::lgamma(static_cast<long double>(n + 1)) + n * logv));
  };
  try {
    auto [sum, r] = detail::sum_with_tail_bound(term, tol, limits.max_terms, "g_lambert");
    (void)r;
    return 1.0 - sum;
  } catch (const ConvergenceError&) {
    return std::exp(w0(w * std::log(w)).value);
  }
}

/// log g(w) = sum (-n)^{n-1}/n! (w log w)^n = W0(w log w). Returns the W0
/// route; away from the 1/e window the series route is summed as well and
/// must agree within tol.
inline double log_g_lambert(double w, double tol, const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("log_g_lambert: tol must be > 0");
  if (!(w > 0.0 && w <= 1.0)) throw std::domain_error("log_g_lambert: w outside (0,1]");
  const double wr = w0(w * std::log(w)).value;
  if (w == 1.0) return wr;
  const double em1 = std::exp(-1.0);
  if (std::fabs(w - em1) >= detail::lambert_peak_window(limits.max_terms)) {
    const double v = -w * std::log(w);
    const long double logv = std::log(static_cast<long double>(v));
    auto term = [&](long n) {
      if (n == 1) return v;
      return static_cast<double>(std::exp((n - 1) * std::log(static_cast<long double>(n)) -
                                          std::lgamma(static_cast<long double>(n + 1)) + n * logv));
    };
    auto [sum, r] = detail::sum_with_tail_bound(term, tol, limits.max_terms, "log_g_lambert");
    (void)r;
    if (std::fabs(-sum - wr) > tol)
      throw std::runtime_error("log_g_lambert: series and W0 routes disagree");
  }
  return wr;
}

/// Dual-route agreement report for log g at one sample point.
inline IdentityReport lambert_dual_route_check(double w, double tol,
                                               const SeriesLimits& limits = {}) {
  IdentityReport rep;
  rep.identity_name = "lambert_dual_route(w)";
  rep.tolerance = tol;
  const double wr = w0(w * std::log(w)).value;
  const double lg = log_g_lambert(w, tol, limits);
  rep.add_float(0, lg - wr);
  rep.add_float(1, std::exp(lg) - g_lambert(w, tol / 4.0, limits));
  rep.finalize_float();
  return rep;
}

/// phi(x) = -x log x as the epsilon -> 0 limit of x^1 - x^{1+eps}:
/// compares g_{1,1+eps}(w) with the Lambert g; the deviation is O(eps).
inline IdentityReport limit_from_ab(double epsilon, double w, double tol,
                                    const SeriesLimits& limits = {}) {
  if (!(epsilon > 0 && epsilon <= 0.01))
    throw std::invalid_argument("limit_from_ab: epsilon must be in (0, 0.01]");
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("limit_from_ab: w outside [0,1]");
  const PhiParams p = PhiParams::create(1.0, 1.0 + epsilon);
  const double gab = g_eval(p, w, 1e-12, limits).value;
  const double gl = g_lambert(w, 1e-12, limits);

  IdentityReport rep;
  rep.identity_name = "lambert_limit(eps)";
  rep.tolerance = tol;
  rep.add_float(0, gab - gl);
  rep.finalize_float();
  rep.notes.push_back("deviation expected O(eps), eps = " + std::to_string(epsilon));
  return rep;
}

/// S = sum_{n>=1} (n-1)^{n-1}/(n+1)^{n+1}, summed directly to n = 10000;
/// the tail behaves like e^{-2}/n^2 (up to 1 + 1/(3n^2)) and is added via
/// the digamma-derivative asymptotics, leaving a remainder below 1e-12.
struct SeriesSum {
  double value = 0;
  double tail_bound = 0;
};

inline SeriesSum lambert_g_series_sum() {
  const long N = 10000;
  long double s = 0.0L;
  for (long n = N; n >= 2; --n)
    s += std::exp((n - 1) * std::log1p(-2.0 / (n + 1.0))) / ((n + 1.0) * (n + 1.0));
  s += 0.25L;  // n = 1 with 0^0 = 1
  auto psi1_asym = [](double x) {
    const double ix = 1.0 / x, ix2 = ix * ix;
    return ix * (1.0 + 0.5 * ix) + ix * ix2 * (1.0 / 6.0 - ix2 * (1.0 / 30.0 - ix2 / 42.0));
  };
  // term_n = e^{-2} (1/n^2 + 1/(3 n^4) + O(n^{-6})); both pieces are summed,
  // the n^{-4} one via sum_{n>N} n^{-4} = 1/(3N^3) - 1/(2N^4) + O(N^{-5})
  const double Nd = static_cast<double>(N);
  const double tail2 = psi1_asym(Nd + 1.0);
  const double tail4 = (1.0 / (3.0 * Nd * Nd * Nd) - 1.0 / (2.0 * Nd * Nd * Nd * Nd)) / 3.0;
  SeriesSum out;
  out.value = static_cast<double>(s) + std::exp(-2.0) * (tail2 + tail4);
  out.tail_bound = 2e-15;
  return out;
}

/// The four Lambert integrals, each computed by quadrature of the evaluated
/// functions and by the series / closed forms. Two published evaluations of
/// int g (0.659495 and 0.728466) and the matching int f = 1.31899 conflict
/// with each other and with the transfer identity int f = 2 int g - 1; they
/// are reported as annotations, never asserted.
struct LambertIntegrals {
  double int_g_quad = 0, int_g_series = 0;
  double int_f_quad = 0, int_f_transfer = 0;
  double int_neg_log_g_quad = 0, int_neg_log_g_closed = 0;  // pi^2/6
  double int_neg_log_f_quad = 0, int_neg_log_f_closed = 0;  // pi^2/3
  double series_sum = 0;
  double series_tail_bound = 0;
  std::vector<std::string> notes;
};

inline LambertIntegrals lambert_integrals(double tol, const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("lambert_integrals: tol must be > 0");
  const double qtol = tol / 8.0;
  const double em1 = std::exp(-1.0);
  LambertIntegrals out;

  // g and -log g/w have a kink at w = 1/e; integrate the pieces separately
  FunctionHandle gh{[&](double w) { return g_lambert(w, 1e-12, limits); }, "g(w)"};
  out.int_g_quad = integrate(gh, 0.0, em1, qtol).value + integrate(gh, em1, 1.0, qtol).value;
  const SeriesSum s = lambert_g_series_sum();
  out.series_sum = s.value;
  out.series_tail_bound = s.tail_bound;
  out.int_g_series = 1.0 - s.value;

  FunctionHandle fh{[&](double x) { return f_lambert(x); }, "f(x)"};
  out.int_f_quad = integrate(fh, 0.0, em1, qtol).value + integrate(fh, em1, 1.0, qtol).value;
  out.int_f_transfer = 2.0 * out.int_g_quad - 1.0;

  FunctionHandle lg{[&](double w) { return -w0(w * std::log(w)).value / w; }, "-log g(w)/w"};
  out.int_neg_log_g_quad =
      integrate(lg, 0.0, em1, qtol).value + integrate(lg, em1, 1.0, qtol).value;
  out.int_neg_log_g_closed = std::numbers::pi * std::numbers::pi / 6.0;

  FunctionHandle lf{[&](double x) { return -log_f_lambert(x) / x; }, "-log f(x)/x"};
  out.int_neg_log_f_quad = integrate(lf, 0.0, 1.0, qtol).value;
  out.int_neg_log_f_closed = std::numbers::pi * std::numbers::pi / 3.0;

  out.notes.push_back("published values 0.659495 and 0.728466 both circulate for int g; "
                      "the value reported here is 1 - S, cross-checked by quadrature");
  out.notes.push_back("published value 1.31899 = 2 - 2S for int f is impossible for a map "
                      "of [0,1] into itself; the transfer identity gives 2 int g - 1");
  return out;
}

/// Moment formula int_0^1 (w log w)^n dw = (-1)^n n!/(n+1)^{n+1}.
inline IdentityReport lambert_moment_check(long n, double tol) {
  if (n < 0) throw std::invalid_argument("lambert_moment_check: n must be >= 0");
  if (!(tol > 0)) throw std::invalid_argument("lambert_moment_check: tol must be > 0");
  FunctionHandle fh{[n](double w) { return std::pow(w * std::log(w), static_cast<double>(n)); },
                    "(w log w)^n"};
  const double quad = integrate(fh, 0.0, 1.0, tol / 8.0).value;
  double closed = std::exp(std::lgamma(n + 1.0) - (n + 1.0) * std::log(n + 1.0));
  if (n % 2 == 1) closed = -closed;

  IdentityReport rep;
  rep.identity_name = "lambert_moment(n=" + std::to_string(n) + ")";
  rep.tolerance = tol;
  rep.add_float(n, quad - closed);
  rep.finalize_float();
  return rep;
}

}  // namespace involut
