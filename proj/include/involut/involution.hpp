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
#include <cstdlib>
#include <string>

#include "involut/phi.hpp"
#include "involut/report.hpp"

namespace involut {

enum class EvalMethod { Series, Bisection, LinearRegime };

struct EvalResult {
  double value = 0;
  long terms_used = 0;
  double bound_on_tail = 0;
  EvalMethod method = EvalMethod::Series;
};

struct SeriesLimits {
  long max_terms = 100000;

  static SeriesLimits from_env() {
    SeriesLimits lim;
    if (const char* s = std::getenv("INVOLUT_MAX_TERMS")) {
      const long v = std::atol(s);
      if (v > 0) lim.max_terms = v;
    }
    return lim;
  }
};

/// Requested tolerance unreachable within the term cap. Carries the partial
/// result accumulated so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EvalResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const EvalResult& partial() const { return partial_; }

 private:
  EvalResult partial_;
};

namespace detail {

// w = phi(x) sits on the boundary of the convergence disk at x = x0, where
// partial sums converge like n^{-1/2}; inside this window the series path
// switches to the bisection / linear-regime path. The width is where the
// geometric factor (w/rho)^n = exp(-(|phi''(x0)|/(2 rho)) d^2 n) stops
// reaching ~1e-9 within the term cap, floored at 1e-4.
inline double near_peak_window(const PhiParams& p, long max_terms) {
  const double curv = 0.5 * std::fabs(phi_second_derivative(p, p.x0));
  return std::max(1e-4, std::sqrt(20.0 * p.rho / (curv * static_cast<double>(max_terms))));
}

// Geometric tail bound from two consecutive term magnitudes. The families
// summed here have ratios increasing to their limit like r (1 - 3/(2n)), so
// the observed ratio is inflated by (1 + 2.5/n) to dominate all later ones.
// Returns a negative value when no bound applies yet.
inline double geometric_tail_bound(double t_abs, double prev_abs, long n) {
  if (!(t_abs < prev_abs)) return -1.0;
  const double r = (t_abs / prev_abs) * (1.0 + 2.5 / static_cast<double>(n));
  if (r >= 1.0) return -1.0;
  return t_abs * r / (1.0 - r);
}

// Sum of positive terms given by term(n) for n >= 1, stopped once the
// ratio-extrapolated tail bound drops below tol_sum. Terms may grow at
// first; the bound applies after they turn monotone decreasing.
template <typename TermFn>
inline std::pair<double, EvalResult> sum_with_tail_bound(TermFn term, double tol_sum,
                                                         long max_terms, const char* what) {
  double sum = 0.0, prev = 0.0;
  for (long n = 1; n <= max_terms; ++n) {
    const double t = term(n);
    sum += t;
    if (n >= 2) {
      const double bound = geometric_tail_bound(t, prev, n);
      if (bound >= 0.0 && bound <= tol_sum) {
        EvalResult r;
        r.terms_used = n;
        r.bound_on_tail = bound;
        return {sum, r};
      }
    }
    prev = t;
  }
  EvalResult partial;
  partial.value = sum;
  partial.terms_used = max_terms;
  partial.bound_on_tail = prev;
  throw ConvergenceError(std::string(what) + ": tolerance unreachable within max_terms", partial);
}

}  // namespace detail

/// g_{a,b}(x) = (1 - sum_{n>=1} (a'n)_{n-1} w^n/n!)^{1/(b-a)} with
/// a' = a/(b-a), w = phi(x). Equals f on [0, x0] and the identity on
/// [x0, 1]. Within the near-peak window the bisection / linear-regime
/// path is used instead of the series.
inline EvalResult g_eval(const PhiParams& p, double x, double tol,
                         const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("g_eval: tol must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("g_eval: x outside [0,1]");

  if (std::fabs(x - p.x0) < detail::near_peak_window(p, limits.max_terms)) {
    EvalResult r;
    if (x >= p.x0) {
      r.value = x;
      r.method = EvalMethod::LinearRegime;
    } else {
      r.value = f_bisect(p, x, std::min(tol, 1e-13));
      r.method = EvalMethod::Bisection;
    }
    return r;
  }

  const double w = phi(p, x);
  const double c = p.b - p.a;
  if (w <= 0.0) {
    EvalResult r;
    r.value = 1.0;
    r.method = EvalMethod::Series;
    return r;
  }

  // |dg/dS| = S^{1/c - 1}/c with S = g^c in [a/b, 1].
  const double dgds_max =
      (c > 1.0) ? std::exp((1.0 / c - 1.0) * std::log(p.a / p.b)) / c : 1.0 / c;
  // extended precision in the exponent: lgamma values can reach ~1e6 near
  // x0 and their double roundoff would dominate the sum
  const long double ap = static_cast<long double>(p.a) / (static_cast<long double>(p.b) - p.a);
  const long double logw = std::log(static_cast<long double>(w));
  auto term = [&](long n) {
    return static_cast<double>(std::exp(std::lgamma(ap * n + n - 1) - std::lgamma(ap * n) -
                                        std::lgamma(static_cast<long double>(n + 1)) + n * logw));
  };
  auto [sum, r] = detail::sum_with_tail_bound(term, tol / dgds_max, limits.max_terms, "g_eval");
  r.value = std::pow(1.0 - sum, 1.0 / c);
  r.bound_on_tail *= dgds_max;
  r.method = EvalMethod::Series;
  return r;
}

/// The involution itself: series fast path left of the peak, bisection on
/// the monotone restriction right of it.
///
/// An error delta in f at x turns into delta * |phi'(f(x))/phi'(x)| when f
/// is applied again (the f(f(x)) = x contract), and that ratio is large for
/// x near 0. The series tolerance is tightened by the measured ratio, which
/// costs a second summation only where convergence is fast anyway.
inline EvalResult f_eval(const PhiParams& p, double x, double tol,
                         const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("f_eval: tol must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("f_eval: x outside [0,1]");
  if (x <= p.x0) {
    EvalResult r = g_eval(p, x, tol, limits);
    if (r.method == EvalMethod::Series && x > 0.0) {
      const double amp = std::fabs(phi_derivative(p, r.value)) / std::fabs(phi_derivative(p, x));
      if (amp > 1.0) {
        double tol_eff = tol / amp;
        if (!(tol_eff > 0)) tol_eff = 1e-300;  // w is minuscule there; terms underflow at once
        r = g_eval(p, x, tol_eff, limits);
      }
    }
    return r;
  }
  EvalResult r;
  r.value = f_bisect(p, x, std::min(tol, 1e-13));
  r.method = EvalMethod::Bisection;
  return r;
}

/// -log g_{a,b}(x) summed directly from the log-series family:
///   (1/(b-a)) sum (a'n+1)_{n-1} w^n/n!.
inline double log_g_eval(const PhiParams& p, double x, double tol,
                         const SeriesLimits& limits = {}) {
  if (!(tol > 0)) throw std::invalid_argument("log_g_eval: tol must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("log_g_eval: x outside [0,1]");
  if (std::fabs(x - p.x0) < detail::near_peak_window(p, limits.max_terms))
    return -std::log(g_eval(p, x, tol, limits).value);
  const double w = phi(p, x);
  if (w <= 0.0) return 0.0;
  const double c = p.b - p.a;
  const long double ap = static_cast<long double>(p.a) / (static_cast<long double>(p.b) - p.a);
  const long double logw = std::log(static_cast<long double>(w));
  auto term = [&](long n) {
    return static_cast<double>(std::exp(std::lgamma(ap * n + n) - std::lgamma(ap * n + 1) -
                                        std::lgamma(static_cast<long double>(n + 1)) + n * logw));
  };
  auto [sum, r] = detail::sum_with_tail_bound(term, tol * c, limits.max_terms, "log_g_eval");
  (void)r;
  return sum / c;
}

/// Hypergeometric representation of g_a for integer a >= 2:
///   g_a(x) = 1/(a+1) + a/(a+1) *
///            aF_{a-1}(-1/(a+1), 1/(a+1), ..., (a-1)/(a+1);
///                     1/a, ..., (a-1)/a;
///                     ((a+1)^{a+1}/a^a) x^a (1-x)).
/// The argument reaches 1 exactly at x = x0 = a/(a+1), where the same
/// near-peak fallback applies.
inline double hypergeom_g(int a, double x, double tol, const SeriesLimits& limits = {}) {
  if (a < 2) throw std::invalid_argument("hypergeom_g: integer a >= 2 required");
  if (!(tol > 0)) throw std::invalid_argument("hypergeom_g: tol must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("hypergeom_g: x outside [0,1]");
  const PhiParams p = PhiParams::create(a, a + 1.0);
  if (std::fabs(x - p.x0) < detail::near_peak_window(p, limits.max_terms))
    return x >= p.x0 ? x : f_bisect(p, x, std::min(tol, 1e-13));

  const double z = phi(p, x) / p.rho;  // (a+1)^{a+1}/a^a * x^a(1-x)
  if (z <= 0.0) return 1.0;
  if (z > 1.0 + 1e-12) throw ConvergenceError("hypergeom_g: argument beyond series validity", {});

  const double scale = a / (a + 1.0);
  double t = 1.0, sum = 1.0, prev_abs = 1.0;
  for (long m = 0; m < limits.max_terms; ++m) {
    double num = -1.0 / (a + 1.0) + m;
    for (int j = 1; j < a; ++j) num *= static_cast<double>(j) / (a + 1.0) + m;
    double den = m + 1.0;
    for (int j = 1; j < a; ++j) den *= static_cast<double>(j) / a + m;
    t *= z * num / den;
    sum += t;
    const double abs_t = std::fabs(t);
    if (m >= 1) {
      const double bound = detail::geometric_tail_bound(abs_t, prev_abs, m + 1);
      if (bound >= 0.0 && bound <= tol / scale) return 1.0 / (a + 1.0) + scale * sum;
    }
    prev_abs = abs_t;
  }
  EvalResult partial;
  partial.value = 1.0 / (a + 1.0) + scale * sum;
  partial.terms_used = limits.max_terms;
  throw ConvergenceError("hypergeom_g: tolerance unreachable within max_terms", partial);
}

/// Scaling relations linking (a,b) to (a*gamma, b*gamma):
///   g_{a,b}^{b-a}(x) = g_{ag,bg}^{g(b-a)}(x^{1/gamma})  and
///   f_{ag,bg}(x) = (f_{a,b}(x^gamma))^{1/gamma},
/// checked at the sample point x.
inline IdentityReport scaling_check(const PhiParams& p, double gamma, double x, double tol) {
  if (!(gamma > 0)) throw std::invalid_argument("scaling_check: gamma must be > 0");
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("scaling_check: x must be in (0,1)");
  const PhiParams ps = PhiParams::create(p.a * gamma, p.b * gamma);
  const double eval_tol = std::min(tol / 8.0, 1e-12);

  IdentityReport rep;
  rep.identity_name = "scaling(gamma)";
  rep.tolerance = tol;

  const double lhs_g = std::pow(g_eval(p, x, eval_tol).value, p.b - p.a);
  const double rhs_g = std::pow(g_eval(ps, std::pow(x, 1.0 / gamma), eval_tol).value,
                                gamma * (p.b - p.a));
  rep.add_float(0, lhs_g - rhs_g);

  const double lhs_f = f_eval(ps, x, eval_tol).value;
  const double rhs_f = std::pow(f_eval(p, std::pow(x, gamma), eval_tol).value, 1.0 / gamma);
  rep.add_float(1, lhs_f - rhs_f);

  rep.finalize_float();
  return rep;
}

/// Linear regime through the lens of the series entry
///   sum_{n>=0} (n a - 1)_{n-1} z^n / n! = -y^{-2}/2,  z = (y-1)/y^{a+1},
/// with y = 1/x this is z = x^a(1-x), so on [x0, 1] the entry and the
/// g-series say the same thing: g_a(x) = x. Both statements are checked.
inline IdentityReport prudnikov_linear_check(double nu, double x, double tol,
                                             const SeriesLimits& limits = {}) {
  if (!(nu > 1)) throw std::invalid_argument("prudnikov_linear_check: nu must be > 1");
  const double a = nu - 1.0;
  const PhiParams p = PhiParams::create(a, a + 1.0);
  if (!(x >= p.x0 && x <= 1.0))
    throw std::domain_error("prudnikov_linear_check: x must be in [x0, 1]");

  IdentityReport rep;
  rep.identity_name = "prudnikov_linear(nu)";
  rep.tolerance = tol;

  const double w = phi(p, x);
  double entry_sum = -0.5;  // n = 0 term, ( -1 )_{-1} = -1/2
  if (w > 0.0) {
    const long double al = a;
    const long double logw = std::log(static_cast<long double>(w));
    const long n_switch = static_cast<long>(std::ceil(2.0 / a)) + 2;
    auto term = [&](long n) {
      if (n < n_switch) {  // early factors can be zero or negative
        long double prod = 1.0L;
        for (long j = 0; j <= n - 2; ++j) prod *= al * n - 1.0L + j;
        return static_cast<double>(prod *
                                   std::exp(n * logw - std::lgamma(static_cast<long double>(n + 1))));
      }
      return static_cast<double>(std::exp(std::lgamma(al * n + n - 2) - std::lgamma(al * n - 1) -
                                          std::lgamma(static_cast<long double>(n + 1)) + n * logw));
    };
    // early terms may be negative; bound the tail on their magnitudes
    double prev = 0.0;
    double signed_sum = 0.0;
    for (long n = 1; n <= limits.max_terms; ++n) {
      const double t = term(n);
      signed_sum += t;
      const double abs_t = std::fabs(t);
      if (n >= n_switch) {
        const double bound = detail::geometric_tail_bound(abs_t, prev, n);
        if (bound >= 0.0 && bound <= tol / 4.0) break;
      }
      prev = abs_t;
      if (n == limits.max_terms) {
        EvalResult partial;
        partial.value = entry_sum + signed_sum;
        partial.terms_used = n;
        throw ConvergenceError("prudnikov_linear_check: tolerance unreachable", partial);
      }
    }
    entry_sum += signed_sum;
  }
  rep.add_float(0, entry_sum - (-0.5 * x * x));
  rep.add_float(1, g_eval(p, x, std::min(tol / 4.0, 1e-12), limits).value - x);
  rep.finalize_float();
  return rep;
}

}  // namespace involut
