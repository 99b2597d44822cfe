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

#include "involut/involution.hpp"
#include "involut/quadrature.hpp"
#include "involut/report.hpp"

namespace involut {

/// cot(pi r) for r in (0,1), exactly 0 at r = 1/2 and computed from the
/// folded argument near 1 so no precision is lost to the sin zero.
inline double cot_pi(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("cot_pi: r must be in (0,1)");
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -cot_pi(1.0 - r);
  return std::cos(std::numbers::pi * r) / std::sin(std::numbers::pi * r);
}

/// int_0^1 f_a = 1/(1+a) [1 - a pi/(a+1) cot(a pi/(a+1))]; equals 1/2 at a=1.
inline double int_f_closed(double a) {
  if (!(a > 0)) throw std::invalid_argument("int_f_closed: a must be > 0");
  const double r = a / (a + 1.0);
  return (1.0 - r * std::numbers::pi * cot_pi(r)) / (1.0 + a);
}

/// int_0^{x0} f_a = [1 + a + a^2 - a pi cot(a pi/(a+1))] / (2 (1+a)^2).
inline double int_f_0x0_closed(double a) {
  if (!(a > 0)) throw std::invalid_argument("int_f_0x0_closed: a must be > 0");
  const double r = a / (a + 1.0);
  return (1.0 + a + a * a - a * std::numbers::pi * cot_pi(r)) / (2.0 * (1.0 + a) * (1.0 + a));
}

/// int_0^1 g_a = 1 - a/(2(1+a)) [1 - pi/(a+1) cot(pi/(a+1))].
inline double int_g_closed(double a) {
  if (!(a > 0)) throw std::invalid_argument("int_g_closed: a must be > 0");
  const double r = 1.0 / (a + 1.0);
  return 1.0 - a / (2.0 * (1.0 + a)) * (1.0 - std::numbers::pi * r * cot_pi(r));
}

/// int_0^1 g_{a,b}^{b-a}(x) x^{b-a-1} dx
///   = (1/(b-a)) [1 - a/(2b^2) (b + (b-a) pi cot(pi a/b))].
inline double int_gab_closed(double a, double b) {
  if (!(a > 0 && b > a)) throw std::invalid_argument("int_gab_closed: requires 0 < a < b");
  return (1.0 - a / (2.0 * b * b) * (b + (b - a) * std::numbers::pi * cot_pi(a / b))) / (b - a);
}

/// int_0^1 f_{a,b}^{b-a}(x) x^{b-a-1} dx = 1/b - (a/b^2) pi cot(pi a/b),
/// the transfer-consistent form 2*int_gab - 1/(b-a) (with h = x^{b-a}).
inline double int_fab_closed(double a, double b) {
  if (!(a > 0 && b > a)) throw std::invalid_argument("int_fab_closed: requires 0 < a < b");
  return 1.0 / b - (a / (b * b)) * std::numbers::pi * cot_pi(a / b);
}

/// Both halves of the transfer identity for a caller-supplied monotone h
/// (h and h' given separately):
///   int_0^1 h(f) h' = 2 int_0^1 h(g) h' - h(1)(h(1) - h(0))       and
///   int_0^{x0} h(f) h' = int_0^1 h(g) h' + (h(x0)^2 - h(1)^2)/2.
inline IdentityReport transfer_identity_check(const PhiParams& p, const FunctionHandle& h,
                                              const FunctionHandle& h_derivative, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("transfer_identity_check: tol must be > 0");
  const double qtol = tol / 16.0;
  const double eval_tol = std::min(tol / 100.0, 1e-12);
  FunctionHandle hf{[&](double x) { return h.evaluator(f_eval(p, x, eval_tol).value) * h_derivative.evaluator(x); },
                    "h(f(x)) h'(x)"};
  FunctionHandle hg{[&](double x) { return h.evaluator(g_eval(p, x, eval_tol).value) * h_derivative.evaluator(x); },
                    "h(g(x)) h'(x)"};
  const double ihf = integrate(hf, 0.0, 1.0, qtol).value;
  // g is continuous but kinked at x0; integrate the smooth pieces
  const double ihg = integrate(hg, 0.0, p.x0, qtol).value + integrate(hg, p.x0, 1.0, qtol).value;
  const double ihf_left = integrate(hf, 0.0, p.x0, qtol).value;
  const double h1 = h.evaluator(1.0), h0 = h.evaluator(0.0), hx0 = h.evaluator(p.x0);

  IdentityReport rep;
  rep.identity_name = "transfer_identity";
  rep.tolerance = tol;
  rep.add_float(0, ihf - (2.0 * ihg - h1 * (h1 - h0)));
  rep.add_float(1, ihf_left - (ihg + 0.5 * (hx0 * hx0 - h1 * h1)));
  rep.finalize_float();
  return rep;
}

/// sum_{n>=1} n Gamma(cn+n-1)/Gamma(cn+n+2) against its closed form
///   [c+1 + pi cot(pi c/(c+1))] / (2 (c+1)^2).
/// The gamma ratio collapses to the three-term product ((c+1)n-1)((c+1)n)((c+1)n+1),
/// so terms are n/(((c+1)n)^2 - 1)/((c+1)n); the n^{-2} tail is summed with
/// digamma-derivative asymptotics.
inline IdentityReport cot_sum_check(double c, double tol) {
  if (!(c > 0)) throw std::invalid_argument("cot_sum_check: c must be > 0");
  if (!(tol > 0)) throw std::invalid_argument("cot_sum_check: tol must be > 0");
  const double s = c + 1.0;
  const long N = 10000;
  long double sum = 0.0L;
  for (long n = N; n >= 1; --n) {
    const long double m = static_cast<long double>(s) * n;
    sum += n / ((m - 1.0L) * m * (m + 1.0L));
  }
  // tail: sum_{n>N} 1/(s^3 n^2 - s) = (1/s^3) sum 1/(n^2 - beta^2),
  // beta = 1/s; the dipole split gives (psi(N+1+beta) - psi(N+1-beta))/(2 beta).
  auto psi_asym = [](double x) {
    const double ix = 1.0 / x, ix2 = ix * ix;
    return std::log(x) - 0.5 * ix - ix2 * (1.0 / 12.0 - ix2 * (1.0 / 120.0 - ix2 / 252.0));
  };
  const double beta = 1.0 / s;
  const double tail =
      (psi_asym(N + 1.0 + beta) - psi_asym(N + 1.0 - beta)) / (2.0 * beta) / (s * s * s);
  const double value = static_cast<double>(sum) + tail;
  const double closed = (s + std::numbers::pi * cot_pi(c / s)) / (2.0 * s * s);

  IdentityReport rep;
  rep.identity_name = "cot_sum(c)";
  rep.tolerance = tol;
  rep.add_float(0, value - closed);
  rep.finalize_float();
  return rep;
}

/// I_{a,b} = int_0^1 -log f_{a,b}(x)/x dx three ways: direct quadrature,
/// the double-integral reduction (2/(b-a)) int_0^1 [log(1-t^b) - log(1-t^a)]/t dt,
/// and the closed form pi^2/(3ab). All pairwise residuals must meet tol.
inline IdentityReport andrews_integral_check(double a, double b, double tol) {
  if (!(a > 0 && b > a)) throw std::invalid_argument("andrews_integral_check: requires 0 < a < b");
  if (!(tol > 0)) throw std::invalid_argument("andrews_integral_check: tol must be > 0");
  const PhiParams p = PhiParams::create(a, b);
  const double qtol = tol / 16.0;

  FunctionHandle direct{[&](double x) {
                          const double s = 1.0 - x;
                          if (s < 1e-12)  // f ~ ((b-a)s)^{1/a} up to O(s) corrections
                            return -std::log((b - a) * s) / (a * x);
                          return -std::log(f_eval(p, x, 1e-13).value) / x;
                        },
                        "-log f(x)/x"};
  const double route_direct = integrate(direct, 0.0, 1.0, qtol).value;

  FunctionHandle logs{[&](double t) {
                        const double lt = std::log(t);
                        const double nb = -std::expm1(b * lt);  // 1 - t^b
                        const double na = -std::expm1(a * lt);
                        return (std::log(nb) - std::log(na)) / t;
                      },
                      "[log(1-t^b) - log(1-t^a)]/t"};
  const double route_logs = 2.0 / (b - a) * integrate(logs, 0.0, 1.0, qtol).value;

  const double closed = std::numbers::pi * std::numbers::pi / (3.0 * a * b);

  IdentityReport rep;
  rep.identity_name = "andrews_integral(a,b)";
  rep.tolerance = tol;
  rep.add_float(0, route_direct - closed);
  rep.add_float(1, route_logs - closed);
  rep.add_float(2, route_direct - route_logs);
  rep.finalize_float();
  return rep;
}

/// Tabulated sinh-ratio integral: int_0^infty (sinh(az/2)/sinh((a+1)z/2))^2 dz equals
/// 1/(2c) - pi b/(2c^2) cot(pi b/c) at b = a/2, c = (a+1)/2, which is
/// int_f_closed(a). Semi-infinite range truncated where the e^{-z} decay
/// puts the integrand below 1e-18.
inline IdentityReport sinh_ratio_integral_check(double a, double tol) {
  if (!(a > 0)) throw std::invalid_argument("sinh_ratio_integral_check: a must be > 0");
  if (!(tol > 0)) throw std::invalid_argument("sinh_ratio_integral_check: tol must be > 0");
  const double bq = 0.5 * a, cq = 0.5 * (a + 1.0);
  const double zmax = (18.0 * std::numbers::ln10 + 10.0) / (2.0 * (cq - bq));
  FunctionHandle fh{[&](double z) {
                      if (z < 1e-14) {
                        const double r = bq / cq;
                        return r * r;
                      }
                      const double r = std::sinh(bq * z) / std::sinh(cq * z);
                      return r * r;
                    },
                    "(sinh(az/2)/sinh((a+1)z/2))^2"};
  const double quad = integrate(fh, 0.0, zmax, tol / 8.0).value;
  const double entry = 1.0 / (2.0 * cq) - std::numbers::pi * bq / (2.0 * cq * cq) * cot_pi(bq / cq);

  IdentityReport rep;
  rep.identity_name = "sinh_ratio_integral(a)";
  rep.tolerance = tol;
  rep.add_float(0, quad - entry);
  rep.add_float(1, quad - int_f_closed(a));
  rep.finalize_float();
  return rep;
}

/// The area form int_0^1 ((1-t^a)/(1-t^{a+1}))^2 dt of int_0^1 f_a; the
/// integrand has a removable point at t = 1 with limit (a/(a+1))^2.
inline IdentityReport double_integral_area_check(double a, double tol) {
  if (!(a > 0)) throw std::invalid_argument("double_integral_area_check: a must be > 0");
  if (!(tol > 0)) throw std::invalid_argument("double_integral_area_check: tol must be > 0");
  FunctionHandle fh{[&](double t) {
                      const double s = 1.0 - t;
                      if (s < 1e-9) {
                        const double r = a / (a + 1.0);
                        return r * r * (1.0 + s);
                      }
                      const double lt = std::log(t);
                      const double r = std::expm1(a * lt) / std::expm1((a + 1.0) * lt);
                      return r * r;
                    },
                    "((1-t^a)/(1-t^{a+1}))^2"};
  const double quad = integrate(fh, 0.0, 1.0, tol / 8.0).value;

  IdentityReport rep;
  rep.identity_name = "double_integral_area(a)";
  rep.tolerance = tol;
  rep.add_float(0, quad - int_f_closed(a));
  rep.finalize_float();
  return rep;
}

}  // namespace involut
