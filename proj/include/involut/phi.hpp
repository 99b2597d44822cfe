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
#include <limits>
#include <stdexcept>

namespace involut {

/// Parameters of the unimodal family phi(x) = x^a - x^b on [0,1], with the
/// critical point x0 = (a/b)^{1/(b-a)} and the peak value
/// rho = phi(x0) = (a/b)^{a/(b-a)} (b-a)/b. rho is also the convergence
/// radius of the w-series the involution machinery sums, so w = phi(x)
/// reaches the boundary of the disk exactly at x = x0.
struct PhiParams {
  double a = 0;
  double b = 0;
  double x0 = 0;
  double rho = 0;

  static PhiParams create(double a, double b) {
    if (!(a > 0) || !(b > a)) throw std::invalid_argument("PhiParams: requires 0 < a < b");
    PhiParams p;
    p.a = a;
    p.b = b;
    p.x0 = std::exp(std::log(a / b) / (b - a));
    p.rho = std::exp(a / (b - a) * std::log(a / b)) * (b - a) / b;
    return p;
  }
};

inline double phi(const PhiParams& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("phi: x outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return std::pow(x, p.a) - std::pow(x, p.b);
}

inline double phi_derivative(const PhiParams& p, double x) {
  return p.a * std::pow(x, p.a - 1.0) - p.b * std::pow(x, p.b - 1.0);
}

inline double phi_second_derivative(const PhiParams& p, double x) {
  return p.a * (p.a - 1.0) * std::pow(x, p.a - 2.0) - p.b * (p.b - 1.0) * std::pow(x, p.b - 2.0);
}

/// Root-finding oracle for the involution: the y on the opposite side of x0
/// with phi(y) = phi(x). Bisection on the monotone restriction, driven to
/// the smaller of `tol` and full relative double precision (the deep
/// relative accuracy matters when y is close to 0 and log f is needed).
inline double f_bisect(const PhiParams& p, double x, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("f_bisect: tol must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("f_bisect: x outside [0,1]");
  if (x == p.x0) return p.x0;
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  const double w = phi(p, x);
  double lo, hi;
  bool increasing;
  if (x < p.x0) {  // phi decreases from rho to 0 on [x0, 1]
    lo = p.x0;
    hi = 1.0;
    increasing = false;
  } else {  // phi increases from 0 to rho on [0, x0]
    lo = 0.0;
    hi = p.x0;
    increasing = true;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 2200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted in double
    const double fm = phi(p, mid);
    const bool go_right = increasing ? (fm < w) : (fm > w);
    if (go_right)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= tol && hi - lo <= 4.0 * eps * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace involut
