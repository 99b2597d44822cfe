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

#include "involut/rational.hpp"

namespace involut {

/// The four coefficient families attached to the unimodal family
/// x^a - x^b and its Lambert limit. `parameter` is a' = a/(b-a);
/// the Lambert kinds ignore it.
///
///   GCoeff(a', n)    = (a'n)_{n-1}   / n!
///   LogGCoeff(a', n) = (a'n+1)_{n-1} / n!
///   LambertG(n)      = (n-1)^{n-1}   / n!   (0^0 = 1)
///   LambertLogG(n)   = n^{n-1}       / n!
struct CoefficientFamily {
  enum Kind { GCoeff, LogGCoeff, LambertG, LambertLogG };

  Kind kind = GCoeff;
  BigRational parameter = 1;

  static CoefficientFamily g(BigRational aprime) { return {GCoeff, std::move(aprime)}; }
  static CoefficientFamily log_g(BigRational aprime) { return {LogGCoeff, std::move(aprime)}; }
  static CoefficientFamily lambert_g() { return {LambertG, 0}; }
  static CoefficientFamily lambert_log_g() { return {LambertLogG, 0}; }
};

inline BigRational coeff(const CoefficientFamily& family, long n) {
  if (n < 1) throw std::domain_error("coeff: index must be >= 1");
  using K = CoefficientFamily::Kind;
  if ((family.kind == K::GCoeff || family.kind == K::LogGCoeff) && !(family.parameter > 0))
    throw std::domain_error("coeff: parameter must be positive");
  const BigRational nfact(factorial(n));
  switch (family.kind) {
    case K::GCoeff:
      return pochhammer(family.parameter * n, n - 1) / nfact;
    case K::LogGCoeff:
      return pochhammer(family.parameter * n + 1, n - 1) / nfact;
    case K::LambertG:
      return rational_pow(BigRational(n - 1), n - 1) / nfact;  // 0^0 = 1 at n = 1
    case K::LambertLogG:
      return rational_pow(BigRational(n), n - 1) / nfact;
  }
  throw std::logic_error("coeff: unknown family");
}

}  // namespace involut
