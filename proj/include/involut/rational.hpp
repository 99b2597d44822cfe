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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace involut {

/// Exact arbitrary-precision integer / rational scalars.
/// cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every operation.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

/// Rising factorial z (z+1) ... (z+n-1), extended to n = -1 by
/// (z)_{-1} = 1/(z-1) so that (0)_{-1} = -1.
inline BigRational pochhammer(const BigRational& z, long n) {
  if (n < -1) throw std::invalid_argument("pochhammer: order below -1 unsupported");
  if (n == -1) {
    if (z == 1) throw std::domain_error("pochhammer: (1)_{-1} is a pole");
    return BigRational(1) / (z - 1);
  }
  BigRational r = 1;
  for (long j = 0; j < n; ++j) r *= z + j;
  return r;
}

/// binom(r, k) for rational upper argument: falling factorial over k!.
inline BigRational binomial(const BigRational& r, long k) {
  if (k < 0) throw std::invalid_argument("binomial: negative lower index");
  BigRational p = 1;
  for (long j = 0; j < k; ++j) p *= r - j;
  return p / BigRational(factorial(k));
}

inline BigRational rational_pow(const BigRational& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to negative power");
    return BigRational(1) / rational_pow(base, -e);
  }
  BigRational r = 1, b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

namespace detail {

// [+-]?[0-9]+ in base 10. Leading zeros are stripped before handing the
// string to cpp_int, which would otherwise read them as an octal prefix.
inline BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("parse_rational: invalid integer part");
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace detail

/// Parses "p/q", plain integers and finite decimals ("3", "-1/2", "0.75").
inline BigRational parse_rational(std::string_view text) {
  auto fail = [&]() -> BigRational {
    throw std::invalid_argument("parse_rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  const std::string s(text);
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt n = detail::parse_integer(s.substr(0, slash));
      BigInt d = detail::parse_integer(s.substr(slash + 1));
      if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return BigRational(n, d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos) return fail();
      BigInt whole = detail::parse_integer(s.substr(0, dot).empty() ? "0" : s.substr(0, dot));
      const bool negative = !s.empty() && s.front() == '-';
      BigInt d = 1;
      for (size_t j = 0; j < frac.size(); ++j) d *= 10;
      BigInt n = abs(whole) * d + (frac.empty() ? BigInt(0) : detail::parse_integer(frac));
      if (negative) n = -n;
      return BigRational(n, d);
    }
    return BigRational(detail::parse_integer(s));
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::runtime_error&) {
    return fail();
  }
}

/// "p/q" for proper fractions, plain "p" for integers.
inline std::string to_fraction_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace involut
