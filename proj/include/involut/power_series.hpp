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

#include <utility>
#include <vector>

#include "involut/rational.hpp"

namespace involut {

/// Truncated formal power series with exact rational coefficients.
///
/// A series of truncation order N stores N+1 coefficients; every operation is
/// exact through order N, truncation being the only approximation. The
/// expansion point is carried as metadata (binary operations require both
/// operands to share order and point).
class PowerSeries {
 public:
  PowerSeries(long order, BigRational point = 0)
      : coef_(static_cast<size_t>(check_order(order)) + 1), point_(std::move(point)) {}

  PowerSeries(std::vector<BigRational> coefficients, BigRational point = 0)
      : coef_(std::move(coefficients)), point_(std::move(point)) {
    check_order(static_cast<long>(coef_.size()) - 1);
  }

  static PowerSeries identity(long order, BigRational point = 0) {
    PowerSeries s(order, std::move(point));
    s.coef_[1] = 1;
    return s;
  }

  long order() const { return static_cast<long>(coef_.size()) - 1; }
  const BigRational& expansion_point() const { return point_; }

  const BigRational& operator[](long k) const { return coef_.at(static_cast<size_t>(k)); }
  BigRational& at(long k) { return coef_.at(static_cast<size_t>(k)); }

  bool operator==(const PowerSeries& o) const = default;

  PowerSeries& operator+=(const PowerSeries& o) {
    require_compatible(o);
    for (size_t k = 0; k < coef_.size(); ++k) coef_[k] += o.coef_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    require_compatible(o);
    for (size_t k = 0; k < coef_.size(); ++k) coef_[k] -= o.coef_[k];
    return *this;
  }
  PowerSeries& operator*=(const BigRational& c) {
    for (auto& x : coef_) x *= c;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const BigRational& c) { return a *= c; }
  friend PowerSeries operator*(const BigRational& c, PowerSeries a) { return a *= c; }

  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.coef_) x = -x;
    return r;
  }

  /// Cauchy product truncated at the common order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.require_compatible(b);
    PowerSeries r(a.order(), a.point_);
    for (long i = 0; i <= a.order(); ++i) {
      if (a[i] == 0) continue;
      for (long j = 0; i + j <= a.order(); ++j) {
        if (b[j] == 0) continue;
        r.coef_[static_cast<size_t>(i + j)] += a[i] * b[j];
      }
    }
    return r;
  }

  void require_compatible(const PowerSeries& o) const {
    if (order() != o.order() || point_ != o.point_)
      throw std::invalid_argument("PowerSeries: truncation order or expansion point mismatch");
  }

 private:
  static long check_order(long n) {
    if (n < 1) throw std::invalid_argument("PowerSeries: truncation order must be >= 1");
    return n;
  }

  std::vector<BigRational> coef_;
  BigRational point_;
};

/// Multiplicative inverse: t with s*t = 1 + O(x^{N+1}). Requires s(0) != 0.
inline PowerSeries reciprocal(const PowerSeries& s) {
  if (s[0] == 0) throw std::domain_error("reciprocal: zero constant term");
  PowerSeries t(s.order(), s.expansion_point());
  t.at(0) = BigRational(1) / s[0];
  for (long n = 1; n <= s.order(); ++n) {
    BigRational acc = 0;
    for (long k = 1; k <= n; ++k) acc += s[k] * t[n - k];
    t.at(n) = -acc / s[0];
  }
  return t;
}

/// Formal exponential. Requires s(0) = 0. Uses E' = s' E, i.e.
/// n e_n = sum_{k=1..n} k s_k e_{n-k}.
inline PowerSeries exp(const PowerSeries& s) {
  if (s[0] != 0) throw std::invalid_argument("exp: constant term must be 0");
  PowerSeries e(s.order(), s.expansion_point());
  e.at(0) = 1;
  for (long n = 1; n <= s.order(); ++n) {
    BigRational acc = 0;
    for (long k = 1; k <= n; ++k) acc += BigRational(k) * s[k] * e[n - k];
    e.at(n) = acc / n;
  }
  return e;
}

/// Formal logarithm. Requires s(0) = 1. Uses s L' = s', i.e.
/// n l_n = n s_n - sum_{m=1..n-1} m l_m s_{n-m}.
inline PowerSeries log(const PowerSeries& s) {
  if (s[0] != 1) throw std::invalid_argument("log: constant term must be 1");
  PowerSeries l(s.order(), s.expansion_point());
  for (long n = 1; n <= s.order(); ++n) {
    BigRational acc = BigRational(n) * s[n];
    for (long m = 1; m < n; ++m) acc -= BigRational(m) * l[m] * s[n - m];
    l.at(n) = acc / n;
  }
  return l;
}

namespace detail {

// Convolution of coefficient vectors truncated at order m.
inline std::vector<BigRational> mul_trunc(const std::vector<BigRational>& a,
                                          const std::vector<BigRational>& b, long m) {
  std::vector<BigRational> r(static_cast<size_t>(m) + 1);
  const long alen = static_cast<long>(a.size()), blen = static_cast<long>(b.size());
  for (long i = 0; i < alen && i <= m; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < blen && i + j <= m; ++j)
      r[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  }
  return r;
}

}  // namespace detail

/// Composition outer(inner(x)) truncated at the common order.
/// Requires inner constant term = 0 (otherwise truncation would lose terms).
inline PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  outer.require_compatible(inner);
  if (inner[0] != 0) throw std::invalid_argument("compose: inner constant term must be 0");
  const long N = outer.order();
  // Horner: r = ((c_N inner + c_{N-1}) inner + ...) + c_0
  std::vector<BigRational> in(static_cast<size_t>(N) + 1);
  for (long k = 0; k <= N; ++k) in[static_cast<size_t>(k)] = inner[k];
  std::vector<BigRational> r(1, outer[N]);
  for (long k = N - 1; k >= 0; --k) {
    r = detail::mul_trunc(r, in, N);
    r.resize(static_cast<size_t>(N) + 1);
    r[0] += outer[k];
  }
  r.resize(static_cast<size_t>(N) + 1);
  return PowerSeries(std::move(r), outer.expansion_point());
}

/// Compositional inverse by exact coefficient matching: returns t with
/// s(t(x)) = x + O(x^{N+1}). Requires s(0) = 0 and s'(0) != 0.
///
/// Order-n step: with t known through order n-1 and T = sum_{j<n} t_j x^j,
/// the x^n coefficient of s(T) is linear in the unknown t_n only through
/// s_1 t_n, so t_n = -[x^n] s(T) / s_1.
inline PowerSeries revert(const PowerSeries& s) {
  if (s[0] != 0) throw std::domain_error("revert: constant term must be 0");
  if (s[1] == 0) throw std::domain_error("revert: zero linear coefficient, not invertible");
  const long N = s.order();
  std::vector<BigRational> t(static_cast<size_t>(N) + 1);
  t[1] = BigRational(1) / s[1];
  for (long n = 2; n <= N; ++n) {
    // powers of the partial inverse, truncated at order n
    std::vector<BigRational> tpart(t.begin(), t.begin() + n);
    std::vector<BigRational> power(1, BigRational(1));
    BigRational cn = 0;
    for (long k = 1; k <= n; ++k) {
      power = detail::mul_trunc(power, tpart, n);
      if (s[k] != 0 && static_cast<long>(power.size()) > n) cn += s[k] * power[static_cast<size_t>(n)];
    }
    t[static_cast<size_t>(n)] = -cn / s[1];
  }
  return PowerSeries(std::move(t), BigRational(0));
}

/// Exact expansion of w^a - w^b around w = 1 in powers of u = w - 1,
/// via the binomial series of (1+u)^a with rational exponent.
/// Requires 0 < a < b.
inline PowerSeries expand_phi_at_one(const BigRational& a, const BigRational& b, long order) {
  if (!(a > 0 && a < b)) throw std::invalid_argument("expand_phi_at_one: requires 0 < a < b");
  PowerSeries s(order, BigRational(1));
  for (long k = 0; k <= order; ++k) s.at(k) = binomial(a, k) - binomial(b, k);
  return s;
}

}  // namespace involut
