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

#include <random>

#include "involut/rational.hpp"

using namespace involut;

TEST_CASE("pochhammer values") {
  CHECK(pochhammer(BigRational(1), 0) == 1);
  CHECK(pochhammer(BigRational(0), -1) == -1);  // (0)_{-1} = 1/(0-1)
  CHECK(pochhammer(BigRational(3), 2) == 12);   // 3*4
  CHECK(pochhammer(BigRational(-5), 3) == -60); // -5*-4*-3
  CHECK(pochhammer(BigRational(1, 2), 3) == BigRational(15, 8));
  CHECK(pochhammer(BigRational(7), -1) == BigRational(1, 6));
}

TEST_CASE("pochhammer errors") {
  CHECK_THROWS_AS(pochhammer(BigRational(2), -2), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer(BigRational(1), -1), std::domain_error);
}

TEST_CASE("rational binomial is the falling factorial over k!") {
  CHECK(binomial(BigRational(5), 2) == 10);
  CHECK(binomial(BigRational(1, 2), 2) == BigRational(-1, 8));
  CHECK(binomial(BigRational(-1), 0) == 1);
  CHECK(binomial(BigRational(-1), 3) == -1);
  CHECK_THROWS_AS(binomial(BigRational(1), -1), std::invalid_argument);
}

TEST_CASE("factorial and rational_pow") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(rational_pow(BigRational(2, 3), 3) == BigRational(8, 27));
  CHECK(rational_pow(BigRational(2), -2) == BigRational(1, 4));
  CHECK(rational_pow(BigRational(7), 0) == 1);
}

TEST_CASE("parse and print round trip") {
  CHECK(parse_rational("3/4") == BigRational(3, 4));
  CHECK(parse_rational("-1/2") == BigRational(-1, 2));
  CHECK(parse_rational("0.25") == BigRational(1, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-2.5") == BigRational(-5, 2));
  CHECK(parse_rational("007") == 7);        // no octal surprises
  CHECK(parse_rational("0.07") == BigRational(7, 100));
  CHECK(parse_rational("1/-2") == BigRational(-1, 2));
  CHECK(to_fraction_string(BigRational(6, 4)) == "3/2");
  CHECK(to_fraction_string(BigRational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("properties of normalized rationals") {
  // denominator stays positive and gcd-reduced under arithmetic
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  for (int i = 0; i < 200; ++i) {
    BigRational x(num(rng), den(rng)), y(num(rng), den(rng));
    for (BigRational v : {BigRational(x + y), BigRational(x - y), BigRational(x * y)}) {
      CHECK(denominator(v) > 0);
      CHECK(gcd(abs(numerator(v)), denominator(v)) == 1);
    }
  }
}
