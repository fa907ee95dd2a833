// Copyright 2026 The Achievement Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "achieve/rational.h"

#include <random>
#include <stdexcept>

#include "achieve/errors.h"
#include "gtest/gtest.h"

namespace achieve {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::Parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::Parse("-1.5"), Rational(-3, 2));
  EXPECT_EQ(Rational::Parse("+3"), Rational(3));
  EXPECT_EQ(Rational::Parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("0.1") * Rational(3), Rational(3, 10));
}

TEST(RationalTest, ParsesFractions) {
  EXPECT_EQ(Rational::Parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::Parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::Parse("10/5"), Rational(2));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "1/-2", "1.", ".",
                          "1.2.3", "abc", "1e3", " 1", "1/2/3",
                          "99999999999999999999"}) {
    EXPECT_FALSE(Rational::TryParse(bad).has_value()) << bad;
  }
  EXPECT_THROW(Rational::Parse("1/0"), ParseError);
}

TEST(RationalTest, ArithmeticAndOrdering) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).Floor(), 3);
  EXPECT_EQ(Rational(-7, 2).Floor(), -4);
  EXPECT_EQ(Rational(-4).Floor(), -4);
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(RationalTest, OverflowThrowsInsteadOfWrapping) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}

TEST(RationalTest, FixedRoundsHalfAwayFromZero) {
  EXPECT_EQ(Rational(19, 40).ToFixed(2), "0.48");
  EXPECT_EQ(Rational(1, 8).ToFixed(2), "0.13");
  EXPECT_EQ(Rational(-1, 8).ToFixed(2), "-0.13");
  EXPECT_EQ(Rational(1, 3).ToFixed(2), "0.33");
  EXPECT_EQ(Rational(2, 3).ToFixed(2), "0.67");
  EXPECT_EQ(Rational(-1, 1000).ToFixed(2), "0.00");
  EXPECT_EQ(Rational(5).ToFixed(2), "5.00");
  EXPECT_EQ(Rational(3, 2).ToFixed(0), "2");
}

TEST(RationalTest, StringForms) {
  EXPECT_EQ(Rational(3, 4).ToString(), "3/4");
  EXPECT_EQ(Rational(2).ToString(), "2");
  EXPECT_EQ(Rational(2).ToFractionString(), "2/1");
  EXPECT_EQ(Rational(-1, 2).ToFractionString(), "-1/2");
}

// ToString output always parses back to the same value.
TEST(RationalTest, TextRoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto n = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto d = static_cast<std::int64_t>(rng() % 97) + 1;
    const Rational r(n, d);
    EXPECT_EQ(Rational::Parse(r.ToString()), r);
    EXPECT_EQ(Rational::Parse(r.ToFractionString()), r);
  }
}

// Field axioms on random small values, checked through cross-multiplication.
TEST(RationalTest, ArithmeticProperty) {
  std::mt19937_64 rng(5);
  auto draw = [&] {
    return Rational(static_cast<std::int64_t>(rng() % 41) - 20,
                    static_cast<std::int64_t>(rng() % 12) + 1);
  };
  for (int t = 0; t < 500; ++t) {
    const Rational a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (b.sign() != 0) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(a < b, a.numerator() * b.denominator() <
                         b.numerator() * a.denominator());
  }
}

}  // namespace
}  // namespace achieve
