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

#ifndef ACHIEVE_RATIONAL_H_
#define ACHIEVE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace achieve {

// Exact rational number with 64-bit numerator and denominator.
//
// Always normalized: denominator > 0 and gcd(|numerator|, denominator) == 1.
// Intermediate products are computed in 128 bits; a result that does not fit
// back into 64 bits throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts an optional sign followed by either a decimal numeral ("0.25",
  // "3", ".5") read as an exact base-10 fraction, or "p/q" with q > 0.
  static std::optional<Rational> TryParse(std::string_view text);
  // Same as TryParse but throws ParseError on failure.
  static Rational Parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // Largest integer <= *this.
  std::int64_t Floor() const;
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // "p/q" even for integers (used by exact CSV columns).
  std::string ToFractionString() const;
  // Fixed-point rendering rounded half away from zero.
  std::string ToFixed(int decimals) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational FromWide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Abs(const Rational& r);

// Least common multiple of the denominators; throws on overflow.
std::int64_t CommonDenominator(std::int64_t a, std::int64_t b);

}  // namespace achieve

template <>
struct std::hash<achieve::Rational> {
  std::size_t operator()(const achieve::Rational& r) const noexcept {
    return std::hash<std::int64_t>()(r.numerator()) * 1000003u ^
           std::hash<std::int64_t>()(r.denominator());
  }
};

#endif  // ACHIEVE_RATIONAL_H_
