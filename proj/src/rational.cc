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

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "achieve/errors.h"

namespace achieve {
namespace {

using Wide = __int128;

Wide WideAbs(Wide v) { return v < 0 ? -v : v; }

Wide WideGcd(Wide a, Wide b) {
  a = WideAbs(a);
  b = WideAbs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// Parses an unsigned run of digits into a wide accumulator; false on
// overflow of the 64-bit range (leaving headroom for scaling).
bool AccumulateDigits(std::string_view digits, Wide& value, int& count) {
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    value = value * 10 + (ch - '0');
    ++count;
    if (value > std::numeric_limits<std::int64_t>::max()) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(Wide numerator, Wide denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Wide g = WideGcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!FitsInt64(numerator) || !FitsInt64(denominator)) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

std::optional<Rational> Rational::TryParse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  Wide num = 0;
  Wide den = 1;
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash);
    std::string_view q = text.substr(slash + 1);
    int p_digits = 0;
    int q_digits = 0;
    if (p.empty() || q.empty()) return std::nullopt;
    if (!AccumulateDigits(p, num, p_digits)) return std::nullopt;
    Wide qv = 0;
    if (!AccumulateDigits(q, qv, q_digits)) return std::nullopt;
    if (qv == 0) return std::nullopt;
    den = qv;
  } else {
    const auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    int digits = 0;
    if (!AccumulateDigits(whole, num, digits)) return std::nullopt;
    int frac_digits = 0;
    if (!AccumulateDigits(frac, num, frac_digits)) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    for (int i = 0; i < frac_digits; ++i) {
      den *= 10;
      if (den > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
    }
  }
  if (negative) num = -num;
  try {
    return FromWide(num, den);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

Rational Rational::Parse(std::string_view text) {
  auto r = TryParse(text);
  if (!r) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  return *r;
}

std::int64_t Rational::Floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return ToFractionString();
}

std::string Rational::ToFractionString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToFixed(int decimals) const {
  Wide scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  Wide magnitude = WideAbs(num_) * scale;
  // round(|x| * scale) with ties away from zero
  Wide scaled = (2 * magnitude + den_) / (2 * static_cast<Wide>(den_));
  Wide whole = scaled / scale;
  Wide frac = scaled % scale;

  std::string out;
  if (num_ < 0 && scaled != 0) out += '-';
  out += std::to_string(static_cast<long long>(whole));
  if (decimals > 0) {
    std::string digits = std::to_string(static_cast<long long>(frac));
    out += '.';
    out.append(decimals - digits.size(), '0');
    out += digits;
  }
  return out;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    *this = FromWide(static_cast<Wide>(num_) + other.num_, den_);
  } else {
    *this = FromWide(static_cast<Wide>(num_) * other.den_ +
                         static_cast<Wide>(other.num_) * den_,
                     static_cast<Wide>(den_) * other.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  if (den_ == other.den_) {
    *this = FromWide(static_cast<Wide>(num_) - other.num_, den_);
  } else {
    *this = FromWide(static_cast<Wide>(num_) * other.den_ -
                         static_cast<Wide>(other.num_) * den_,
                     static_cast<Wide>(den_) * other.den_);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = FromWide(static_cast<Wide>(num_) * other.num_,
                   static_cast<Wide>(den_) * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("Rational: division by zero");
  *this = FromWide(static_cast<Wide>(num_) * other.den_,
                   static_cast<Wide>(den_) * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::int64_t CommonDenominator(std::int64_t a, std::int64_t b) {
  Wide l = static_cast<Wide>(a) / WideGcd(a, b) * b;
  if (!FitsInt64(l)) throw std::overflow_error("denominator lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace achieve
