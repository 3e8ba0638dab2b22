// Copyright 2026 The circwit Authors
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

#include "circwit/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <system_error>

namespace circwit {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      std::int64_t p = 0;
      std::int64_t q = 0;
      auto lhs = text.substr(0, slash);
      auto rhs = text.substr(slash + 1);
      auto [pe, pec] = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p);
      auto [qe, qec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), q);
      if (pec != std::errc() || qec != std::errc() || pe != lhs.data() + lhs.size() ||
          qe != rhs.data() + rhs.size() || q == 0) {
        return std::nullopt;
      }
      return Rational(p, q);
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    }
    Wide mantissa = 0;
    int scale = 0;
    int digits = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == '.') {
        if (seen_point) return std::nullopt;
        seen_point = true;
        continue;
      }
      if (c < '0' || c > '9') break;
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > Wide(1) << 100) return std::nullopt;
      ++digits;
      if (seen_point) --scale;
    }
    if (digits == 0) return std::nullopt;
    if (pos < text.size()) {
      if (text[pos] != 'e' && text[pos] != 'E') return std::nullopt;
      ++pos;
      int exponent = 0;
      auto rest = text.substr(pos);
      if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
      auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
      if (ec != std::errc() || end != rest.data() + rest.size()) return std::nullopt;
      scale += exponent;
    }
    if (scale > 36 || scale < -36) return std::nullopt;
    Wide den = 1;
    for (; scale > 0; --scale) mantissa *= 10;
    for (; scale < 0; ++scale) den *= 10;
    if (negative) mantissa = -mantissa;
    return make(mantissa, den);
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

Number Number::parse(std::string_view text) {
  if (auto exact = Rational::parse(text)) return Number(*exact);
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  }
  return Number(value);
}

Number Number::from_double_literal(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite parameter");
  if (auto exact = Rational::parse(shortest_repr(value))) return Number(*exact);
  return Number(value);
}

int Number::compare(const Rational& r) const {
  if (exact_) {
    auto c = *exact_ <=> r;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  double rv = r.to_double();
  return value_ < rv ? -1 : (value_ > rv ? 1 : 0);
}

std::string Number::to_string() const {
  return exact_ ? exact_->to_string() : full_precision(value_);
}

std::string shortest_repr(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string full_precision(double value) {
  if (value == 0.0) value = 0.0;  // fold -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace circwit
