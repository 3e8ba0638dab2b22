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

#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace circwit {

/// Exact rational p/q with q > 0 and gcd(p, q) = 1.
///
/// Used for interval endpoints, state weights and boundary tests where a
/// floating point comparison could land on the wrong side. Arithmetic throws
/// std::overflow_error rather than silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;
  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Accepts "p/q", integers and finite decimal literals ("0.25", "-1.5e-2").
  static std::optional<Rational> parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A real parameter that remembers its exact value when one is known.
///
/// Values typed as "3/8" or "0.375" carry an exact Rational; values that only
/// exist as doubles (random samples, irrational inputs) carry none, and
/// comparisons against them fall back to floating point.
class Number {
 public:
  Number(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Number(Rational exact) : value_(exact.to_double()), exact_(exact) {}  // NOLINT
  Number(int value) : Number(Rational(value)) {}  // NOLINT

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }

  /// Exact when possible; otherwise the double. Throws std::invalid_argument
  /// on text that is neither a rational nor a finite real.
  static Number parse(std::string_view text);
  /// JSON-style doubles: converted through their shortest round-trip decimal.
  static Number from_double_literal(double value);

  /// Sign of (*this - r), exact when *this is exact.
  int compare(const Rational& r) const;

  std::string to_string() const;

 private:
  double value_;
  std::optional<Rational> exact_;
};

/// Shortest decimal that round-trips the double.
std::string shortest_repr(double value);
/// 17 significant digits, the exchange precision for reports and CSV.
std::string full_precision(double value);

}  // namespace circwit
