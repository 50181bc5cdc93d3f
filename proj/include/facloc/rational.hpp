// Copyright 2026 The facloc Authors.
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

#ifndef FACLOC_RATIONAL_HPP_
#define FACLOC_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace facloc {

// Exact rational number. Values whose reduced numerator and denominator fit
// in int64 are stored inline; anything larger lives in an immutable GMP
// rational shared between copies. The representation is canonical: a value
// that fits inline is never stored as a big rational, so representation
// equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p", "p/q", and decimal literals such as "-0.125" or "2.5e-3".
  // Decimals are converted digit by digit, never through a binary float.
  static Rational parse(std::string_view text);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Fixed-point rendering rounded half away from zero.
  std::string to_decimal(int digits) const;
  double to_double() const;

  int sign() const;
  bool is_integer() const;
  bool is_small() const { return big_ == nullptr; }
  std::string numerator_string() const;
  std::string denominator_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  struct Big;

 private:
  explicit Rational(std::shared_ptr<const Big> big) : big_(std::move(big)) {}
  static Rational from_big(Big value);
  // num/den with den != 0, reduced and packed.
  static Rational make(__int128 num, __int128 den);
  Big to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

Rational abs(const Rational& q);
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace facloc

#endif  // FACLOC_RATIONAL_HPP_
