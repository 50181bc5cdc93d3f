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

#ifndef FACLOC_EXTENDED_HPP_
#define FACLOC_EXTENDED_HPP_

#include <compare>
#include <string>
#include <string_view>

#include "facloc/rational.hpp"

namespace facloc {

// A rational extended by -inf and +inf. Used for phantom points, ratios and
// guarantee values that may be unbounded.
class ExtendedRational {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  ExtendedRational(std::int64_t value) : value_(value) {}         // NOLINT(google-explicit-constructor)

  static ExtendedRational pos_inf() { return ExtendedRational(Kind::kPosInf); }
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::kNegInf); }
  // "+inf", "inf", "-inf" or any rational literal.
  static ExtendedRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  // Requires is_finite().
  const Rational& value() const;

  std::string to_string() const;
  std::string to_decimal(int digits) const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_;
};

// |a - b|; +inf if either side is infinite.
ExtendedRational distance(const ExtendedRational& a, const Rational& b);
// Sum where any +inf term makes the result +inf. Both sides must be >= 0.
ExtendedRational add_nonneg(const ExtendedRational& a, const ExtendedRational& b);
// p * a for p > 0.
ExtendedRational scale(const Rational& p, const ExtendedRational& a);
// a / b with b > 0; +inf / b is +inf.
ExtendedRational divide(const ExtendedRational& a, const Rational& b);

}  // namespace facloc

#endif  // FACLOC_EXTENDED_HPP_
