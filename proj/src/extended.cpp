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

#include "facloc/extended.hpp"

#include "facloc/error.hpp"

namespace facloc {

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::value() const {
  require(is_finite(), ErrorKind::kDomain, "value of an infinite extended rational");
  return value_;
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::kNegInf: return "-inf";
    case Kind::kPosInf: return "+inf";
    default: return value_.to_string();
  }
}

std::string ExtendedRational::to_decimal(int digits) const {
  return is_finite() ? value_.to_decimal(digits) : to_string();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

ExtendedRational distance(const ExtendedRational& a, const Rational& b) {
  if (!a.is_finite()) return ExtendedRational::pos_inf();
  return abs(a.value() - b);
}

ExtendedRational add_nonneg(const ExtendedRational& a, const ExtendedRational& b) {
  if (!a.is_finite() || !b.is_finite()) return ExtendedRational::pos_inf();
  return a.value() + b.value();
}

ExtendedRational scale(const Rational& p, const ExtendedRational& a) {
  if (!a.is_finite()) return a;
  return p * a.value();
}

ExtendedRational divide(const ExtendedRational& a, const Rational& b) {
  require(b.sign() > 0, ErrorKind::kDomain, "divide by a non-positive value");
  if (!a.is_finite()) return a;
  return a.value() / b;
}

}  // namespace facloc
