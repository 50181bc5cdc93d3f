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

#include "facloc/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

#include "facloc/error.hpp"

namespace facloc {

struct Rational::Big {
  mpq_class value;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -static_cast<i128>(kMax); }

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

mpz_class to_mpz(i128 v) {
  u128 m = magnitude(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_i64(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

std::int64_t mpz_to_i64(const mpz_class& z) {
  std::uint64_t limb = 0;
  std::size_t count = 0;
  mpz_export(&limb, &count, -1, sizeof(limb), 0, 0, z.get_mpz_t());
  auto v = static_cast<std::int64_t>(limb);
  return sgn(z) < 0 ? -v : v;
}

mpz_class pow10(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace

Rational Rational::from_big(Big value) {
  value.value.canonicalize();
  const mpz_class& n = value.value.get_num();
  const mpz_class& d = value.value.get_den();
  if (mpz_fits_i64(n) && mpz_fits_i64(d)) {
    Rational r;
    r.num_ = mpz_to_i64(n);
    r.den_ = mpz_to_i64(d);
    return r;
  }
  return Rational(std::make_shared<const Big>(std::move(value)));
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  Big b;
  b.value = mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return b;
}

Rational Rational::make(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits(num) && fits(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  Big b;
  b.value = mpq_class(to_mpz(num), to_mpz(den));
  return from_big(std::move(b));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorKind::kDomain, "rational with zero denominator");
  *this = make(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() { fail(ErrorKind::kInvalidInput, "malformed rational literal '" + std::string(text) + "'"); };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(i, end - i);
  if (s.empty()) bad();

  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };

  std::size_t int_end = digits(pos);
  std::string int_part(s.substr(pos, int_end - pos));
  Big b;
  if (int_end < s.size() && s[int_end] == '/') {
    std::size_t den_end = digits(int_end + 1);
    if (int_part.empty() || den_end != s.size() || den_end == int_end + 1) bad();
    mpz_class den(std::string(s.substr(int_end + 1)));
    require(den != 0, ErrorKind::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
    b.value = mpq_class(mpz_class(int_part), den);
  } else {
    std::string frac_part;
    std::size_t cursor = int_end;
    if (cursor < s.size() && s[cursor] == '.') {
      std::size_t frac_end = digits(cursor + 1);
      frac_part = std::string(s.substr(cursor + 1, frac_end - cursor - 1));
      cursor = frac_end;
    }
    if (int_part.empty() && frac_part.empty()) bad();
    long exponent = 0;
    if (cursor < s.size() && (s[cursor] == 'e' || s[cursor] == 'E')) {
      std::size_t exp_pos = cursor + 1;
      bool exp_negative = false;
      if (exp_pos < s.size() && (s[exp_pos] == '+' || s[exp_pos] == '-')) {
        exp_negative = s[exp_pos] == '-';
        ++exp_pos;
      }
      std::size_t exp_end = digits(exp_pos);
      if (exp_end == exp_pos || exp_end - exp_pos > 6) bad();
      exponent = std::stol(std::string(s.substr(exp_pos, exp_end - exp_pos)));
      if (exp_negative) exponent = -exponent;
      cursor = exp_end;
    }
    if (cursor != s.size()) bad();
    mpz_class mantissa(int_part.empty() ? std::string("0") : int_part);
    if (!frac_part.empty()) mantissa = mantissa * pow10(frac_part.size()) + mpz_class(frac_part);
    long scale = exponent - static_cast<long>(frac_part.size());
    if (scale >= 0) {
      b.value = mpq_class(mantissa * pow10(static_cast<unsigned long>(scale)));
    } else {
      b.value = mpq_class(mantissa, pow10(static_cast<unsigned long>(-scale)));
    }
  }
  if (negative) b.value = -b.value;
  return from_big(std::move(b));
}

std::string Rational::to_string() const {
  if (big_) {
    if (big_->value.get_den() == 1) return big_->value.get_num().get_str();
    return big_->value.get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_string() const {
  return big_ ? big_->value.get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->value.get_den().get_str() : std::to_string(den_);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Big b = to_big();
  mpz_class num = b.value.get_num();
  const mpz_class& den = b.value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scaled = num * pow10(static_cast<unsigned long>(digits));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) body.insert(0, "-");
  return body;
}

double Rational::to_double() const {
  if (big_) return big_->value.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  return big_ ? big_->value.get_den() == 1 : den_ == 1;
}

Rational Rational::operator-() const {
  if (big_) {
    Big b = *big_;
    b.value = -b.value;
    return from_big(std::move(b));
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::make(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                          static_cast<i128>(a.den_) * b.den_);
  }
  Rational::Big out;
  out.value = a.to_big().value + b.to_big().value;
  return Rational::from_big(std::move(out));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_),
                             static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_),
                             static_cast<std::uint64_t>(a.den_));
    i128 num = static_cast<i128>(a.num_ / static_cast<std::int64_t>(g1)) * (b.num_ / static_cast<std::int64_t>(g2));
    i128 den = static_cast<i128>(a.den_ / static_cast<std::int64_t>(g2)) * (b.den_ / static_cast<std::int64_t>(g1));
    return Rational::make(num, den);
  }
  Rational::Big out;
  out.value = a.to_big().value * b.to_big().value;
  return Rational::from_big(std::move(out));
}

Rational operator/(const Rational& a, const Rational& b) {
  require(b.sign() != 0, ErrorKind::kDomain, "division by zero");
  if (!a.big_ && !b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  Rational::Big out;
  out.value = a.to_big().value / b.to_big().value;
  return Rational::from_big(std::move(out));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->value == b.big_->value;
  return false;  // canonical form: small and big never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int c = cmp(a.to_big().value, b.to_big().value);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace facloc
