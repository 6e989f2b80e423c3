// Copyright 2026 The qcat Authors
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

#include "qcat/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace qcat {

namespace {

using i128 = __int128;

// Inline storage holds magnitudes below 2^62 so that both construction paths
// agree on which representation a value gets.
constexpr i128 kInlineBound = static_cast<i128>(1) << 62;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz(std::int64_t v) { return to_mpz(static_cast<i128>(v)); }

bool fits_i64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62;
}

std::int64_t to_i64(const mpz_class& z) {
  // Caller guarantees fits_i64, so the magnitude is below 2^62.
  mpz_class a = abs(z);
  std::uint64_t lo = mpz_getlimbn(a.get_mpz_t(), 0);
  std::int64_t v = static_cast<std::int64_t>(lo);
  return sgn(z) < 0 ? -v : v;
}

}  // namespace

Rational::Rational(std::int64_t n) { *this = from_wide(n, 1); }

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  Rational r;
  if (abs128(n) < kInlineBound && d < kInlineBound) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (fits_i64(q.get_num()) && fits_i64(q.get_den())) {
    r.num_ = to_i64(q.get_num());
    r.den_ = to_i64(q.get_den());
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : to_mpz(num_);
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : to_mpz(den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = numerator();
  mpz_class d = denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return from_big(mpq_class(rn, rd));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign)
      -> std::optional<mpz_class> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return std::nullopt;
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash), true);
  if (!num) return std::nullopt;
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    auto d = parse_int(text.substr(slash + 1), false);
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  return from_big(mpq_class(*num, den));
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  if (big_) return from_big(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, 1);
    }
    return Rational::from_wide(
        static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
        static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in storage class
}

int compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

}  // namespace qcat
