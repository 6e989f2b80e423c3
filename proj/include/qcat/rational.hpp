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

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace qcat {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational. Every operation demotes its
/// result again when possible, so equality can compare representations.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  double to_double() const;

  /// Numerator and denominator as arbitrary precision integers.
  mpz_class numerator() const;
  mpz_class denominator() const;

  /// Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt() const;

  /// `p` or `p/q`.
  std::string str() const;
  /// Accepts `[-]p` and `[-]p/q` with q != 0; result is canonical.
  static std::optional<Rational> parse(std::string_view text);

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) {
    return compare(a, b) < 0;
  }

 private:
  static Rational from_wide(__int128 n, __int128 d);
  static Rational from_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace qcat
