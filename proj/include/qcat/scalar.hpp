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

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/rational.hpp"

namespace qcat {

/// The shipped involutive commutative semirings.
enum class BackendId {
  Bool,    // {0,1} with or/and; the relations model
  Rat,     // exact rationals, identity involution
  Gauss,   // Q(i), complex conjugation
  F2,      // integers mod 2
  F3,      // integers mod 3
  F5,      // integers mod 5
  QSqrt2,  // Q(sqrt 2), identity involution
  Cplx64,  // complex double, conjugation, tolerance 1e-9
};

struct CapabilitySet {
  bool has_additive_inverse = false;
  bool has_multiplicative_inverse_of_nonzero = false;
  /// No zero divisors.
  bool is_regular = false;
  /// Some 1⁻ != 1 with 1⁻·1⁻ = 1.
  bool has_minus_one = false;
  /// Some r with r·r = 2.
  bool has_sqrt2 = false;
  bool is_exact = true;
  double tolerance = 0.0;
  /// Additive characteristic, 0 for characteristic zero (and for Bool).
  int characteristic = 0;
  /// sum_i x_i⋆·x_i = 0 only when every x_i = 0.
  bool anisotropic = false;

  bool is_field() const {
    return has_additive_inverse && has_multiplicative_inverse_of_nonzero;
  }
};

struct Backend {
  BackendId id;
  std::string_view name;
  CapabilitySet caps;
  /// Modulus for residue backends, 0 otherwise.
  int modulus = 0;
};

const Backend& backend(BackendId id);
/// `bool | rat | gauss | f2 | f3 | f5 | qsqrt2 | cplx64`; throws ParseError.
BackendId parse_backend(std::string_view name);
std::string_view backend_name(BackendId id);
std::span<const BackendId> all_backends();

/// A scalar of one backend, always in canonical form.
///
/// Layout by backend: Bool and residues keep their value in `k`; Rat uses
/// `re`; Gauss is re + im·i; QSqrt2 is re + im·√2; Cplx64
/// uses the double pair.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(BackendId b);
  static Scalar one(BackendId b);
  /// The image of an integer under the unique semiring map from the naturals
  /// (extended to negatives when the backend is a ring).
  static Scalar from_int(BackendId b, std::int64_t n);
  static Scalar boolean(bool v);
  static Scalar residue(BackendId b, std::int64_t k);
  static Scalar rational(Rational q);
  static Scalar gaussian(Rational re, Rational im);
  static Scalar quadratic(Rational a, Rational b);
  static Scalar complex(std::complex<double> z);

  BackendId backend() const { return backend_; }
  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  std::complex<double> cvalue() const { return z_; }
  std::int64_t k() const { return k_; }

  bool is_zero() const;
  bool is_one() const;

  /// Literal syntax of the backend; parse(str()) == *this exactly.
  std::string str() const;

 private:
  BackendId backend_ = BackendId::Rat;
  std::int64_t k_ = 0;
  Rational re_;
  Rational im_;
  std::complex<double> z_;
};

Scalar s_add(const Scalar& x, const Scalar& y);
Scalar s_mul(const Scalar& x, const Scalar& y);
Scalar s_star(const Scalar& x);
/// Throws ZeroNotInvertible or CapabilityMissing.
Scalar s_inv(const Scalar& x);
/// Throws CapabilityMissing when the backend has no additive inverse.
Scalar s_neg(const Scalar& x);
Scalar s_sub(const Scalar& x, const Scalar& y);
Scalar s_div(const Scalar& x, const Scalar& y);
Scalar minus_one(BackendId b);
Scalar sqrt_two(BackendId b);

/// Exact equality on exact backends; componentwise tolerance on Cplx64.
bool operator==(const Scalar& x, const Scalar& y);
inline Scalar operator+(const Scalar& x, const Scalar& y) { return s_add(x, y); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return s_mul(x, y); }
inline Scalar operator-(const Scalar& x, const Scalar& y) { return s_sub(x, y); }
inline Scalar operator-(const Scalar& x) { return s_neg(x); }

/// Some t with t⋆·t = s, when the backend can represent one.
std::optional<Scalar> norm_root(const Scalar& s);

/// All elements of a finite backend (Bool and residues), in value order.
std::optional<std::vector<Scalar>> enumerate_scalars(BackendId b);

/// Parses a literal for the given backend; throws ParseError.
Scalar parse_scalar(BackendId b, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qcat
