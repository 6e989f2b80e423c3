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

#include "qcat/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qcat/error.hpp"

namespace qcat {

namespace {

constexpr double kCplxTolerance = 1e-9;

CapabilitySet residue_caps(int p) {
  CapabilitySet c;
  c.has_additive_inverse = true;
  c.has_multiplicative_inverse_of_nonzero = true;
  c.is_regular = true;
  c.has_minus_one = p != 2;
  c.has_sqrt2 = false;  // 2 is not a square mod 2 (it is 0), 3 or 5
  c.characteristic = p;
  return c;
}

CapabilitySet field_caps(bool sqrt2) {
  CapabilitySet c;
  c.has_additive_inverse = true;
  c.has_multiplicative_inverse_of_nonzero = true;
  c.is_regular = true;
  c.has_minus_one = true;
  c.has_sqrt2 = sqrt2;
  c.anisotropic = true;
  return c;
}

const std::array<Backend, 8>& backend_table() {
  static const std::array<Backend, 8> table = [] {
    CapabilitySet boolean;
    boolean.has_multiplicative_inverse_of_nonzero = true;
    boolean.is_regular = true;
    boolean.anisotropic = true;
    CapabilitySet cplx = field_caps(true);
    cplx.is_exact = false;
    cplx.tolerance = kCplxTolerance;
    CapabilitySet f2 = residue_caps(2);
    return std::array<Backend, 8>{{
        {BackendId::Bool, "bool", boolean, 0},
        {BackendId::Rat, "rat", field_caps(false), 0},
        {BackendId::Gauss, "gauss", field_caps(false), 0},
        {BackendId::F2, "f2", f2, 2},
        {BackendId::F3, "f3", residue_caps(3), 3},
        {BackendId::F5, "f5", residue_caps(5), 5},
        {BackendId::QSqrt2, "qsqrt2", field_caps(true), 0},
        {BackendId::Cplx64, "cplx64", cplx, 0},
    }};
  }();
  return table;
}

bool is_residue(BackendId b) {
  return b == BackendId::F2 || b == BackendId::F3 || b == BackendId::F5;
}

std::int64_t mod(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

void require_same(const Scalar& x, const Scalar& y) {
  if (x.backend() != y.backend()) {
    throw Error(ErrorKind::BackendMismatch,
                std::string(backend_name(x.backend())) + " vs " +
                    std::string(backend_name(y.backend())));
  }
}

bool near(double a, double b) { return std::fabs(a - b) <= kCplxTolerance; }

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

/// Splits `a±b<suffix>` at the sign separating the two parts. Returns the
/// real part, the signed imaginary coefficient text, and whether a second
/// part was present.
struct SplitLiteral {
  std::string_view real;
  std::string imag;
  bool has_imag = false;
};

std::optional<SplitLiteral> split_rational_pair(std::string_view text,
                                                std::string_view suffix) {
  SplitLiteral out;
  bool ends_with_suffix = text.size() >= suffix.size() &&
                          text.substr(text.size() - suffix.size()) == suffix;
  if (!ends_with_suffix) {
    out.real = text;
    return out;
  }
  std::string_view body = text.substr(0, text.size() - suffix.size());
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      cut = i;
      break;
    }
  }
  out.has_imag = true;
  std::string_view coeff;
  if (cut == std::string_view::npos) {
    out.real = "0";
    coeff = body;
  } else {
    out.real = body.substr(0, cut);
    coeff = body.substr(cut);
  }
  if (coeff.empty() || coeff == "+") {
    out.imag = "1";
  } else if (coeff == "-") {
    out.imag = "-1";
  } else {
    out.imag = std::string(coeff[0] == '+' ? coeff.substr(1) : coeff);
  }
  return out;
}

[[noreturn]] void bad_literal(BackendId b, std::string_view text) {
  throw Error(ErrorKind::ParseError, "bad " + std::string(backend_name(b)) +
                                         " literal '" + std::string(text) + "'");
}

Rational parse_rational_or_throw(BackendId b, std::string_view part,
                                 std::string_view whole) {
  auto q = Rational::parse(part);
  if (!q) bad_literal(b, whole);
  return *q;
}

std::string pair_str(const Rational& a, const Rational& b,
                     std::string_view suffix) {
  if (b.is_zero()) return a.str();
  std::string out = a.str();
  Rational mag = b.sign() < 0 ? -b : b;
  out += b.sign() < 0 ? "-" : "+";
  out += mag.str();
  out += suffix;
  return out;
}

}  // namespace

const Backend& backend(BackendId id) {
  return backend_table()[static_cast<std::size_t>(id)];
}

BackendId parse_backend(std::string_view name) {
  for (const auto& b : backend_table()) {
    if (b.name == name) return b.id;
  }
  throw Error(ErrorKind::ParseError, "unknown backend '" + std::string(name) + "'");
}

std::string_view backend_name(BackendId id) { return backend(id).name; }

std::span<const BackendId> all_backends() {
  static const std::array<BackendId, 8> ids = {
      BackendId::Bool, BackendId::Rat,    BackendId::Gauss,
      BackendId::F2,   BackendId::F3,     BackendId::F5,
      BackendId::QSqrt2, BackendId::Cplx64};
  return ids;
}

Scalar Scalar::zero(BackendId b) { return from_int(b, 0); }
Scalar Scalar::one(BackendId b) { return from_int(b, 1); }

Scalar Scalar::from_int(BackendId b, std::int64_t n) {
  switch (b) {
    case BackendId::Bool:
      if (n < 0) {
        throw Error(ErrorKind::CapabilityMissing, "bool has no negatives");
      }
      return boolean(n != 0);
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return residue(b, n);
    case BackendId::Rat:
      return rational(Rational(n));
    case BackendId::Gauss:
      return gaussian(Rational(n), Rational(0));
    case BackendId::QSqrt2:
      return quadratic(Rational(n), Rational(0));
    case BackendId::Cplx64:
      return complex({static_cast<double>(n), 0.0});
  }
  return {};
}

Scalar Scalar::boolean(bool v) {
  Scalar s;
  s.backend_ = BackendId::Bool;
  s.k_ = v ? 1 : 0;
  return s;
}

Scalar Scalar::residue(BackendId b, std::int64_t k) {
  if (!is_residue(b)) {
    throw Error(ErrorKind::BackendMismatch, "not a residue backend");
  }
  Scalar s;
  s.backend_ = b;
  s.k_ = mod(k, qcat::backend(b).modulus);
  return s;
}

Scalar Scalar::rational(Rational q) {
  Scalar s;
  s.backend_ = BackendId::Rat;
  s.re_ = std::move(q);
  return s;
}

Scalar Scalar::gaussian(Rational re, Rational im) {
  Scalar s;
  s.backend_ = BackendId::Gauss;
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::quadratic(Rational a, Rational b) {
  Scalar s;
  s.backend_ = BackendId::QSqrt2;
  s.re_ = std::move(a);
  s.im_ = std::move(b);
  return s;
}

Scalar Scalar::complex(std::complex<double> z) {
  Scalar s;
  s.backend_ = BackendId::Cplx64;
  s.z_ = z;
  return s;
}

bool Scalar::is_zero() const {
  switch (backend_) {
    case BackendId::Bool:
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return k_ == 0;
    case BackendId::Rat:
      return re_.is_zero();
    case BackendId::Gauss:
    case BackendId::QSqrt2:
      return re_.is_zero() && im_.is_zero();
    case BackendId::Cplx64:
      return near(z_.real(), 0.0) && near(z_.imag(), 0.0);
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(backend_); }

std::string Scalar::str() const {
  switch (backend_) {
    case BackendId::Bool:
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return std::to_string(k_);
    case BackendId::Rat:
      return re_.str();
    case BackendId::Gauss:
      return pair_str(re_, im_, "i");
    case BackendId::QSqrt2:
      return pair_str(re_, im_, "~2");
    case BackendId::Cplx64: {
      std::string out = format_double(z_.real());
      out += std::signbit(z_.imag()) ? "-" : "+";
      out += format_double(std::fabs(z_.imag()));
      out += "i";
      return out;
    }
  }
  return {};
}

Scalar s_add(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  switch (x.backend()) {
    case BackendId::Bool:
      return Scalar::boolean(x.k() != 0 || y.k() != 0);
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return Scalar::residue(x.backend(), x.k() + y.k());
    case BackendId::Rat:
      return Scalar::rational(x.re() + y.re());
    case BackendId::Gauss:
      return Scalar::gaussian(x.re() + y.re(), x.im() + y.im());
    case BackendId::QSqrt2:
      return Scalar::quadratic(x.re() + y.re(), x.im() + y.im());
    case BackendId::Cplx64:
      return Scalar::complex(x.cvalue() + y.cvalue());
  }
  return {};
}

Scalar s_mul(const Scalar& x, const Scalar& y) {
  require_same(x, y);
  switch (x.backend()) {
    case BackendId::Bool:
      return Scalar::boolean(x.k() != 0 && y.k() != 0);
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return Scalar::residue(x.backend(), x.k() * y.k());
    case BackendId::Rat:
      return Scalar::rational(x.re() * y.re());
    case BackendId::Gauss:
      return Scalar::gaussian(x.re() * y.re() - x.im() * y.im(),
                              x.re() * y.im() + x.im() * y.re());
    case BackendId::QSqrt2:
      return Scalar::quadratic(
          x.re() * y.re() + Rational(2) * x.im() * y.im(),
          x.re() * y.im() + x.im() * y.re());
    case BackendId::Cplx64:
      return Scalar::complex(x.cvalue() * y.cvalue());
  }
  return {};
}

Scalar s_star(const Scalar& x) {
  switch (x.backend()) {
    case BackendId::Gauss:
      return Scalar::gaussian(x.re(), -x.im());
    case BackendId::Cplx64:
      return Scalar::complex(std::conj(x.cvalue()));
    default:
      return x;
  }
}

Scalar s_inv(const Scalar& x) {
  if (!backend(x.backend()).caps.has_multiplicative_inverse_of_nonzero) {
    throw Error(ErrorKind::CapabilityMissing,
                std::string(backend_name(x.backend())) + " has no inverses");
  }
  if (x.is_zero()) throw Error(ErrorKind::ZeroNotInvertible, "inverse of 0");
  switch (x.backend()) {
    case BackendId::Bool:
      return x;
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5: {
      // Fermat: x^(p-2).
      std::int64_t p = backend(x.backend()).modulus;
      std::int64_t r = 1;
      for (std::int64_t i = 0; i < p - 2; ++i) r = (r * x.k()) % p;
      return Scalar::residue(x.backend(), r);
    }
    case BackendId::Rat:
      return Scalar::rational(x.re().inverse());
    case BackendId::Gauss: {
      Rational n = x.re() * x.re() + x.im() * x.im();
      return Scalar::gaussian(x.re() / n, -x.im() / n);
    }
    case BackendId::QSqrt2: {
      Rational n = x.re() * x.re() - Rational(2) * x.im() * x.im();
      return Scalar::quadratic(x.re() / n, -x.im() / n);
    }
    case BackendId::Cplx64:
      return Scalar::complex(1.0 / x.cvalue());
  }
  return {};
}

Scalar s_neg(const Scalar& x) {
  switch (x.backend()) {
    case BackendId::Bool:
      throw Error(ErrorKind::CapabilityMissing, "bool has no additive inverse");
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return Scalar::residue(x.backend(), -x.k());
    case BackendId::Rat:
      return Scalar::rational(-x.re());
    case BackendId::Gauss:
      return Scalar::gaussian(-x.re(), -x.im());
    case BackendId::QSqrt2:
      return Scalar::quadratic(-x.re(), -x.im());
    case BackendId::Cplx64:
      return Scalar::complex(-x.cvalue());
  }
  return {};
}

Scalar s_sub(const Scalar& x, const Scalar& y) { return s_add(x, s_neg(y)); }

Scalar s_div(const Scalar& x, const Scalar& y) { return s_mul(x, s_inv(y)); }

Scalar minus_one(BackendId b) {
  if (!backend(b).caps.has_minus_one) {
    throw Error(ErrorKind::CapabilityMissing,
                std::string(backend_name(b)) + " has no 1⁻ distinct from 1");
  }
  return s_neg(Scalar::one(b));
}

Scalar sqrt_two(BackendId b) {
  switch (b) {
    case BackendId::QSqrt2:
      return Scalar::quadratic(Rational(0), Rational(1));
    case BackendId::Cplx64:
      return Scalar::complex({std::sqrt(2.0), 0.0});
    default:
      throw Error(ErrorKind::CapabilityMissing,
                  std::string(backend_name(b)) + " has no square root of 2");
  }
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.backend() != y.backend()) return false;
  switch (x.backend()) {
    case BackendId::Bool:
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return x.k() == y.k();
    case BackendId::Rat:
      return x.re() == y.re();
    case BackendId::Gauss:
    case BackendId::QSqrt2:
      return x.re() == y.re() && x.im() == y.im();
    case BackendId::Cplx64:
      return near(x.cvalue().real(), y.cvalue().real()) &&
             near(x.cvalue().imag(), y.cvalue().imag());
  }
  return false;
}

namespace {

std::optional<Scalar> gaussian_norm_root(const Rational& q) {
  if (auto r = q.sqrt()) return Scalar::gaussian(*r, Rational(0));
  // q = N/D has a root t = (a + b i)/D iff N·D = a² + b².
  mpz_class target = q.numerator() * q.denominator();
  if (target > mpz_class("1000000000000")) return std::nullopt;
  long t = target.get_si();
  for (long a = 0; a * a <= t; ++a) {
    long rest = t - a * a;
    long b = static_cast<long>(std::sqrt(static_cast<double>(rest)));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) {
      Rational d(q.denominator().get_si());
      return Scalar::gaussian(Rational(a) / d, Rational(b) / d);
    }
  }
  return std::nullopt;
}

std::optional<Scalar> quadratic_root(const Rational& x, const Rational& y) {
  // (p + q√2)² = p² + 2q² + 2pq√2.
  if (y.is_zero()) {
    if (auto p = x.sqrt()) return Scalar::quadratic(*p, Rational(0));
    if (auto q = (x / Rational(2)).sqrt()) {
      return Scalar::quadratic(Rational(0), *q);
    }
    return std::nullopt;
  }
  auto disc = (x * x - Rational(2) * y * y).sqrt();
  if (!disc) return std::nullopt;
  for (const Rational& p2 : {(x + *disc) / Rational(2), (x - *disc) / Rational(2)}) {
    if (p2.sign() <= 0) continue;
    auto p = p2.sqrt();
    if (!p) continue;
    Rational q = y / (Rational(2) * *p);
    if (*p * *p + Rational(2) * q * q == x) return Scalar::quadratic(*p, q);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> norm_root(const Scalar& s) {
  switch (s.backend()) {
    case BackendId::Bool:
      return s;
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5: {
      std::int64_t p = backend(s.backend()).modulus;
      for (std::int64_t t = 0; t < p; ++t) {
        if ((t * t) % p == s.k()) return Scalar::residue(s.backend(), t);
      }
      return std::nullopt;
    }
    case BackendId::Rat: {
      auto r = s.re().sqrt();
      if (!r) return std::nullopt;
      return Scalar::rational(*r);
    }
    case BackendId::Gauss:
      if (!s.im().is_zero() || s.re().sign() < 0) return std::nullopt;
      return gaussian_norm_root(s.re());
    case BackendId::QSqrt2:
      return quadratic_root(s.re(), s.im());
    case BackendId::Cplx64: {
      auto z = s.cvalue();
      if (!near(z.imag(), 0.0) || z.real() < -kCplxTolerance) return std::nullopt;
      return Scalar::complex({std::sqrt(std::max(z.real(), 0.0)), 0.0});
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Scalar>> enumerate_scalars(BackendId b) {
  std::vector<Scalar> out;
  if (b == BackendId::Bool) {
    out = {Scalar::boolean(false), Scalar::boolean(true)};
    return out;
  }
  if (!is_residue(b)) return std::nullopt;
  for (int k = 0; k < backend(b).modulus; ++k) out.push_back(Scalar::residue(b, k));
  return out;
}

Scalar parse_scalar(BackendId b, std::string_view text) {
  switch (b) {
    case BackendId::Bool:
      if (text == "0") return Scalar::boolean(false);
      if (text == "1") return Scalar::boolean(true);
      bad_literal(b, text);
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5: {
      auto q = Rational::parse(text);
      // Canonical residues only, so literals round-trip.
      if (!q || !q->is_integer() || q->sign() < 0 ||
          cmp(q->numerator(), qcat::backend(b).modulus) >= 0) {
        bad_literal(b, text);
      }
      return Scalar::residue(b, q->numerator().get_si());
    }
    case BackendId::Rat:
      return Scalar::rational(parse_rational_or_throw(b, text, text));
    case BackendId::Gauss:
    case BackendId::QSqrt2: {
      std::string_view suffix = b == BackendId::Gauss ? "i" : "~2";
      auto parts = split_rational_pair(text, suffix);
      if (!parts) bad_literal(b, text);
      Rational re = parse_rational_or_throw(b, parts->real, text);
      Rational im = parts->has_imag
                        ? parse_rational_or_throw(b, parts->imag, text)
                        : Rational(0);
      return b == BackendId::Gauss ? Scalar::gaussian(re, im)
                                   : Scalar::quadratic(re, im);
    }
    case BackendId::Cplx64: {
      const char* first = text.data();
      const char* last = text.data() + text.size();
      double re = 0.0;
      auto r1 = std::from_chars(first, last, re);
      if (r1.ec != std::errc()) bad_literal(b, text);
      if (r1.ptr == last) return Scalar::complex({re, 0.0});
      if (*r1.ptr == 'i' && r1.ptr + 1 == last) return Scalar::complex({0.0, re});
      char sign = *r1.ptr;
      if (sign != '+' && sign != '-') bad_literal(b, text);
      double im = 0.0;
      auto r2 = std::from_chars(r1.ptr + 1, last, im);
      if (r2.ec != std::errc() || r2.ptr + 1 != last || *r2.ptr != 'i') {
        bad_literal(b, text);
      }
      return Scalar::complex({re, sign == '-' ? -im : im});
    }
  }
  bad_literal(b, text);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace qcat
