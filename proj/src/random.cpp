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

#include "qcat/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qcat {

namespace {

Rational small_rational(Rng& rng) {
  return Rational(rng.range(-9, 9), rng.range(1, 9));
}

struct Rotation {
  Scalar c;
  Scalar s;
};

/// Unit scalars (u⋆u = 1) usable as diagonal phases.
std::vector<Scalar> phases(BackendId b) {
  auto one = Scalar::one(b);
  switch (b) {
    case BackendId::Bool:
    case BackendId::F2:
      return {one};
    case BackendId::Gauss:
      return {one, -one, Scalar::gaussian(0, 1), Scalar::gaussian(0, -1),
              Scalar::gaussian(Rational(3, 5), Rational(4, 5))};
    default:
      return {one, -one};
  }
}

std::vector<Rotation> rotations(BackendId b) {
  auto q = [](std::int64_t n, std::int64_t d) { return Scalar::rational(Rational(n, d)); };
  switch (b) {
    case BackendId::Rat:
      return {{q(3, 5), q(4, 5)}, {q(4, 5), q(-3, 5)}, {q(5, 13), q(12, 13)}};
    case BackendId::Gauss:
      return {{Scalar::gaussian(Rational(3, 5), 0), Scalar::gaussian(0, Rational(4, 5))},
              {Scalar::gaussian(Rational(1, 2), Rational(1, 2)),
               Scalar::gaussian(Rational(1, 2), Rational(-1, 2))},
              {Scalar::gaussian(Rational(5, 13), 0), Scalar::gaussian(Rational(12, 13), 0)}};
    case BackendId::QSqrt2: {
      auto h = Scalar::quadratic(0, Rational(1, 2));
      return {{h, h},
              {h, -h},
              {Scalar::quadratic(Rational(3, 5), 0), Scalar::quadratic(Rational(4, 5), 0)}};
    }
    default:
      return {};
  }
}

}  // namespace

double Rng::normal() {
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, then a splitmix64 finalizer with the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = h ^ (seed + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar random_scalar(BackendId b, Rng& rng) {
  switch (b) {
    case BackendId::Bool:
      return Scalar::boolean(rng.coin());
    case BackendId::F2:
    case BackendId::F3:
    case BackendId::F5:
      return Scalar::residue(b, static_cast<std::int64_t>(rng.below(backend(b).modulus)));
    case BackendId::Rat:
      return Scalar::rational(small_rational(rng));
    case BackendId::Gauss: {
      Rational re = small_rational(rng);
      return Scalar::gaussian(re, small_rational(rng));
    }
    case BackendId::QSqrt2: {
      Rational a = small_rational(rng);
      return Scalar::quadratic(a, small_rational(rng));
    }
    case BackendId::Cplx64: {
      double re = rng.normal();
      return Scalar::complex({re, rng.normal()});
    }
  }
  return Scalar::zero(b);
}

Scalar random_nonzero_scalar(BackendId b, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(b, rng);
    if (!s.is_zero()) return s;
  }
}

FinObject make_object(std::string_view prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return FinObject(std::move(labels));
}

FinObject random_object(Rng& rng, std::string_view prefix, std::size_t max_size) {
  return make_object(prefix, 1 + rng.below(max_size));
}

Arrow random_arrow(BackendId b, const FinObject& dom, const FinObject& cod, Rng& rng) {
  std::vector<Scalar> entries;
  entries.reserve(dom.size() * cod.size());
  for (std::size_t i = 0; i < dom.size() * cod.size(); ++i) {
    entries.push_back(random_scalar(b, rng));
  }
  return Arrow(dom, cod, b, std::move(entries));
}

Arrow generate_arrow(BackendId b, const FinObject& dom, const FinObject& cod,
                     std::uint64_t seed) {
  Rng rng(seed);
  return random_arrow(b, dom, cod, rng);
}

Arrow random_prep(BackendId b, const FinObject& a, Rng& rng) {
  return random_arrow(b, FinObject{"*"}, a, rng);
}

Arrow random_nonzero_prep(BackendId b, const FinObject& a, Rng& rng) {
  for (;;) {
    Arrow p = random_prep(b, a, rng);
    if (!p.is_zero()) return p;
  }
}

Arrow random_self_adjoint(BackendId b, const FinObject& a, Rng& rng) {
  Arrow f = random_arrow(b, a, a, rng);
  return add_arrows(f, adjoint(f));
}

Arrow random_unitary(BackendId b, const FinObject& a, Rng& rng) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<Scalar> m(n * n, Scalar::zero(b));
  auto ph = phases(b);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar phase = ph[rng.below(ph.size())];
    if (b == BackendId::Cplx64) {
      double t = 2.0 * std::numbers::pi * rng.uniform01();
      phase = Scalar::complex({std::cos(t), std::sin(t)});
    }
    m[i * n + perm[i]] = phase;
  }
  Arrow u(a, a, b, std::move(m));
  if (n < 2 || b == BackendId::Bool) return u;

  auto rots = rotations(b);
  std::size_t count = b == BackendId::Cplx64 || !rots.empty() ? rng.below(3) + 1 : 0;
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t i = rng.below(n);
    std::size_t j = (i + 1 + rng.below(n - 1)) % n;
    Rotation rot{Scalar::one(b), Scalar::zero(b)};
    if (b == BackendId::Cplx64) {
      double theta = 2.0 * std::numbers::pi * rng.uniform01();
      double phi = 2.0 * std::numbers::pi * rng.uniform01();
      rot.c = Scalar::complex({std::cos(theta), 0.0});
      rot.s = Scalar::complex(std::polar(std::sin(theta), phi));
    } else {
      rot = rots[rng.below(rots.size())];
    }
    // Plane rotation acting on the codomain coordinates i and j.
    Arrow g = Arrow::from_function(a, a, b, [&](std::size_t x, std::size_t y) {
      if (x == i && y == i) return rot.c;
      if (x == i && y == j) return rot.s;
      if (x == j && y == i) return -s_star(rot.s);
      if (x == j && y == j) return s_star(rot.c);
      return x == y ? Scalar::one(b) : Scalar::zero(b);
    });
    u = compose(g, u);
  }
  return u;
}

}  // namespace qcat
