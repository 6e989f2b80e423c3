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
#include <random>
#include <string>
#include <string_view>

#include "qcat/arrow.hpp"

namespace qcat {

/// Deterministic generator. Reductions are done by hand instead of through
/// the standard distributions so sequences do not depend on the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() >> 11) & 1U; }
  double uniform01() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }
  /// Standard normal by Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Stable sub-seed for a named task; independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

/// Per-backend entry law: fair bit, uniform residue, rationals with
/// numerator in [-9, 9] and denominator in [1, 9] (per coordinate for the
/// quadratic backends), standard normal components for Cplx64.
Scalar random_scalar(BackendId b, Rng& rng);
Scalar random_nonzero_scalar(BackendId b, Rng& rng);

/// Labels `<prefix>0 .. <prefix>(n-1)`.
FinObject make_object(std::string_view prefix, std::size_t n);
/// Size uniform in [1, max_size].
FinObject random_object(Rng& rng, std::string_view prefix, std::size_t max_size);

Arrow random_arrow(BackendId b, const FinObject& dom, const FinObject& cod,
                   Rng& rng);
/// Reproducible arrow for a seed.
Arrow generate_arrow(BackendId b, const FinObject& dom, const FinObject& cod,
                     std::uint64_t seed);
Arrow random_prep(BackendId b, const FinObject& a, Rng& rng);
Arrow random_nonzero_prep(BackendId b, const FinObject& a, Rng& rng);
/// f + f⋆ for a random f.
Arrow random_self_adjoint(BackendId b, const FinObject& a, Rng& rng);
/// A permutation with unit phases followed by plane rotations whose
/// coefficients satisfy c⋆c + s⋆s = 1 in the backend.
Arrow random_unitary(BackendId b, const FinObject& a, Rng& rng);

}  // namespace qcat
