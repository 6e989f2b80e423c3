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

#include <vector>

#include "qcat/arrow.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

/// Dense row-major scalar matrix used by the exact elimination routines.
using ScalarRows = std::vector<std::vector<Scalar>>;

ScalarRows rows_of(const Arrow& f);

/// Rank by Gaussian elimination. Exact on exact fields; on Cplx64 pivots
/// below the backend tolerance count as zero. Throws CapabilityMissing when
/// the backend is not a field.
std::size_t rank(ScalarRows m, BackendId backend);

/// Polynomial coefficients, lowest degree first.
using Poly = std::vector<Scalar>;

/// det(λ·id − f) for an inner arrow, by the division-free Berkowitz
/// recurrence. Needs additive inverses only.
Poly characteristic_polynomial(const Arrow& f);

Poly poly_mul(const Poly& p, const Poly& q);
/// p · λ^k.
Poly poly_shift(const Poly& p, std::size_t k);
bool poly_equal(const Poly& p, const Poly& q);

}  // namespace qcat
