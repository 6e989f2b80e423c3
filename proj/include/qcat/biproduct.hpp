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
#include <optional>
#include <span>
#include <vector>

#include "qcat/arrow.hpp"
#include "qcat/law_result.hpp"

namespace qcat {

/// A ⊕ B as a u-coproduct: the tagged disjoint union `L:<a>`, `R:<b>` with
/// the χ-injections.
struct DirectSum {
  FinObject left;
  FinObject right;
  FinObject object;
  Arrow inj_left;
  Arrow inj_right;
};

DirectSum direct_sum(const FinObject& a, const FinObject& b, BackendId backend);
/// Recovers the summands from `L:`/`R:` tags; nullopt if the labels are not
/// a direct sum (left part first, both parts nonempty).
std::optional<DirectSum> split_direct_sum(const FinObject& sum, BackendId backend);

/// [f g] : A⊕B → X with [f g] ∘ u = f and [f g] ∘ v = g.
Arrow copair(const Arrow& f, const Arrow& g, const DirectSum& ds);
/// (f g) : X → A⊕B, the adjoint dual of copair.
Arrow pair(const Arrow& f, const Arrow& g, const DirectSum& ds);

/// The unique x : A⊕B → A⊕B with corners u⋆xu = a, v⋆xu = f, u⋆xv = g,
/// v⋆xv = b.
Arrow block_matrix(const Arrow& a, const Arrow& f, const Arrow& g,
                   const Arrow& b, const DirectSum& ds);

/// f ⊕ g : A⊕B → A'⊕B'.
Arrow direct_sum_arrows(const Arrow& f, const Arrow& g);

/// Δ_A = (id id) : A → A⊕A.
Arrow diagonal(const FinObject& a, BackendId backend);
/// ∇_A = [id id] : A⊕A → A.
Arrow codiagonal(const FinObject& a, BackendId backend);

/// f + g := ∇_B ∘ (f ⊕ g) ∘ Δ_A.
Arrow hom_add_via_biproduct(const Arrow& f, const Arrow& g);

struct BornDecomposition {
  Arrow y;  // u ∘ u⋆ ∘ x
  Arrow z;  // v ∘ v⋆ ∘ x
  Scalar sqnorm_x;
  Scalar sqnorm_y;
  Scalar sqnorm_z;
  bool sums_to_x = false;
  bool orthogonal = false;
  /// sqnorm(y) = ⟨y | x⟩.
  bool projection = false;
  bool totals = false;

  bool holds() const { return sums_to_x && orthogonal && projection && totals; }
};

BornDecomposition born_decompose(const Arrow& x, const DirectSum& ds);

/// Normalized, pairwise orthogonal and maximal. Maximality is decided by rank
/// over fields and by exhaustive search over Bool.
bool is_basis(std::span<const Arrow> preps);

struct BasisCompletion {
  std::vector<Arrow> preps;
  bool normalized = true;
  bool complete = true;
};

/// Extends `partial` greedily with delta candidates in label order,
/// orthogonalizing each against the members so far and skipping dependent
/// (or isotropic) ones. When a member cannot be normalized in the backend it
/// stays orthogonal but unnormalized and `normalized` is false.
BasisCompletion complete_basis(const FinObject& a, std::span<const Arrow> partial,
                               BackendId backend);

/// x_{A,B,C} = [id_A ⊗ u_{B,C}  id_A ⊗ v_{B,C}] : (A⊗B)⊕(A⊗C) → A⊗(B⊕C).
Arrow distributor_x(const FinObject& a, const FinObject& b, const FinObject& c,
                    BackendId backend);
/// y_{A,B,C} = [u_{B,C} ⊗ id_A  v_{B,C} ⊗ id_A] : (B⊗A)⊕(C⊗A) → (B⊕C)⊗A.
Arrow distributor_y(const FinObject& a, const FinObject& b, const FinObject& c,
                    BackendId backend);

/// a ⊗ (b1 + b2) = a⊗b1 + a⊗b2 and the mirrored form, for preparations and
/// for arrows.
LawResult tensor_distributes_over_add(BackendId backend, std::size_t trials,
                                      std::uint64_t seed, std::size_t max_size = 4);

}  // namespace qcat
