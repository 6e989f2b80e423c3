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

#include <optional>
#include <string>

#include "qcat/arrow.hpp"
#include "qcat/linalg.hpp"

namespace qcat {

/// A generalized quantic operation: a matrix that acts either linearly or
/// after involuting the input's entries.
struct Gqo {
  Arrow matrix;
  bool antilinear = false;
};

Arrow apply(const Gqo& g, const Arrow& a);
/// g after f. Two antilinear factors give a linear composite.
Gqo compose(const Gqo& g, const Gqo& f);

/// x_c : A → B, a ↦ (a⋆ ⊗ id_B) ∘ c, for c a preparation of A⊗B.
Gqo x_c(const Arrow& c);
/// y_c : B → A, b ↦ (id_A ⊗ b⋆) ∘ c.
Gqo y_c(const Arrow& c);
Arrow x_c(const Arrow& c, const Arrow& a);
Arrow y_c(const Arrow& c, const Arrow& b);

/// d_c^A = y_c ∘ x_c on A and d_c^B = x_c ∘ y_c on B; both linear.
Gqo partial_trace_A(const Arrow& c);
Gqo partial_trace_B(const Arrow& c);

struct SpectraComparison {
  bool match = false;
  /// λ-padded characteristic polynomials; empty for Cplx64, which compares
  /// eigenvalues instead.
  Poly padded_a;
  Poly padded_b;
};

/// Nonzero spectra of d_c^A and d_c^B agree with multiplicity. Needs a field
/// of characteristic 0 or above max(|A|, |B|); throws CapabilityMissing.
SpectraComparison compare_spectra(const Arrow& c);
bool spectra_match(const Arrow& c);

/// The coefficient table M(a, b) = c(⟨a,b⟩).
ScalarRows coefficient_matrix(const Arrow& c);

struct ProductFactors {
  Arrow a;
  Arrow b;
};

/// Factors c = a ⊗ b when the coefficient table has rank at most one.
std::optional<ProductFactors> factor_product_state(const Arrow& c);
bool is_product_state(const Arrow& c);

/// The scalar s with y = x ∘ s, if any. x must be nonzero.
std::optional<Scalar> proportionality(const Arrow& x, const Arrow& y);

struct SuperpositionCase {
  bool product = false;
  /// 1: a2 = a1 ∘ s, 2: b2 = b1 ∘ s, 0: the sum is not a product state.
  int branch = 0;
  Scalar s;
};

/// Whether (a1⊗b1) + (a2⊗b2) is a product state, and which of the two
/// proportionalities makes it one. Requires a1⊗b1 ≠ 0 and a field.
SuperpositionCase superposition_decide(const Arrow& a1, const Arrow& b1,
                                       const Arrow& a2, const Arrow& b2);

/// Cloning data for A: c : A⊗W → (A⊗A)⊗W and an ancilla w : I → W.
struct Cloner {
  FinObject a;
  FinObject w_object;
  Arrow c;
  Arrow w;
};

/// The cloner of a unit object: W = I, c the relabeling, w the delta.
/// Throws NotUnitObject.
Cloner build_cloner(const FinObject& a, BackendId backend);
/// w_a = w ∘ a⁻¹ for the scalar carried by a, and 0 when a = 0.
Arrow cloner_ancilla(const Cloner& cl, const Arrow& a);

/// The copy candidate ⟨a,w⟩ ↦ ⟨⟨a,a⟩,w⟩.
Arrow copy_candidate(const FinObject& a, const FinObject& w, BackendId backend);

struct CloneWitness {
  enum class Status { Ok, Counterexample };
  Status status = Status::Ok;
  // Set on Counterexample only.
  /// The probe preparation.
  std::optional<Arrow> a;
  /// The ancilla the probe was fed with.
  std::optional<Arrow> b;
  /// c ∘ (a ⊗ b)
  std::optional<Arrow> lhs;
  /// (a ⊗ a) ⊗ w', w' read off lhs; when no nonzero w' exists, (a ⊗ a) ⊗ b.
  std::optional<Arrow> rhs;
  std::size_t probes = 0;

  bool ok() const { return status == Status::Ok; }
};

/// Evaluates the cloning equation on every delta, every pairwise sum of
/// deltas and one scaled delta. Ok iff each result has the shape
/// (x⊗x)⊗w' with w' ≠ 0.
CloneWitness verify_cloner(const FinObject& a, const Arrow& c, const Arrow& w);

std::string format_clone_witness(const CloneWitness& w);

}  // namespace qcat
