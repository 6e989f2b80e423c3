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
#include <functional>
#include <optional>
#include <vector>

#include "qcat/arrow.hpp"
#include "qcat/law_result.hpp"

namespace qcat {

/// A ⊗ B: labels `<a,b>` in lexicographic order of the factors' label order.
FinObject tensor_object(const FinObject& a, const FinObject& b);

struct TensorFactors {
  FinObject left;
  FinObject right;
};

/// Recovers A and B from an object built by tensor_object.
std::optional<TensorFactors> split_tensor_object(const FinObject& ab);
/// Throws ObjectMismatch when the object is not a tensor object.
TensorFactors require_tensor_object(const FinObject& ab);

/// κ(a, b) = a ⊗ b for preparations: the entrywise product.
Arrow kappa(const Arrow& a, const Arrow& b);

/// Kronecker product f ⊗ g : A'⊗B' → A⊗B.
Arrow tensor_arrows(const Arrow& f, const Arrow& g);

/// Unitary relabelings I⊗A → A and A⊗I → A.
Arrow unit_left_relabel(const FinObject& a, BackendId backend);
Arrow unit_right_relabel(const FinObject& a, BackendId backend);

/// A bilinear map on preparations, stored by its values on delta pairs.
class BiArrow {
 public:
  /// Generators listed row-major over (A label, B label). Throws
  /// IncompleteTable if the table is not total or an entry is not a
  /// preparation of `cod`.
  BiArrow(FinObject left, FinObject right, FinObject cod, BackendId backend,
          std::vector<Arrow> table);

  static BiArrow from_function(
      FinObject left, FinObject right, FinObject cod, BackendId backend,
      const std::function<Arrow(std::size_t, std::size_t)>& generator);

  const FinObject& left() const { return left_; }
  const FinObject& right() const { return right_; }
  const FinObject& cod() const { return cod_; }
  BackendId backend() const { return backend_; }
  const Arrow& generator(std::size_t i, std::size_t j) const {
    return table_[i * right_.size() + j];
  }

  /// The bilinear extension α(a, b) = Σ a(i)·b(j)·α(ψ_i, ψ_j).
  Arrow operator()(const Arrow& a, const Arrow& b) const;

  friend bool operator==(const BiArrow& x, const BiArrow& y);

 private:
  FinObject left_;
  FinObject right_;
  FinObject cod_;
  BackendId backend_;
  std::vector<Arrow> table_;
};

BiArrow biarrow_from_table(FinObject left, FinObject right, FinObject cod,
                           BackendId backend, std::vector<Arrow> table);
Arrow eval_biarrow(const BiArrow& alpha, const Arrow& a, const Arrow& b);
/// κ_{A,B} as a bi-arrow.
BiArrow kappa_biarrow(const FinObject& a, const FinObject& b, BackendId backend);
/// x ∘ α.
BiArrow post_compose(const Arrow& x, const BiArrow& alpha);
/// Pointwise sum of parallel bi-arrows.
BiArrow add_biarrows(const BiArrow& x, const BiArrow& y);

/// The unique f : A⊗B → X with f ∘ κ = α.
Arrow factorize(const BiArrow& alpha);

/// ⟨a,b⟩ ↦ ⟨b,a⟩ : A⊗B → B⊗A.
Arrow swap_unitary(const FinObject& a, const FinObject& b, BackendId backend);

/// ⟨⟨a,b⟩,c⟩ ↦ ⟨a,⟨b,c⟩⟩. Only a relabeling of the matrix model.
Arrow model_associator(const FinObject& a, const FinObject& b,
                       const FinObject& c, BackendId backend);

/// ⟨a⊗b | a'⊗b'⟩ = ⟨a|a'⟩·⟨b|b'⟩ on random quadruples plus every delta
/// quadruple.
LawResult condition2_check(const FinObject& a, const FinObject& b,
                           BackendId backend, std::size_t trials,
                           std::uint64_t seed);

/// Symmetric (or antisymmetric) tensor square of A.
struct SymTensorResult {
  FinObject object;
  /// σ = p ∘ κ (τ = q ∘ κ for the antisymmetric square).
  BiArrow sigma;
  /// Projection A⊗A → the symmetric (antisymmetric) object.
  Arrow p;
};

/// Labels `{a,b}` for a ≤ b in label order; |A|(|A|+1)/2 of them. Needs
/// inverses, 1⁻ and √2; throws CapabilityMissing otherwise.
SymTensorResult s_tensor(const FinObject& a, BackendId backend);
/// Labels `(a<b)` for a < b; |A|(|A|-1)/2 of them. Throws
/// CapabilityMissing, and ObjectMismatch when |A| = 1 (the square is empty
/// and objects are nonempty).
SymTensorResult a_tensor(const FinObject& a, BackendId backend);

/// The unique x with α = x ∘ σ for a symmetric (antisymmetric) bi-arrow α.
Arrow sym_mediator(const BiArrow& alpha, const SymTensorResult& square);

}  // namespace qcat
