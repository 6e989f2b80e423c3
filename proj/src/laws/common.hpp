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

#include <functional>
#include <string>
#include <vector>

#include "qcat/arrow.hpp"
#include "qcat/law_result.hpp"
#include "qcat/laws.hpp"
#include "qcat/random.hpp"

namespace qcat::laws {

using Generator = std::function<Instance(const LawContext&, Rng&)>;
using Checker = std::function<void(const LawContext&, Rng&, LawRecorder&)>;
using Requirement = std::function<std::string(const CapabilitySet&)>;

std::string always(const CapabilitySet&);
std::string needs_additive_inverse(const CapabilitySet& c);
std::string needs_field(const CapabilitySet& c);
/// 1⁻ with inverses: the scalar side of a Q-category.
std::string needs_quantic(const CapabilitySet& c);
std::string needs_sqrt2_quantic(const CapabilitySet& c);
std::string needs_anisotropic(const CapabilitySet& c);

/// Randomized law: shrinks the first failing instance.
void add_property(std::vector<Law>& out, std::string id, std::string statement,
                  Requirement missing, Generator generate, Property holds);
/// Hand-rolled law recording into a LawRecorder.
void add_checker(std::vector<Law>& out, std::string id, std::string statement,
                 Requirement missing, Checker check);

inline const Arrow& arg(const Instance& inst, std::size_t k) { return inst[k].arrow; }

FinObject sized(Rng& rng, std::string_view prefix, std::size_t lo, std::size_t hi);
FinObject any_object(const LawContext& c, Rng& rng, std::string_view prefix);
/// Size capped below the suite bound, for laws that tensor several objects.
FinObject capped_object(const LawContext& c, Rng& rng, std::string_view prefix,
                        std::size_t cap);

/// s with s⋆ = s.
Scalar self_adjoint_scalar(BackendId b, Rng& rng);
/// s with s⋆s = 1.
Scalar unit_scalar(BackendId b, Rng& rng);
/// Differs from f in exactly one entry.
Arrow perturb(const Arrow& f, Rng& rng);
/// f, a zero arrow, or f with some entries cleared.
Arrow sparse_arrow(BackendId b, const FinObject& dom, const FinObject& cod, Rng& rng);
/// u ∘ diag(d) ∘ u⋆ with u a random unitary.
struct Diagonalized {
  Arrow f;
  Arrow u;
  std::vector<Scalar> eigenvalues;
};
Diagonalized self_adjoint_with_eigenbasis(BackendId b, const FinObject& a, Rng& rng);
/// Same arrow with the codomain relabeled.
Arrow with_cod(const Arrow& f, const FinObject& cod);
/// f⁻ = f ∘ (1⁻)_A.
Arrow negated(const Arrow& f);
/// u ∘ ψ_i for every i: an orthonormal basis.
std::vector<Arrow> rotated_basis(BackendId b, const FinObject& a, Rng& rng);

void register_core(std::vector<Law>& out);
void register_unit(std::vector<Law>& out);
void register_tensor(std::vector<Law>& out);
void register_biproduct(std::vector<Law>& out);
void register_quantic(std::vector<Law>& out);
void register_fixtures(std::vector<Law>& out);

}  // namespace qcat::laws
