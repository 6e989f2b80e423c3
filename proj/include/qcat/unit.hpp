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
#include <span>

#include "qcat/arrow.hpp"
#include "qcat/law_result.hpp"

namespace qcat {

/// The canonical unit object, the singleton `{*}`. Preparations of A are
/// arrows I → A, destructions A → I, scalars I → I.
FinObject unit_object();

bool is_preparation(const Arrow& a);
/// Throws ObjectMismatch unless dom(a) is the unit object.
void require_preparation(const Arrow& a);

/// The 1×1 arrow on I carrying s.
Arrow scalar_arrow(const Scalar& s);
/// The entry of an arrow I → I; throws ObjectMismatch otherwise.
Scalar as_scalar(const Arrow& s);
/// Preparation with the given coordinates, in label order.
Arrow prep_from(const FinObject& a, std::vector<Scalar> coords);

/// ⟨b | a⟩ = b⋆ ∘ a.
Scalar scalar_product(const Arrow& b, const Arrow& a);
Scalar sqnorm(const Arrow& a);

/// ψ_label: 1 at the label, 0 elsewhere. Throws UnknownLabel.
Arrow point_prep(const FinObject& a, std::string_view label, BackendId backend);
Arrow point_prep(const FinObject& a, std::size_t index, BackendId backend);

/// s_A = s · id_A.
Arrow lift_scalar(const Scalar& s, const FinObject& a);

struct NormalizationResult {
  Arrow normalized;
  Scalar factor;
};

/// a = normalized ∘ factor with normalized right-unitary. The zero
/// preparation yields factor 0 and the first delta. Throws
/// NotNormalizableInBackend when no factor with factor⋆·factor = sqnorm(a)
/// exists in the backend.
NormalizationResult normalize(const Arrow& a);

/// Unit objects of the matrix model are exactly the singletons.
bool is_unit_object(const FinObject& a);

/// Existence of a normalized preparation, separation by preparations, and
/// the global scalar action, on random arrows of size up to `max_size`.
LawResult check_unit_axioms(BackendId backend, std::size_t trials,
                            std::uint64_t seed, std::size_t max_size = 4);

}  // namespace qcat
