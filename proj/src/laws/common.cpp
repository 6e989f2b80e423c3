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

#include "laws/common.hpp"

#include "qcat/error.hpp"
#include "qcat/unit.hpp"

namespace qcat::laws {

std::string always(const CapabilitySet&) { return {}; }

std::string needs_additive_inverse(const CapabilitySet& c) {
  return c.has_additive_inverse ? "" : "has_additive_inverse";
}

std::string needs_field(const CapabilitySet& c) {
  if (!c.has_additive_inverse) return "has_additive_inverse";
  return c.has_multiplicative_inverse_of_nonzero ? "" : "has_multiplicative_inverse_of_nonzero";
}

std::string needs_quantic(const CapabilitySet& c) {
  if (!c.has_minus_one) return "has_minus_one";
  return needs_field(c);
}

std::string needs_sqrt2_quantic(const CapabilitySet& c) {
  std::string m = needs_quantic(c);
  if (!m.empty()) return m;
  return c.has_sqrt2 ? "" : "has_sqrt2";
}

std::string needs_anisotropic(const CapabilitySet& c) {
  return c.anisotropic ? "" : "anisotropic";
}

void add_property(std::vector<Law>& out, std::string id, std::string statement,
                  Requirement missing, Generator generate, Property holds) {
  std::string law_id = id;
  out.push_back({std::move(id), std::move(statement), "", std::move(missing),
                 [law_id, generate, holds](const LawContext& c) {
                   Rng rng(c.seed);
                   return check_property(
                       law_id, c.trials, rng, [&](Rng& r) { return generate(c, r); }, holds);
                 }});
}

void add_checker(std::vector<Law>& out, std::string id, std::string statement,
                 Requirement missing, Checker check) {
  std::string law_id = id;
  out.push_back({std::move(id), std::move(statement), "", std::move(missing),
                 [law_id, check](const LawContext& c) {
                   Rng rng(c.seed);
                   LawRecorder rec(law_id);
                   check(c, rng, rec);
                   return rec.finish();
                 }});
}

FinObject sized(Rng& rng, std::string_view prefix, std::size_t lo, std::size_t hi) {
  if (hi < lo) hi = lo;
  return make_object(prefix, lo + rng.below(hi - lo + 1));
}

FinObject any_object(const LawContext& c, Rng& rng, std::string_view prefix) {
  return sized(rng, prefix, 1, c.max_size);
}

FinObject capped_object(const LawContext& c, Rng& rng, std::string_view prefix,
                        std::size_t cap) {
  return sized(rng, prefix, 1, std::min(c.max_size, cap));
}

Scalar self_adjoint_scalar(BackendId b, Rng& rng) {
  Scalar s = random_scalar(b, rng);
  switch (b) {
    case BackendId::Gauss:
      return Scalar::gaussian(s.re(), Rational(0));
    case BackendId::Cplx64:
      return Scalar::complex({s.cvalue().real(), 0.0});
    default:
      return s;
  }
}

Scalar unit_scalar(BackendId b, Rng& rng) {
  return random_unitary(b, unit_object(), rng).at(0, 0);
}

Arrow perturb(const Arrow& f, Rng& rng) {
  std::vector<Scalar> e(f.entries().begin(), f.entries().end());
  const std::size_t k = rng.below(e.size());
  Scalar moved = e[k] + random_nonzero_scalar(f.backend(), rng);
  if (moved == e[k]) moved = e[k].is_zero() ? Scalar::one(f.backend()) : Scalar::zero(f.backend());
  e[k] = moved;
  return Arrow(f.dom(), f.cod(), f.backend(), std::move(e));
}

Arrow sparse_arrow(BackendId b, const FinObject& dom, const FinObject& cod, Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return zero_arrow(dom, cod, b);
    case 1: {
      Arrow f = random_arrow(b, dom, cod, rng);
      std::vector<Scalar> e(f.entries().begin(), f.entries().end());
      for (auto& s : e)
        if (rng.coin()) s = Scalar::zero(b);
      return Arrow(dom, cod, b, std::move(e));
    }
    default:
      return random_arrow(b, dom, cod, rng);
  }
}

Diagonalized self_adjoint_with_eigenbasis(BackendId b, const FinObject& a, Rng& rng) {
  Arrow u = random_unitary(b, a, rng);
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // Repeated eigenvalues now and then.
    d.push_back(i > 0 && rng.below(4) == 0 ? d[rng.below(i)] : self_adjoint_scalar(b, rng));
  }
  Arrow diag = Arrow::from_function(a, a, b, [&](std::size_t i, std::size_t j) {
    return i == j ? d[i] : Scalar::zero(b);
  });
  return {compose(u, compose(diag, adjoint(u))), u, d};
}

Arrow with_cod(const Arrow& f, const FinObject& cod) {
  return Arrow(f.dom(), cod, f.backend(),
               std::vector<Scalar>(f.entries().begin(), f.entries().end()));
}

Arrow negated(const Arrow& f) { return compose(f, lift_scalar(minus_one(f.backend()), f.dom())); }

std::vector<Arrow> rotated_basis(BackendId b, const FinObject& a, Rng& rng) {
  Arrow u = random_unitary(b, a, rng);
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(compose(u, point_prep(a, i, b)));
  return out;
}

}  // namespace qcat::laws
