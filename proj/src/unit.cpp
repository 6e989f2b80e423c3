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

#include "qcat/unit.hpp"

#include "qcat/error.hpp"

namespace qcat {

FinObject unit_object() {
  static const FinObject unit{"*"};
  return unit;
}

bool is_preparation(const Arrow& a) { return a.dom() == unit_object(); }

void require_preparation(const Arrow& a) {
  if (!is_preparation(a)) {
    throw Error(ErrorKind::ObjectMismatch,
                "preparations start at the unit object, not {" + a.dom().str() + "}");
  }
}

Arrow scalar_arrow(const Scalar& s) {
  return Arrow(unit_object(), unit_object(), s.backend(), {s});
}

Scalar as_scalar(const Arrow& s) {
  if (!(s.dom() == unit_object()) || !(s.cod() == unit_object())) {
    throw Error(ErrorKind::ObjectMismatch, "not a scalar arrow");
  }
  return s.at(0, 0);
}

Arrow prep_from(const FinObject& a, std::vector<Scalar> coords) {
  if (coords.empty()) throw Error(ErrorKind::ObjectMismatch, "empty preparation");
  BackendId b = coords.front().backend();
  return Arrow(unit_object(), a, b, std::move(coords));
}

Scalar scalar_product(const Arrow& b, const Arrow& a) {
  require_preparation(a);
  require_preparation(b);
  return as_scalar(compose(adjoint(b), a));
}

Scalar sqnorm(const Arrow& a) { return scalar_product(a, a); }

Arrow point_prep(const FinObject& a, std::string_view label, BackendId backend) {
  return point_prep(a, a.require_index(label), backend);
}

Arrow point_prep(const FinObject& a, std::size_t index, BackendId backend) {
  if (index >= a.size()) throw Error(ErrorKind::UnknownLabel, "index out of range");
  return Arrow::from_function(unit_object(), a, backend,
                              [&](std::size_t, std::size_t j) {
                                return j == index ? Scalar::one(backend)
                                                  : Scalar::zero(backend);
                              });
}

Arrow lift_scalar(const Scalar& s, const FinObject& a) {
  return scale(identity(a, s.backend()), s);
}

NormalizationResult normalize(const Arrow& a) {
  require_preparation(a);
  const BackendId b = a.backend();
  if (a.is_zero()) {
    return {point_prep(a.cod(), std::size_t{0}, b), Scalar::zero(b)};
  }
  auto root = norm_root(sqnorm(a));
  if (!root || root->is_zero()) {
    throw Error(ErrorKind::NotNormalizableInBackend,
                "no t with t⋆·t = " + sqnorm(a).str() + " in " +
                    std::string(backend_name(b)));
  }
  Arrow n = scale(a, s_inv(*root));
  return {std::move(n), *root};
}

bool is_unit_object(const FinObject& a) { return a.size() == 1; }

LawResult check_unit_axioms(BackendId backend, std::size_t trials,
                            std::uint64_t seed, std::size_t max_size) {
  LawRecorder rec("unit-axioms");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials && !rec.failed(); ++t) {
    FinObject a = random_object(rng, "a", max_size);
    FinObject b = random_object(rng, "b", max_size);

    // At least one normalized preparation.
    Arrow psi = point_prep(a, rng.below(a.size()), backend);
    rec.record(is_right_unitary(psi), {{"psi", psi}}, "delta not normalized");

    // Separation: f and g agree on every delta iff they are equal.
    Arrow f = random_arrow(backend, a, b, rng);
    Arrow g = f;
    if (rng.coin()) {
      std::size_t i = rng.below(a.size()), j = rng.below(b.size());
      g = Arrow::from_function(a, b, backend, [&](std::size_t x, std::size_t y) {
        return x == i && y == j ? f.at(x, y) + Scalar::one(backend) : f.at(x, y);
      });
    }
    bool agree = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Arrow d = point_prep(a, i, backend);
      agree = agree && compose(f, d) == compose(g, d);
    }
    rec.record(agree == (f == g), {{"f", f}, {"g", g}}, "separation");

    // Scalar action: a ∘ s = s_A ∘ a and its destruction dual.
    Scalar s = random_scalar(backend, rng);
    Arrow p = random_prep(backend, a, rng);
    Arrow lhs = compose(p, scalar_arrow(s));
    Arrow rhs = compose(lift_scalar(s, a), p);
    Arrow dp = adjoint(p);
    bool dual = compose(scalar_arrow(s), dp) == compose(dp, lift_scalar(s, a));
    rec.record(lhs == rhs && dual, {{"p", p}, {"s", scalar_arrow(s)}}, "scalar action");
  }
  return rec.finish();
}

}  // namespace qcat
