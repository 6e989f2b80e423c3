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
#include "qcat/mixed.hpp"
#include "qcat/unit.hpp"

namespace qcat::laws {

namespace {

bool agree_on_deltas(const Arrow& f, const Arrow& g) {
  const BackendId b = f.backend();
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    Arrow x = point_prep(f.dom(), i, b);
    for (std::size_t j = 0; j < f.cod().size(); ++j) {
      Arrow y = point_prep(f.cod(), j, b);
      if (!(scalar_product(y, compose(f, x)) == scalar_product(y, compose(g, x)))) return false;
    }
  }
  return true;
}

}  // namespace

void register_unit(std::vector<Law>& out) {
  add_checker(out, "unit-axioms",
              "the unit object has trivial endomorphism monoid action and is normalized",
              always, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                rec.merge(check_unit_axioms(c.backend, c.trials, r.next(), c.max_size));
              });

  add_property(
      out, "lemma-lift-hom",
      "lifting scalars to an object preserves composition, identity and adjoint", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"t", scalar_arrow(random_scalar(c.backend, r))},
                        {"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        Scalar s = as_scalar(arg(i, 0)), t = as_scalar(arg(i, 1));
        const FinObject& a = arg(i, 2).cod();
        const BackendId b = s.backend();
        return lift_scalar(t * s, a) == compose(lift_scalar(t, a), lift_scalar(s, a)) &&
               lift_scalar(Scalar::one(b), a) == identity(a, b) &&
               adjoint(lift_scalar(s, a)) == lift_scalar(s_star(s), a);
      });

  add_property(
      out, "lemma-lift-natural", "lifted scalars commute with every arrow", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"f", random_arrow(c.backend, any_object(c, r, "a"),
                                           any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        Scalar s = as_scalar(arg(i, 0));
        const Arrow& f = arg(i, 1);
        return compose(f, lift_scalar(s, f.dom())) == compose(lift_scalar(s, f.cod()), f);
      });

  add_checker(out, "thm-scalar-com",
              "scalars commute and lifting a scalar to the unit gives itself", always,
              [](const LawContext& c, Rng& r, LawRecorder& rec) {
                auto check = [&](const Scalar& s, const Scalar& t) {
                  Arrow sa = scalar_arrow(s), ta = scalar_arrow(t);
                  rec.record(compose(ta, sa) == compose(sa, ta) &&
                                 lift_scalar(s, unit_object()) == sa,
                             {{"s", sa}, {"t", ta}});
                };
                if (auto all = enumerate_scalars(c.backend)) {
                  for (const auto& s : *all)
                    for (const auto& t : *all) check(s, t);
                }
                for (std::size_t k = 0; k < c.trials; ++k)
                  check(random_scalar(c.backend, r), random_scalar(c.backend, r));
              });

  add_checker(out, "thm-unit-unique",
              "an object is a unit object iff it has exactly one element", always,
              [](const LawContext& c, Rng& r, LawRecorder& rec) {
                for (std::size_t k = 0; k < c.trials; ++k) {
                  FinObject j = any_object(c, r, "j");
                  // A unitary preparation exists exactly for one-element objects.
                  bool found = false;
                  for (std::size_t t = 0; t < 4 && !found; ++t) {
                    Arrow u = t == 0 ? point_prep(j, 0, c.backend)
                                     : compose(random_unitary(c.backend, j, r),
                                               point_prep(j, 0, c.backend));
                    found = is_unitary(u);
                  }
                  rec.record(found == (j.size() == 1) && is_unit_object(j) == (j.size() == 1),
                             {{"a", point_prep(j, 0, c.backend)}});
                }
              });

  add_property(
      out, "thm-unit-characterization",
      "for normalized a: a is unitary iff its object is a unit object iff every preparation is a multiple of a",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow x = compose(random_unitary(c.backend, a, r), point_prep(a, r.below(a.size()), c.backend));
        return Instance{{"a", x}};
      },
      [](const Instance& i) {
        const Arrow& a = arg(i, 0);
        if (!is_right_unitary(a)) return true;
        bool spans = true;
        for (std::size_t k = 0; k < a.cod().size() && spans; ++k)
          spans = proportionality(a, point_prep(a.cod(), k, a.backend())).has_value();
        const bool unitary = is_unitary(a);
        return unitary == is_unit_object(a.cod()) && unitary == spans;
      });

  add_property(
      out, "lemma-scalar-product",
      "scalar products are conjugate symmetric, squared norms self-adjoint, adjoints move across",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"a", random_prep(c.backend, a, r)},
                        {"b", random_prep(c.backend, a, r)},
                        {"f", random_arrow(c.backend, a, b, r)},
                        {"c", random_prep(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1), &f = arg(i, 2), &x = arg(i, 3);
        return scalar_product(b, a) == s_star(scalar_product(a, b)) &&
               s_star(sqnorm(a)) == sqnorm(a) &&
               scalar_product(x, compose(f, a)) == scalar_product(compose(adjoint(f), x), a);
      });

  add_property(
      out, "thm-preserve-iff-right-unitary",
      "an arrow preserves scalar products iff it is right-unitary", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        FinObject b = sized(r, "b", a.size(), c.max_size);
        Arrow f = random_arrow(c.backend, a, b, r);
        if (r.coin()) {
          std::vector<std::size_t> image(a.size());
          for (std::size_t k = 0; k < a.size(); ++k) image[k] = k;
          f = compose(random_unitary(c.backend, b, r), functional_arrow(a, b, image, c.backend));
        }
        return Instance{{"f", f}, {"x", random_prep(c.backend, a, r)},
                        {"y", random_prep(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &x = arg(i, 1), &y = arg(i, 2);
        const BackendId b = f.backend();
        bool preserves = true;
        for (std::size_t p = 0; p < f.dom().size() && preserves; ++p)
          for (std::size_t q = 0; q < f.dom().size() && preserves; ++q) {
            Arrow dp = point_prep(f.dom(), p, b), dq = point_prep(f.dom(), q, b);
            preserves = scalar_product(compose(f, dq), compose(f, dp)) == scalar_product(dq, dp);
          }
        const bool ru = is_right_unitary(f);
        const bool sampled = scalar_product(compose(f, y), compose(f, x)) == scalar_product(y, x);
        return preserves == ru && (!ru || sampled);
      });

  add_property(
      out, "thm-inner-separation",
      "arrows are determined by their matrix coefficients, and g = f⋆ iff <g o b|a> = <b|f o a>", always,
      [](const LawContext& c, Rng& r) {
        Arrow f = random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r);
        Arrow h = adjoint(f);
        return Instance{{"f", f}, {"g", r.coin() ? f : perturb(f, r)}, {"h", r.coin() ? h : perturb(h, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2);
        const BackendId b = f.backend();
        bool swaps = true;
        for (std::size_t p = 0; p < f.dom().size() && swaps; ++p)
          for (std::size_t q = 0; q < f.cod().size() && swaps; ++q) {
            Arrow a = point_prep(f.dom(), p, b), y = point_prep(f.cod(), q, b);
            swaps = scalar_product(compose(h, y), a) == scalar_product(y, compose(f, a));
          }
        return agree_on_deltas(f, g) == (f == g) && swaps == (h == adjoint(f));
      });

  add_property(
      out, "thm-norm-trivial",
      "a scalar multiple of a normalized preparation is normalized iff the scalar is unitary, and zero is never normalized",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow x = compose(random_unitary(c.backend, a, r), point_prep(a, r.below(a.size()), c.backend));
        Scalar s = r.coin() ? unit_scalar(c.backend, r) : random_scalar(c.backend, r);
        return Instance{{"a", x}, {"s", scalar_arrow(s)}};
      },
      [](const Instance& i) {
        const Arrow& a = arg(i, 0);
        Scalar s = as_scalar(arg(i, 1));
        const BackendId b = a.backend();
        if (!sqnorm(a).is_one()) return true;
        return sqnorm(scale(a, s)).is_one() == (s_star(s) * s).is_one() &&
               !sqnorm(zero_arrow(unit_object(), a.cod(), b)).is_one();
      });

  add_property(
      out, "lemma-normalized-separation",
      "arrows agreeing on all normalized preparations are equal", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow f = random_arrow(c.backend, a, any_object(c, r, "b"), r);
        return Instance{{"f", f}, {"g", r.coin() ? f : perturb(f, r)},
                        {"u", random_unitary(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &u = arg(i, 2);
        const BackendId b = f.backend();
        if (u.dom() != f.dom() || !is_unitary(u)) return true;
        bool deltas = true, rotated = true;
        for (std::size_t k = 0; k < f.dom().size(); ++k) {
          Arrow d = point_prep(f.dom(), k, b);
          deltas = deltas && compose(f, d) == compose(g, d);
          rotated = rotated && compose(f, compose(u, d)) == compose(g, compose(u, d));
        }
        return deltas == (f == g) && rotated == (f == g);
      });

  add_property(
      out, "lemma-regular", "f⋆ o f = 0 only for f = 0, so only the zero preparation has squared norm 0",
      needs_anisotropic,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", sparse_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)},
                        {"x", sparse_arrow(c.backend, unit_object(), any_object(c, r, "c"), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &x = arg(i, 1);
        return compose(adjoint(f), f).is_zero() == f.is_zero() && sqnorm(x).is_zero() == x.is_zero();
      });
}

}  // namespace qcat::laws
