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

bool eigen_pair(const Arrow& f, const Arrow& x, Scalar& s) {
  if (x.is_zero()) return false;
  auto p = proportionality(x, compose(f, x));
  if (!p) return false;
  s = *p;
  return true;
}

}  // namespace

void register_core(std::vector<Law>& out) {
  add_property(
      out, "cat-assoc", "composition is associative", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        FinObject x = any_object(c, r, "c"), d = any_object(c, r, "d");
        return Instance{{"f", random_arrow(c.backend, a, b, r)},
                        {"g", random_arrow(c.backend, b, x, r)},
                        {"h", random_arrow(c.backend, x, d, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2);
        return compose(h, compose(g, f)) == compose(compose(h, g), f);
      });

  add_property(
      out, "cat-identity", "identities are neutral for composition", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"),
                                           any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        const Arrow& f = arg(i, 0);
        return compose(identity(f.cod(), f.backend()), f) == f &&
               compose(f, identity(f.dom(), f.backend())) == f;
      });

  add_property(
      out, "adj-involution",
      "the adjoint is an involutive contravariant functor fixing objects", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b"),
                  x = any_object(c, r, "c");
        return Instance{{"f", random_arrow(c.backend, a, b, r)},
                        {"g", random_arrow(c.backend, b, x, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        Arrow id = identity(f.dom(), f.backend());
        return adjoint(adjoint(f)) == f && adjoint(compose(g, f)) == compose(adjoint(f), adjoint(g)) &&
               adjoint(id) == id && adjoint(f).dom() == f.cod();
      });

  add_property(
      out, "lemma-id-unitary", "identities are self-adjoint and unitary", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        auto fl = unitarity_flags(identity(arg(i, 0).cod(), arg(i, 0).backend()));
        return fl.self_adjoint && fl.unitary && fl.left_unitary && fl.right_unitary;
      });

  add_property(
      out, "lemma-eigen-selfadjoint",
      "eigenvalues of self-adjoint arrows are self-adjoint scalars", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        auto d = self_adjoint_with_eigenbasis(c.backend, a, r);
        Arrow x = compose(d.u, point_prep(a, r.below(a.size()), c.backend));
        return Instance{{"f", d.f}, {"x", x}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &x = arg(i, 1);
        Scalar s;
        if (!is_self_adjoint(f) || !eigen_pair(f, x, s)) return true;
        return s_star(s) == s;
      });

  add_property(
      out, "lemma-selfadjoint-product",
      "for self-adjoint f and g, g o f is self-adjoint iff f and g commute", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow f = random_self_adjoint(c.backend, a, r);
        Arrow g = r.coin() ? random_self_adjoint(c.backend, a, r)
                           : compose(f, f) + scale(f, self_adjoint_scalar(c.backend, r));
        return Instance{{"f", f}, {"g", g}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        if (!is_self_adjoint(f) || !is_self_adjoint(g)) return true;
        return is_self_adjoint(compose(g, f)) == (compose(g, f) == compose(f, g));
      });

  add_property(
      out, "lemma-ortho-eigen",
      "if x is an eigenvector of self-adjoint f and y is orthogonal to x, so is f o y",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        auto d = self_adjoint_with_eigenbasis(c.backend, a, r);
        const std::size_t k = r.below(a.size());
        std::vector<Scalar> coords;
        for (std::size_t j = 0; j < a.size(); ++j)
          coords.push_back(j == k ? Scalar::zero(c.backend) : random_scalar(c.backend, r));
        return Instance{{"f", d.f},
                        {"x", compose(d.u, point_prep(a, k, c.backend))},
                        {"y", compose(d.u, prep_from(a, coords))}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &x = arg(i, 1), &y = arg(i, 2);
        Scalar s;
        if (!is_self_adjoint(f) || !eigen_pair(f, x, s) || !scalar_product(x, y).is_zero())
          return true;
        return scalar_product(x, compose(f, y)).is_zero();
      });

  add_property(
      out, "zero-absorbing",
      "zero arrows absorb composition, are self-adjoint and lift from the unit", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        FinObject x = any_object(c, r, "c"), d = any_object(c, r, "d");
        return Instance{{"f", random_arrow(c.backend, x, a, r)},
                        {"g", random_arrow(c.backend, b, d, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        const BackendId bk = f.backend();
        Arrow z = zero_arrow(f.cod(), g.dom(), bk);
        return compose(g, compose(z, f)) == zero_arrow(f.dom(), g.cod(), bk) &&
               adjoint(z) == zero_arrow(g.dom(), f.cod(), bk) &&
               lift_scalar(Scalar::zero(bk), f.cod()) == zero_arrow(f.cod(), f.cod(), bk);
      });

  add_property(
      out, "lemma-zero-unique",
      "an arrow family absorbing composition on both sides is the zero family", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        Arrow z = r.below(3) == 0 ? zero_arrow(a, b, c.backend) : random_arrow(c.backend, a, b, r);
        return Instance{{"z", z},
                        {"f", random_arrow(c.backend, a, a, r)},
                        {"g", random_arrow(c.backend, b, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &z = arg(i, 0), &f = arg(i, 1), &g = arg(i, 2);
        const BackendId bk = z.backend();
        // Absorbing against the sampled arrows and against the zero endomorphisms.
        const bool absorbs = compose(g, compose(z, f)) == z &&
                             compose(zero_arrow(z.cod(), z.cod(), bk), z) == z &&
                             compose(z, zero_arrow(z.dom(), z.dom(), bk)) == z;
        return !absorbs || z.is_zero();
      });

  add_checker(out, "lemma-functional-unitary",
              "the arrow of a map is right-unitary iff injective and unitary iff bijective",
              always, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                for (std::size_t t = 0; t < c.trials; ++t) {
                  FinObject a = any_object(c, r, "a");
                  FinObject b = r.coin() ? make_object("b", a.size()) : any_object(c, r, "b");
                  std::vector<std::size_t> image(a.size());
                  if (a.size() <= b.size() && r.coin()) {
                    std::vector<std::size_t> perm(b.size());
                    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
                    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[r.below(k)]);
                    for (std::size_t k = 0; k < a.size(); ++k) image[k] = perm[k];
                  } else {
                    for (auto& x : image) x = r.below(b.size());
                  }
                  std::vector<bool> hit(b.size(), false);
                  bool injective = true;
                  for (auto x : image) {
                    if (hit[x]) injective = false;
                    hit[x] = true;
                  }
                  const bool bijective = injective && a.size() == b.size();
                  Arrow chi = functional_arrow(a, b, image, c.backend);
                  rec.record(is_right_unitary(chi) == injective && is_unitary(chi) == bijective,
                             {{"chi", chi}});
                }
              });
}

}  // namespace qcat::laws
