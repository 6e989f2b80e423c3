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
#include "qcat/biproduct.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

namespace qcat::laws {

namespace {

bool is_ucoproduct(const Arrow& u, const Arrow& v) {
  const BackendId b = u.backend();
  return is_right_unitary(u) && is_right_unitary(v) && compose(adjoint(v), u).is_zero() &&
         add_arrows(compose(u, adjoint(u)), compose(v, adjoint(v))) == identity(u.cod(), b);
}

// The columns of u restricted to a set of indices.
Arrow columns(const Arrow& w, std::size_t from, std::size_t to, std::string_view prefix) {
  FinObject a = make_object(prefix, to - from);
  std::vector<std::size_t> image(to - from);
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = from + k;
  return compose(w, functional_arrow(a, w.dom(), image, w.backend()));
}

std::optional<DirectSum> sum_of(const Arrow& x) { return split_direct_sum(x.dom(), x.backend()); }

}  // namespace

void register_biproduct(std::vector<Law>& out) {
  add_property(
      out, "model-ucoproduct", "the tagged union with its injections is a u-coproduct", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)},
                        {"b", random_prep(c.backend, any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        DirectSum ds = direct_sum(arg(i, 0).cod(), arg(i, 1).cod(), arg(i, 0).backend());
        return is_ucoproduct(ds.inj_left, ds.inj_right);
      });

  add_property(
      out, "thm-coproduct-product",
      "copairs and pairs are adjoint to each other and mediate uniquely", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b"), x = any_object(c, r, "x");
        Arrow f = random_arrow(c.backend, x, a, r), g = random_arrow(c.backend, x, b, r);
        DirectSum ds = direct_sum(a, b, c.backend);
        return Instance{{"f", f}, {"g", g}, {"h", perturb(pair(f, g, ds), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2);
        const BackendId bk = f.backend();
        DirectSum ds = direct_sum(f.cod(), g.cod(), bk);
        if (h.cod() != ds.object || h.dom() != f.dom()) return true;
        Arrow p = pair(f, g, ds);
        const bool universal = compose(adjoint(ds.inj_left), p) == f &&
                               compose(adjoint(ds.inj_right), p) == g;
        const bool unique = h == p || !(compose(adjoint(ds.inj_left), h) == f &&
                                        compose(adjoint(ds.inj_right), h) == g);
        return universal && unique && adjoint(p) == copair(adjoint(f), adjoint(g), ds) &&
               compose(copair(adjoint(f), adjoint(g), ds), ds.inj_left) == adjoint(f);
      });

  add_property(
      out, "thm-ucoproduct-unique",
      "composing a u-coproduct with a unitary gives a u-coproduct whose mediator is that unitary",
      always,
      [](const LawContext& c, Rng& r) {
        DirectSum ds = direct_sum(any_object(c, r, "a"), any_object(c, r, "b"), c.backend);
        FinObject x = make_object("x", ds.object.size());
        return Instance{{"w", with_cod(random_unitary(c.backend, ds.object, r), x)}};
      },
      [](const Instance& i) {
        const Arrow& w = arg(i, 0);
        auto ds = sum_of(w);
        if (!ds || !is_unitary(w)) return true;
        Arrow u = compose(w, ds->inj_left), v = compose(w, ds->inj_right);
        Arrow m = copair(u, v, *ds);
        return is_ucoproduct(u, v) && m == w && is_unitary(m);
      });

  add_property(
      out, "thm-biproduct-blocks",
      "arrows between direct sums are exactly block matrices of their four corners", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"a", random_arrow(c.backend, a, a, r)}, {"f", random_arrow(c.backend, a, b, r)},
                        {"g", random_arrow(c.backend, b, a, r)}, {"b", random_arrow(c.backend, b, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &f = arg(i, 1), &g = arg(i, 2), &b = arg(i, 3);
        const BackendId bk = a.backend();
        if (a.dom() != a.cod() || b.dom() != b.cod()) return true;
        DirectSum ds = direct_sum(a.dom(), b.dom(), bk);
        Arrow x = block_matrix(a, f, g, b, ds);
        Arrow us = adjoint(ds.inj_left), vs = adjoint(ds.inj_right);
        const bool corners = compose(us, compose(x, ds.inj_left)) == a &&
                             compose(vs, compose(x, ds.inj_left)) == f &&
                             compose(us, compose(x, ds.inj_right)) == g &&
                             compose(vs, compose(x, ds.inj_right)) == b;
        const bool shape = x == copair(pair(a, f, ds), pair(g, b, ds), ds) &&
                           x == pair(copair(a, g, ds), copair(f, b, ds), ds);
        Arrow ida = identity(a.dom(), bk), idb = identity(b.dom(), bk);
        return corners && shape &&
               block_matrix(ida, zero_arrow(a.dom(), b.dom(), bk), zero_arrow(b.dom(), a.dom(), bk), idb, ds) ==
                   identity(ds.object, bk);
      });

  add_property(
      out, "lemma-biproduct-arrows", "direct sums of arrows commute with injections and projections",
      always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)},
                        {"g", random_arrow(c.backend, any_object(c, r, "p"), any_object(c, r, "q"), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        const BackendId bk = f.backend();
        DirectSum d1 = direct_sum(f.dom(), g.dom(), bk), d2 = direct_sum(f.cod(), g.cod(), bk);
        Arrow s = direct_sum_arrows(f, g);
        return compose(s, d1.inj_left) == compose(d2.inj_left, f) &&
               compose(s, d1.inj_right) == compose(d2.inj_right, g) &&
               compose(adjoint(d2.inj_left), s) == compose(f, adjoint(d1.inj_left)) &&
               compose(adjoint(d2.inj_right), s) == compose(g, adjoint(d1.inj_right)) &&
               adjoint(s) == direct_sum_arrows(adjoint(f), adjoint(g));
      });

  add_property(
      out, "lemma-diagonal-adjoint", "the diagonal and codiagonal are adjoint", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        const FinObject& a = arg(i, 0).cod();
        const BackendId bk = arg(i, 0).backend();
        return adjoint(diagonal(a, bk)) == codiagonal(a, bk) &&
               adjoint(codiagonal(a, bk)) == diagonal(a, bk);
      });

  add_property(
      out, "lemma-pair-via-diagonal", "pairs and copairs factor through the diagonal and codiagonal",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"f", random_arrow(c.backend, a, b, r)}, {"g", random_arrow(c.backend, a, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        const BackendId bk = f.backend();
        Arrow s = direct_sum_arrows(f, g);
        return compose(s, diagonal(f.dom(), bk)) == pair(f, g, direct_sum(f.cod(), f.cod(), bk)) &&
               compose(codiagonal(f.cod(), bk), s) == copair(f, g, direct_sum(f.dom(), f.dom(), bk));
      });

  add_property(
      out, "lemma-diagonal-natural", "the diagonal and codiagonal are natural", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        const Arrow& f = arg(i, 0);
        const BackendId bk = f.backend();
        Arrow ff = direct_sum_arrows(f, f);
        return compose(ff, diagonal(f.dom(), bk)) == compose(diagonal(f.cod(), bk), f) &&
               compose(codiagonal(f.cod(), bk), ff) == compose(f, codiagonal(f.dom(), bk));
      });

  add_property(
      out, "lemma-add-via-diagonal",
      "the sum of two arrows is their copair after the diagonal and the codiagonal after their pair",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"f", random_arrow(c.backend, a, b, r)}, {"g", random_arrow(c.backend, a, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        const BackendId bk = f.backend();
        Arrow sum = add_arrows(f, g);
        return compose(copair(f, g, direct_sum(f.dom(), f.dom(), bk)), diagonal(f.dom(), bk)) == sum &&
               compose(codiagonal(f.cod(), bk), pair(f, g, direct_sum(f.cod(), f.cod(), bk))) == sum &&
               hom_add_via_biproduct(f, g) == sum;
      });

  add_property(
      out, "lemma-add-zero", "zero is neutral for addition of arrows", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        const Arrow& f = arg(i, 0);
        Arrow z = zero_arrow(f.dom(), f.cod(), f.backend());
        return add_arrows(f, z) == f && add_arrows(z, f) == f;
      });

  add_property(
      out, "thm-hom-monoid", "addition of arrows is associative and commutative", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"f", random_arrow(c.backend, a, b, r)}, {"g", random_arrow(c.backend, a, b, r)},
                        {"h", random_arrow(c.backend, a, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2);
        return add_arrows(add_arrows(f, g), h) == add_arrows(f, add_arrows(g, h)) &&
               add_arrows(f, g) == add_arrows(g, f);
      });

  add_property(
      out, "lemma-nabla-delta", "codiagonal after diagonal is id + id", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        const FinObject& a = arg(i, 0).cod();
        const BackendId bk = arg(i, 0).backend();
        Arrow id = identity(a, bk);
        return compose(codiagonal(a, bk), diagonal(a, bk)) == add_arrows(id, id);
      });

  add_property(
      out, "lemma-add-compose", "composition distributes over addition on both sides", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b"), x = any_object(c, r, "c"),
                  d = any_object(c, r, "d");
        return Instance{{"f", random_arrow(c.backend, b, x, r)}, {"g", random_arrow(c.backend, b, x, r)},
                        {"h", random_arrow(c.backend, a, b, r)}, {"k", random_arrow(c.backend, x, d, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2), &k = arg(i, 3);
        return compose(add_arrows(f, g), h) == add_arrows(compose(f, h), compose(g, h)) &&
               compose(k, add_arrows(f, g)) == add_arrows(compose(k, f), compose(k, g));
      });

  add_property(
      out, "lemma-add-adjoint", "the adjoint of a sum is the sum of adjoints", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        return Instance{{"f", random_arrow(c.backend, a, b, r)}, {"g", random_arrow(c.backend, a, b, r)}};
      },
      [](const Instance& i) {
        return adjoint(add_arrows(arg(i, 0), arg(i, 1))) == add_arrows(adjoint(arg(i, 0)), adjoint(arg(i, 1)));
      });

  add_property(
      out, "thm-ucoproduct-character",
      "two orthogonal right-unitary arrows form a coproduct iff their projections sum to the identity",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject x = sized(r, "x", 2, c.max_size);
        Arrow w = random_unitary(c.backend, x, r);
        const std::size_t k = 1 + r.below(x.size() - 1);
        // Dropping a column leaves an orthogonal pair that misses part of x.
        const std::size_t end = r.coin() ? x.size() : x.size() - 1;
        return Instance{{"u", columns(w, 0, k, "a")}, {"v", columns(w, k, std::max(end, k + 1), "b")}};
      },
      [](const Instance& i) {
        const Arrow &u = arg(i, 0), &v = arg(i, 1);
        if (u.cod() != v.cod() || !is_right_unitary(u) || !is_right_unitary(v) ||
            !compose(adjoint(v), u).is_zero())
          return true;
        DirectSum ds = direct_sum(u.dom(), v.dom(), u.backend());
        const bool coproduct = is_unitary(copair(u, v, ds));
        return coproduct == is_ucoproduct(u, v);
      });

  add_property(
      out, "cor-born",
      "a preparation of a direct sum splits into orthogonal projections whose squared norms add up",
      always,
      [](const LawContext& c, Rng& r) {
        DirectSum ds = direct_sum(any_object(c, r, "a"), any_object(c, r, "b"), c.backend);
        Arrow x = r.below(4) == 0 ? compose(ds.inj_left, random_prep(c.backend, ds.left, r))
                                  : random_prep(c.backend, ds.object, r);
        return Instance{{"x", x}};
      },
      [](const Instance& i) {
        const Arrow& x = arg(i, 0);
        auto ds = split_direct_sum(x.cod(), x.backend());
        if (!ds) return true;
        BornDecomposition d = born_decompose(x, *ds);
        Arrow w = compose(adjoint(ds->inj_left), x);
        const bool left_only = compose(ds->inj_left, w) == x;
        return d.holds() && (!left_only || d.z.is_zero()) &&
               d.sqnorm_x == d.sqnorm_y + d.sqnorm_z;
      });

  add_property(
      out, "thm-basis-unitary", "a unitary maps a basis to a basis", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        return Instance{{"v", random_unitary(c.backend, a, r)},
                        {"u", with_cod(random_unitary(c.backend, a, r), make_object("b", a.size()))}};
      },
      [](const Instance& i) {
        const Arrow &v = arg(i, 0), &u = arg(i, 1);
        if (!is_unitary(v) || !is_unitary(u) || v.cod() != u.dom()) return true;
        std::vector<Arrow> basis, image;
        for (std::size_t k = 0; k < v.dom().size(); ++k) {
          basis.push_back(compose(v, point_prep(v.dom(), k, v.backend())));
          image.push_back(compose(u, basis.back()));
        }
        return is_basis(basis) && is_basis(image);
      });

  add_property(
      out, "thm-basis-union", "bases of two objects injected into their direct sum form a basis", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = capped_object(c, r, "a", c.backend == BackendId::Bool ? 3 : 4);
        FinObject b = capped_object(c, r, "b", c.backend == BackendId::Bool ? 3 : 4);
        return Instance{{"u", random_unitary(c.backend, a, r)}, {"v", random_unitary(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &u = arg(i, 0), &v = arg(i, 1);
        if (!is_unitary(u) || !is_unitary(v)) return true;
        const BackendId bk = u.backend();
        DirectSum ds = direct_sum(u.cod(), v.cod(), bk);
        std::vector<Arrow> preps;
        for (std::size_t k = 0; k < u.dom().size(); ++k)
          preps.push_back(compose(ds.inj_left, compose(u, point_prep(u.dom(), k, bk))));
        for (std::size_t k = 0; k < v.dom().size(); ++k)
          preps.push_back(compose(ds.inj_right, compose(v, point_prep(v.dom(), k, bk))));
        return is_basis(preps);
      });

  add_checker(out, "thm-basis-exists",
              "every object has a basis, and a normalized completion of an orthonormal family is one",
              always, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                for (std::size_t t = 0; t < c.trials; ++t) {
                  FinObject a = any_object(c, r, "a");
                  BasisCompletion fresh = complete_basis(a, {}, c.backend);
                  rec.record(fresh.normalized && fresh.complete && is_basis(fresh.preps),
                             {{"a", point_prep(a, 0, c.backend)}}, "no basis from scratch");
                  std::vector<Arrow> basis = rotated_basis(c.backend, a, r);
                  std::vector<Arrow> partial(basis.begin(), basis.begin() + r.below(a.size() + 1));
                  BasisCompletion done = complete_basis(a, partial, c.backend);
                  if (done.normalized && done.complete) {
                    Instance w;
                    for (const auto& p : partial) w.push_back({"p", p});
                    rec.record(is_basis(done.preps), w, "completion is not a basis");
                  }
                }
              });

  add_checker(out, "thm-ortho-coprod",
              "a normalized preparation and its orthogonal complement form a u-coproduct",
              always, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                for (std::size_t t = 0; t < c.trials; ++t) {
                  FinObject x = sized(r, "x", 2, c.max_size);
                  Arrow w = random_unitary(c.backend, x, r);
                  Arrow b = compose(w, point_prep(x, 0, c.backend));
                  std::vector<Arrow> rest;
                  BasisCompletion done = complete_basis(x, std::vector<Arrow>{b}, c.backend);
                  if (done.normalized && done.complete) {
                    rest.assign(done.preps.begin() + 1, done.preps.end());
                  } else {
                    for (std::size_t k = 1; k < x.size(); ++k)
                      rest.push_back(compose(w, point_prep(x, k, c.backend)));
                  }
                  FinObject comp = make_object("k", rest.size());
                  Arrow u = Arrow::from_function(comp, x, c.backend, [&](std::size_t i, std::size_t j) {
                    return rest[i].at(0, j);
                  });
                  std::vector<Scalar> coords;
                  for (std::size_t k = 0; k < x.size(); ++k)
                    coords.push_back(k == 0 ? Scalar::zero(c.backend) : random_scalar(c.backend, r));
                  Arrow a = compose(w, prep_from(x, coords));
                  const bool split = is_ucoproduct(u, b);
                  rec.record(split && compose(u, compose(adjoint(u), a)) == a, {{"b", b}, {"u", u}, {"a", a}});
                }
              });

  add_property(
      out, "thm-distributors",
      "the distributors are unitaries commuting with the injections", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, capped_object(c, r, "a", 3), r)},
                        {"b", random_prep(c.backend, capped_object(c, r, "b", 3), r)},
                        {"c", random_prep(c.backend, capped_object(c, r, "c", 3), r)}};
      },
      [](const Instance& i) {
        const FinObject &a = arg(i, 0).cod(), &b = arg(i, 1).cod(), &x = arg(i, 2).cod();
        const BackendId bk = arg(i, 0).backend();
        Arrow dx = distributor_x(a, b, x, bk), dy = distributor_y(a, b, x, bk);
        DirectSum bc = direct_sum(b, x, bk);
        DirectSum ox = direct_sum(tensor_object(a, b), tensor_object(a, x), bk);
        DirectSum oy = direct_sum(tensor_object(b, a), tensor_object(x, a), bk);
        Arrow id = identity(a, bk);
        return is_unitary(dx) && is_unitary(dy) &&
               compose(dx, ox.inj_left) == tensor_arrows(id, bc.inj_left) &&
               compose(dx, ox.inj_right) == tensor_arrows(id, bc.inj_right) &&
               compose(dy, oy.inj_left) == tensor_arrows(bc.inj_left, id) &&
               compose(dy, oy.inj_right) == tensor_arrows(bc.inj_right, id);
      });
}

}  // namespace qcat::laws
