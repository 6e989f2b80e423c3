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

FinObject relabeled(const FinObject& a, std::string_view prefix) {
  return make_object(prefix, a.size());
}

BiArrow table_biarrow(const Arrow& f) {
  auto [a, b] = require_tensor_object(f.dom());
  return BiArrow::from_function(a, b, f.cod(), f.backend(), [&](std::size_t i, std::size_t j) {
    return compose(f, kappa(point_prep(a, i, f.backend()), point_prep(b, j, f.backend())));
  });
}

Arrow tensor_domain_arrow(const LawContext& c, Rng& r, std::size_t cap) {
  FinObject a = capped_object(c, r, "a", cap), b = capped_object(c, r, "b", cap);
  return random_arrow(c.backend, tensor_object(a, b), any_object(c, r, "x"), r);
}

}  // namespace

void register_tensor(std::vector<Law>& out) {
  add_property(
      out, "tensor-universal",
      "every bi-arrow factors through kappa by a unique arrow", always,
      [](const LawContext& c, Rng& r) {
        Arrow f = tensor_domain_arrow(c, r, 4);
        auto [a, b] = require_tensor_object(f.dom());
        return Instance{{"f", f}, {"a", random_prep(c.backend, a, r)},
                        {"b", random_prep(c.backend, b, r)}, {"g", perturb(f, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &a = arg(i, 1), &b = arg(i, 2), &g = arg(i, 3);
        auto split = split_tensor_object(f.dom());
        if (!split || split->left != a.cod() || split->right != b.cod() || f == g) return true;
        BiArrow alpha = table_biarrow(f);
        Arrow m = factorize(alpha);
        // A different arrow misses some generator.
        bool differs = false;
        for (std::size_t p = 0; p < a.cod().size() && !differs; ++p)
          for (std::size_t q = 0; q < b.cod().size() && !differs; ++q)
            differs = !(compose(g, kappa(point_prep(a.cod(), p, f.backend()),
                                         point_prep(b.cod(), q, f.backend()))) ==
                        alpha.generator(p, q));
        return m == f && compose(m, kappa(a, b)) == alpha(a, b) && differs;
      });

  add_property(
      out, "lemma-biarrow-post", "an arrow after a bi-arrow is a bi-arrow", always,
      [](const LawContext& c, Rng& r) {
        Arrow f = tensor_domain_arrow(c, r, 4);
        auto [a, b] = require_tensor_object(f.dom());
        return Instance{{"f", f}, {"h", random_arrow(c.backend, f.cod(), any_object(c, r, "d"), r)},
                        {"a", random_prep(c.backend, a, r)}, {"b", random_prep(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &h = arg(i, 1), &a = arg(i, 2), &b = arg(i, 3);
        auto split = split_tensor_object(f.dom());
        if (!split || split->left != a.cod() || split->right != b.cod()) return true;
        BiArrow alpha = table_biarrow(f);
        BiArrow beta = post_compose(h, alpha);
        return beta(a, b) == compose(h, alpha(a, b));
      });

  add_property(
      out, "lemma-biarrow-pre", "a bi-arrow precomposed in each slot is a bi-arrow", always,
      [](const LawContext& c, Rng& r) {
        Arrow f = tensor_domain_arrow(c, r, 4);
        auto [a, b] = require_tensor_object(f.dom());
        FinObject a2 = any_object(c, r, "p"), b2 = any_object(c, r, "q");
        return Instance{{"f", f}, {"g", random_arrow(c.backend, a2, a, r)},
                        {"h", random_arrow(c.backend, b2, b, r)},
                        {"x", random_prep(c.backend, a2, r)}, {"y", random_prep(c.backend, b2, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &h = arg(i, 2), &x = arg(i, 3), &y = arg(i, 4);
        auto split = split_tensor_object(f.dom());
        if (!split || split->left != g.cod() || split->right != h.cod()) return true;
        BiArrow alpha = table_biarrow(f);
        const BackendId bk = f.backend();
        BiArrow beta = BiArrow::from_function(g.dom(), h.dom(), f.cod(), bk, [&](std::size_t p, std::size_t q) {
          return alpha(compose(g, point_prep(g.dom(), p, bk)), compose(h, point_prep(h.dom(), q, bk)));
        });
        return beta(x, y) == alpha(compose(g, x), compose(h, y));
      });

  add_checker(out, "tensor-cond2", "kappa preserves scalar products factorwise", always,
              [](const LawContext& c, Rng& r, LawRecorder& rec) {
                const std::size_t rounds = std::max<std::size_t>(1, c.trials / 20);
                for (std::size_t t = 0; t < rounds; ++t) {
                  rec.merge(condition2_check(any_object(c, r, "a"), any_object(c, r, "b"),
                                             c.backend, 20, r.next()));
                }
              });

  add_property(
      out, "lemma-tensor-mixed-product", "(f o f') x (g o g') = (f x g) o (f' x g')", always,
      [](const LawContext& c, Rng& r) {
        FinObject a0 = capped_object(c, r, "a", 3), a1 = capped_object(c, r, "b", 3),
                  a2 = capped_object(c, r, "c", 3);
        FinObject b0 = capped_object(c, r, "p", 3), b1 = capped_object(c, r, "q", 3),
                  b2 = capped_object(c, r, "r", 3);
        return Instance{{"f1", random_arrow(c.backend, a0, a1, r)},
                        {"f", random_arrow(c.backend, a1, a2, r)},
                        {"g1", random_arrow(c.backend, b0, b1, r)},
                        {"g", random_arrow(c.backend, b1, b2, r)}};
      },
      [](const Instance& i) {
        const Arrow &f1 = arg(i, 0), &f = arg(i, 1), &g1 = arg(i, 2), &g = arg(i, 3);
        return tensor_arrows(compose(f, f1), compose(g, g1)) ==
               compose(tensor_arrows(f, g), tensor_arrows(f1, g1));
      });

  add_property(
      out, "cor-tensor-functor",
      "tensoring with an identity is a functor and identities tensor to identities", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b"), x = any_object(c, r, "c");
        return Instance{{"f", random_arrow(c.backend, a, b, r)},
                        {"g", random_arrow(c.backend, b, x, r)},
                        {"x", random_prep(c.backend, any_object(c, r, "x"), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        const BackendId bk = f.backend();
        Arrow idx = identity(arg(i, 2).cod(), bk);
        return tensor_arrows(compose(g, f), idx) == compose(tensor_arrows(g, idx), tensor_arrows(f, idx)) &&
               tensor_arrows(idx, compose(g, f)) == compose(tensor_arrows(idx, g), tensor_arrows(idx, f)) &&
               tensor_arrows(identity(f.dom(), bk), idx) == identity(tensor_object(f.dom(), idx.dom()), bk);
      });

  add_property(
      out, "lemma-dense",
      "arrows out of a tensor object agreeing on all kappa images are equal", always,
      [](const LawContext& c, Rng& r) {
        Arrow f = tensor_domain_arrow(c, r, 4);
        return Instance{{"f", f}, {"g", r.coin() ? f : perturb(f, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        auto split = split_tensor_object(f.dom());
        if (!split) return true;
        return (table_biarrow(f) == table_biarrow(g)) == (f == g);
      });

  add_property(
      out, "lemma-tensor-adjoint", "(f x g)⋆ = f⋆ x g⋆", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)},
                        {"g", random_arrow(c.backend, any_object(c, r, "p"), any_object(c, r, "q"), r)}};
      },
      [](const Instance& i) {
        return adjoint(tensor_arrows(arg(i, 0), arg(i, 1))) ==
               tensor_arrows(adjoint(arg(i, 0)), adjoint(arg(i, 1)));
      });

  add_property(
      out, "thm-tensor-unique",
      "a bi-arrow u o kappa satisfies the scalar product condition iff u is unitary, and then factors through u",
      always,
      [](const LawContext& c, Rng& r) {
        FinObject ab = tensor_object(any_object(c, r, "a"), any_object(c, r, "b"));
        FinObject x = relabeled(ab, "x");
        Arrow u = r.coin() ? with_cod(random_unitary(c.backend, ab, r), x)
                           : random_arrow(c.backend, ab, x, r);
        return Instance{{"u", u}};
      },
      [](const Instance& i) {
        const Arrow& u = arg(i, 0);
        auto split = split_tensor_object(u.dom());
        if (!split) return true;
        const BackendId bk = u.backend();
        BiArrow lambda = post_compose(u, kappa_biarrow(split->left, split->right, bk));
        bool cond2 = true;
        const std::size_t na = split->left.size(), nb = split->right.size();
        for (std::size_t k = 0; k < na * nb && cond2; ++k)
          for (std::size_t l = 0; l < na * nb && cond2; ++l) {
            Scalar ip = scalar_product(lambda.generator(k / nb, k % nb), lambda.generator(l / nb, l % nb));
            cond2 = ip == (k == l ? Scalar::one(bk) : Scalar::zero(bk));
          }
        const bool square = u.dom().size() == u.cod().size();
        return factorize(lambda) == u && (cond2 == is_right_unitary(u)) &&
               (!square || cond2 == is_unitary(u));
      });

  add_property(
      out, "lemma-unit-tensor",
      "the unit tensored with an object relabels to the object by a unitary", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        const Arrow &s = arg(i, 0), &a = arg(i, 1);
        const BackendId bk = a.backend();
        Arrow left = unit_left_relabel(a.cod(), bk), right = unit_right_relabel(a.cod(), bk);
        Arrow as = scale(a, as_scalar(s));
        return is_unitary(left) && is_unitary(right) && compose(left, kappa(s, a)) == as &&
               compose(right, kappa(a, s)) == as;
      });

  add_property(
      out, "lemma-kappa-tensor",
      "kappa(a,b) is a x b after the unit relabeling, and a x id or id x b applied to the other factor",
      always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)},
                        {"b", random_prep(c.backend, any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1);
        const BackendId bk = a.backend();
        const FinObject u = unit_object();
        Arrow k = kappa(a, b);
        Arrow via_tensor = compose(tensor_arrows(a, b), adjoint(unit_left_relabel(u, bk)));
        Arrow first = compose(tensor_arrows(a, identity(b.cod(), bk)),
                              compose(adjoint(unit_left_relabel(b.cod(), bk)), b));
        Arrow second = compose(tensor_arrows(identity(a.cod(), bk), b),
                               compose(adjoint(unit_right_relabel(a.cod(), bk)), a));
        return via_tensor == k && first == k && second == k;
      });

  add_property(
      out, "lemma-scalar-tensor", "a o s equals s x a and a x s up to unit relabeling", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        const Arrow &s = arg(i, 0), &a = arg(i, 1);
        const BackendId bk = a.backend();
        Arrow in = adjoint(unit_left_relabel(unit_object(), bk));
        Arrow as = scale(a, as_scalar(s));
        return compose(unit_left_relabel(a.cod(), bk), compose(tensor_arrows(s, a), in)) == as &&
               compose(unit_right_relabel(a.cod(), bk), compose(tensor_arrows(a, s), in)) == as;
      });

  add_property(
      out, "cor-scalar-tensor", "the tensor of two scalars is their composite", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"t", scalar_arrow(random_scalar(c.backend, r))}};
      },
      [](const Instance& i) {
        const Arrow &s = arg(i, 0), &t = arg(i, 1);
        Arrow l = unit_left_relabel(unit_object(), s.backend());
        return compose(l, compose(tensor_arrows(s, t), adjoint(l))) == compose(t, s);
      });

  add_property(
      out, "cor-lift-tensor", "a lifted scalar is the identity tensored with the scalar", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_scalar(c.backend, r))},
                        {"a", random_prep(c.backend, any_object(c, r, "a"), r)}};
      },
      [](const Instance& i) {
        const Arrow& s = arg(i, 0);
        const FinObject& a = arg(i, 1).cod();
        const BackendId bk = s.backend();
        Arrow id = identity(a, bk);
        Arrow r = unit_right_relabel(a, bk), l = unit_left_relabel(a, bk);
        Arrow lifted = lift_scalar(as_scalar(s), a);
        return compose(r, compose(tensor_arrows(id, s), adjoint(r))) == lifted &&
               compose(l, compose(tensor_arrows(s, id), adjoint(l))) == lifted;
      });

  add_property(
      out, "lemma-tensor-swap", "kappa with its arguments swapped is a tensor product via the swap unitary",
      always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, any_object(c, r, "a"), r)},
                        {"b", random_prep(c.backend, any_object(c, r, "b"), r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1);
        const BackendId bk = a.backend();
        const FinObject &x = a.cod(), &y = b.cod();
        BiArrow lambda = BiArrow::from_function(y, x, tensor_object(x, y), bk, [&](std::size_t p, std::size_t q) {
          return kappa(point_prep(x, q, bk), point_prep(y, p, bk));
        });
        Arrow sw = swap_unitary(y, x, bk);
        return factorize(lambda) == sw && is_unitary(sw) && compose(sw, kappa(b, a)) == kappa(a, b);
      });

  add_property(
      out, "lemma-zero-tensor", "tensoring with a zero arrow gives zero", always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", random_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)},
                        {"x", random_prep(c.backend, any_object(c, r, "c"), r)},
                        {"y", random_prep(c.backend, any_object(c, r, "d"), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0);
        Arrow z = zero_arrow(arg(i, 1).cod(), arg(i, 2).cod(), f.backend());
        return tensor_arrows(f, z).is_zero() && tensor_arrows(z, f).is_zero();
      });

  add_property(
      out, "model-associator",
      "the associator is a unitary relabeling natural in preparations and satisfying the pentagon",
      always,
      [](const LawContext& c, Rng& r) {
        return Instance{{"a", random_prep(c.backend, capped_object(c, r, "a", 2), r)},
                        {"b", random_prep(c.backend, capped_object(c, r, "b", 2), r)},
                        {"c", random_prep(c.backend, capped_object(c, r, "c", 2), r)},
                        {"d", random_prep(c.backend, capped_object(c, r, "d", 2), r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1), &x = arg(i, 2), &d = arg(i, 3);
        const BackendId bk = a.backend();
        const FinObject &A = a.cod(), &B = b.cod(), &C = x.cod(), &D = d.cod();
        Arrow al = model_associator(A, B, C, bk);
        if (!is_unitary(al) || !(compose(al, kappa(kappa(a, b), x)) == kappa(a, kappa(b, x))))
          return false;
        Arrow route1 = compose(model_associator(A, B, tensor_object(C, D), bk),
                               model_associator(tensor_object(A, B), C, D, bk));
        Arrow route2 = compose(tensor_arrows(identity(A, bk), model_associator(B, C, D, bk)),
                               compose(model_associator(A, tensor_object(B, C), D, bk),
                                       tensor_arrows(al, identity(D, bk))));
        return route1 == route2;
      });

  add_property(
      out, "model-product-basis", "kappa images of two bases form a basis of the tensor object", always,
      [](const LawContext& c, Rng& r) {
        const std::size_t cap = c.backend == BackendId::Bool ? 3 : 4;
        FinObject a = capped_object(c, r, "a", cap), b = capped_object(c, r, "b", cap);
        return Instance{{"u", random_unitary(c.backend, a, r)}, {"v", random_unitary(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &u = arg(i, 0), &v = arg(i, 1);
        if (!is_unitary(u) || !is_unitary(v)) return true;
        const BackendId bk = u.backend();
        std::vector<Arrow> preps;
        for (std::size_t p = 0; p < u.dom().size(); ++p)
          for (std::size_t q = 0; q < v.dom().size(); ++q)
            preps.push_back(kappa(compose(u, point_prep(u.dom(), p, bk)),
                                  compose(v, point_prep(v.dom(), q, bk))));
        return is_basis(preps);
      });

  add_checker(out, "thm-tensor-dist", "tensor distributes over addition of preparations and arrows",
              always, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                rec.merge(tensor_distributes_over_add(c.backend, c.trials, r.next(),
                                                      std::min<std::size_t>(c.max_size, 3)));
              });
}

}  // namespace qcat::laws
