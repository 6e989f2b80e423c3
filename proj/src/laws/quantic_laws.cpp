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
#include "qcat/error.hpp"
#include "qcat/mixed.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

namespace qcat::laws {

namespace {


// lhs = (x ⊗ x) ⊗ w' for some nonzero w'.
bool clone_form(const Arrow& lhs, const Arrow& x) {
  auto parts = factor_product_state(lhs);
  if (!parts || parts->b.is_zero()) return false;
  Arrow xx = kappa(x, x);
  auto t = proportionality(xx, parts->a);
  return t && !t->is_zero() && lhs == kappa(xx, scale(parts->b, *t));
}

std::size_t spectrum_cap(const LawContext& c) {
  const int p = backend(c.backend).caps.characteristic;
  return p > 0 ? std::min<std::size_t>(c.max_size, static_cast<std::size_t>(p - 1)) : c.max_size;
}

Instance superposition_instance(const LawContext& c, Rng& r) {
  FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
  Arrow a1 = random_nonzero_prep(c.backend, a, r), b1 = random_nonzero_prep(c.backend, b, r);
  Arrow a2 = random_prep(c.backend, a, r), b2 = random_prep(c.backend, b, r);
  switch (r.below(3)) {
    case 0: a2 = scale(a1, random_scalar(c.backend, r)); break;
    case 1: b2 = scale(b1, random_scalar(c.backend, r)); break;
    default: break;
  }
  return {{"a1", a1}, {"b1", b1}, {"a2", a2}, {"b2", b2}};
}

}  // namespace

void register_quantic(std::vector<Law>& out) {
  add_checker(out, "qcat-minus-one",
              "there is a self-adjoint scalar 1⁻ with 1 + 1⁻ = 0 distinct from 1",
              needs_additive_inverse, [](const LawContext& c, Rng& r, LawRecorder& rec) {
                const BackendId b = c.backend;
                const Scalar one = Scalar::one(b);
                const Scalar m = s_neg(one);
                rec.record((one + m).is_zero() && !(m == one) && s_star(m) == m,
                           {{"m", scalar_arrow(m)}}, "the additive inverse of 1 coincides with 1");
                for (std::size_t t = 0; t < c.trials && !rec.failed(); ++t) {
                  Arrow f = random_arrow(b, any_object(c, r, "a"), any_object(c, r, "b"), r);
                  rec.record(add_arrows(f, compose(f, lift_scalar(m, f.dom()))).is_zero(), {{"f", f}});
                }
              });

  add_property(
      out, "thm-eigen-orthogonal",
      "eigenvectors of a self-adjoint arrow with different eigenvalues are orthogonal", needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = sized(r, "a", 2, c.max_size);
        auto d = self_adjoint_with_eigenbasis(c.backend, a, r);
        const std::size_t i = r.below(a.size()), j = (i + 1 + r.below(a.size() - 1)) % a.size();
        return Instance{{"f", d.f}, {"x", compose(d.u, point_prep(a, i, c.backend))},
                        {"y", compose(d.u, point_prep(a, j, c.backend))}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &x = arg(i, 1), &y = arg(i, 2);
        if (!is_self_adjoint(f) || x.is_zero() || y.is_zero()) return true;
        auto s = proportionality(x, compose(f, x));
        auto t = proportionality(y, compose(f, y));
        if (!s || !t || *s == *t) return true;
        return scalar_product(x, y).is_zero();
      });

  add_property(
      out, "thm-scalar-field", "the scalars form a field with a self-adjoint 1⁻", needs_quantic,
      [](const LawContext& c, Rng& r) {
        return Instance{{"s", scalar_arrow(random_nonzero_scalar(c.backend, r))},
                        {"t", scalar_arrow(random_nonzero_scalar(c.backend, r))}};
      },
      [](const Instance& i) {
        Scalar s = as_scalar(arg(i, 0)), t = as_scalar(arg(i, 1));
        if (s.is_zero() || t.is_zero()) return true;
        const BackendId b = s.backend();
        Scalar m = minus_one(b);
        return (s * s_inv(s)).is_one() && !(s * t).is_zero() && (Scalar::one(b) + m).is_zero() &&
               s_star(m) == m && !(m == Scalar::one(b));
      });

  add_property(
      out, "thm-global-minus",
      "f⁻ = f o (1⁻)_A is an involution compatible with composition, adjoints, sums, tensors and unitarity",
      needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        Arrow e = r.coin() ? random_unitary(c.backend, a, r) : random_self_adjoint(c.backend, a, r);
        if (r.coin()) e = random_arrow(c.backend, a, a, r);
        return Instance{{"f", random_arrow(c.backend, a, b, r)},
                        {"h", random_arrow(c.backend, a, b, r)},
                        {"g", random_arrow(c.backend, b, any_object(c, r, "c"), r)},
                        {"k", random_arrow(c.backend, any_object(c, r, "p"), any_object(c, r, "q"), r)},
                        {"e", e}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &h = arg(i, 1), &g = arg(i, 2), &k = arg(i, 3), &e = arg(i, 4);
        Arrow fm = negated(f);
        auto fe = unitarity_flags(e), fem = unitarity_flags(negated(e));
        return negated(fm) == f && negated(compose(g, f)) == compose(negated(g), f) &&
               negated(compose(g, f)) == compose(g, fm) && negated(adjoint(f)) == adjoint(fm) &&
               negated(add_arrows(f, h)) == add_arrows(fm, negated(h)) &&
               add_arrows(f, fm).is_zero() && fe.self_adjoint == fem.self_adjoint &&
               fe.right_unitary == fem.right_unitary && fe.unitary == fem.unitary &&
               negated(tensor_arrows(f, k)) == tensor_arrows(fm, k) &&
               negated(tensor_arrows(f, k)) == tensor_arrows(f, negated(k));
      });

  add_property(
      out, "lemma-symmetric-biarrow",
      "a bi-arrow on A,A is symmetric iff its curried form satisfies alpha'(a) o b = alpha'(b) o a",
      needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow f = random_arrow(c.backend, tensor_object(a, a), any_object(c, r, "x"), r);
        if (r.coin()) f = add_arrows(f, compose(f, swap_unitary(a, a, c.backend)));
        return Instance{{"f", f}, {"a", random_prep(c.backend, a, r)}, {"b", random_prep(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &a = arg(i, 1), &b = arg(i, 2);
        auto split = split_tensor_object(f.dom());
        if (!split || split->left != a.cod() || split->right != a.cod()) return true;
        const BackendId bk = f.backend();
        const FinObject& o = a.cod();
        // alpha'(a) = f o (a ⊗ id) after the unit relabeling.
        auto curried = [&](const Arrow& x) {
          return compose(f, compose(tensor_arrows(x, identity(o, bk)), adjoint(unit_left_relabel(o, bk))));
        };
        bool symmetric = true, curried_sym = true;
        for (std::size_t p = 0; p < o.size(); ++p)
          for (std::size_t q = 0; q < o.size(); ++q) {
            Arrow dp = point_prep(o, p, bk), dq = point_prep(o, q, bk);
            symmetric = symmetric && compose(f, kappa(dp, dq)) == compose(f, kappa(dq, dp));
            curried_sym = curried_sym && compose(curried(dp), dq) == compose(curried(dq), dp);
          }
        return symmetric == curried_sym && compose(curried(a), b) == compose(f, kappa(a, b));
      });

  add_property(
      out, "lemma-antisymmetric-biarrow",
      "a bi-arrow on A,A is antisymmetric iff its curried form satisfies alpha'(a) o b = (alpha'(b) o a)⁻",
      needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        Arrow f = random_arrow(c.backend, tensor_object(a, a), any_object(c, r, "x"), r);
        if (r.coin()) f = add_arrows(f, negated(compose(f, swap_unitary(a, a, c.backend))));
        return Instance{{"f", f}, {"a", random_prep(c.backend, a, r)}, {"b", random_prep(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &a = arg(i, 1), &b = arg(i, 2);
        auto split = split_tensor_object(f.dom());
        if (!split || split->left != a.cod() || split->right != a.cod()) return true;
        const BackendId bk = f.backend();
        const FinObject& o = a.cod();
        auto curried = [&](const Arrow& x) {
          return compose(f, compose(tensor_arrows(x, identity(o, bk)), adjoint(unit_left_relabel(o, bk))));
        };
        bool anti = true, curried_anti = true;
        for (std::size_t p = 0; p < o.size(); ++p)
          for (std::size_t q = 0; q < o.size(); ++q) {
            Arrow dp = point_prep(o, p, bk), dq = point_prep(o, q, bk);
            anti = anti && compose(f, kappa(dp, dq)) == negated(compose(f, kappa(dq, dp)));
            curried_anti = curried_anti && compose(curried(dp), dq) == negated(compose(curried(dq), dp));
          }
        return anti == curried_anti && compose(curried(a), b) == compose(f, kappa(a, b));
      });

  add_property(
      out, "thm-tensor-sq-unique",
      "symmetric and antisymmetric squares are unique up to a unitary mediator", needs_sqrt2_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = sized(r, "a", 2, std::min<std::size_t>(c.max_size, 3));
        SymTensorResult sq = r.coin() ? s_tensor(a, c.backend) : a_tensor(a, c.backend);
        FinObject x = make_object("x", sq.object.size());
        return Instance{{"u", with_cod(random_unitary(c.backend, sq.object, r), x)},
                        {"a", random_prep(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &u = arg(i, 0), &a = arg(i, 1);
        const BackendId bk = u.backend();
        if (!is_unitary(u) || a.cod().size() < 2) return true;
        SymTensorResult s = s_tensor(a.cod(), bk), t = a_tensor(a.cod(), bk);
        const SymTensorResult& sq = u.dom() == s.object ? s : t;
        if (u.dom() != sq.object) return true;
        BiArrow lambda = post_compose(u, sq.sigma);
        Arrow m = sym_mediator(lambda, sq);
        return m == u && is_unitary(m) && compose(m, sq.sigma(a, a)) == lambda(a, a);
      });

  add_property(
      out, "thm-sym-decomposition",
      "kappa on A,A splits as p⋆ o sigma + q⋆ o tau with p⋆, q⋆ a u-coproduct", needs_sqrt2_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a");
        return Instance{{"a", random_prep(c.backend, a, r)}, {"b", random_prep(c.backend, a, r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1);
        const BackendId bk = a.backend();
        const FinObject& o = a.cod();
        SymTensorResult s = s_tensor(o, bk);
        Arrow ps = adjoint(s.p);
        Arrow id = identity(tensor_object(o, o), bk);
        if (o.size() == 1) {
          return is_unitary(ps) && compose(ps, s.sigma(a, b)) == kappa(a, b);
        }
        SymTensorResult t = a_tensor(o, bk);
        Arrow qs = adjoint(t.p);
        BiArrow split = add_biarrows(post_compose(ps, s.sigma), post_compose(qs, t.sigma));
        return split == kappa_biarrow(o, o, bk) && split(a, b) == kappa(a, b) &&
               is_right_unitary(ps) && is_right_unitary(qs) && compose(adjoint(qs), ps).is_zero() &&
               add_arrows(compose(ps, s.p), compose(qs, t.p)) == id;
      });

  add_property(
      out, "lemma-zero-tensor-iff", "f x g = 0 iff f = 0 or g = 0", needs_quantic,
      [](const LawContext& c, Rng& r) {
        return Instance{{"f", sparse_arrow(c.backend, any_object(c, r, "a"), any_object(c, r, "b"), r)},
                        {"g", sparse_arrow(c.backend, any_object(c, r, "p"), any_object(c, r, "q"), r)}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1);
        return tensor_arrows(f, g).is_zero() == (f.is_zero() || g.is_zero());
      });

  add_property(
      out, "lemma-tensor-eq-prep",
      "equal nonzero kappa images have factors related by a nonzero scalar and its inverse", needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        Arrow x = random_nonzero_prep(c.backend, a, r), y = random_nonzero_prep(c.backend, b, r);
        Scalar s = random_nonzero_scalar(c.backend, r);
        const bool related = r.below(4) != 0;
        return Instance{{"a", x}, {"b", y},
                        {"a2", related ? scale(x, s) : random_prep(c.backend, a, r)},
                        {"b2", related ? scale(y, s_inv(s)) : random_prep(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1), &a2 = arg(i, 2), &b2 = arg(i, 3);
        if (a.is_zero() || b.is_zero() || kappa(a, b).is_zero()) return true;
        if (!(kappa(a2, b2) == kappa(a, b))) return true;
        auto s = proportionality(a, a2);
        return s && !s->is_zero() && b == scale(b2, *s);
      });

  add_property(
      out, "thm-tensor-eq",
      "f' x g' = f x g != 0 iff f' = f o s and g = g' o s for a nonzero scalar s", needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = any_object(c, r, "a"), b = any_object(c, r, "b");
        FinObject p = any_object(c, r, "p"), q = any_object(c, r, "q");
        Arrow f = random_arrow(c.backend, a, b, r), g = random_arrow(c.backend, p, q, r);
        Scalar s = random_nonzero_scalar(c.backend, r);
        Arrow f2 = scale(f, s), g2 = scale(g, s_inv(s));
        switch (r.below(4)) {
          case 0: f2 = perturb(f2, r); break;
          case 1: f2 = random_arrow(c.backend, a, b, r); g2 = random_arrow(c.backend, p, q, r); break;
          default: break;
        }
        return Instance{{"f", f}, {"g", g}, {"f2", f2}, {"g2", g2}};
      },
      [](const Instance& i) {
        const Arrow &f = arg(i, 0), &g = arg(i, 1), &f2 = arg(i, 2), &g2 = arg(i, 3);
        if (tensor_arrows(f, g).is_zero() || f.dom() != f2.dom() || f.cod() != f2.cod() ||
            g.dom() != g2.dom() || g.cod() != g2.cod())
          return true;
        const bool equal = tensor_arrows(f2, g2) == tensor_arrows(f, g);
        auto s = proportionality(f, f2);
        const bool related = s && !s->is_zero() && g == scale(g2, *s);
        return equal == related;
      });

  add_property(
      out, "thm-superposition",
      "a sum of two product preparations is a product only when one pair of factors is proportional",
      needs_quantic, superposition_instance,
      [](const Instance& i) {
        const Arrow &a1 = arg(i, 0), &b1 = arg(i, 1), &a2 = arg(i, 2), &b2 = arg(i, 3);
        if (a1.cod() != a2.cod() || b1.cod() != b2.cod() || kappa(a1, b1).is_zero()) return true;
        Arrow sum = add_arrows(kappa(a1, b1), kappa(a2, b2));
        SuperpositionCase d = superposition_decide(a1, b1, a2, b2);
        auto parts = factor_product_state(sum);
        if (d.product != parts.has_value()) return false;
        if (!parts) return true;
        auto s = proportionality(a1, a2);
        auto t = proportionality(b1, b2);
        const bool left = s && sum == kappa(a1, add_arrows(b1, scale(b2, *s)));
        const bool right = t && sum == kappa(add_arrows(a1, scale(a2, *t)), b1);
        return (left || right) && d.branch != 0;
      });

  add_property(
      out, "thm-clone-recap",
      "(a x a) x w1 + (b x b) x w2 being a nonzero product forces b to be a multiple of a", needs_quantic,
      [](const LawContext& c, Rng& r) {
        FinObject a = capped_object(c, r, "a", 3), w = capped_object(c, r, "w", 2);
        Arrow x = random_nonzero_prep(c.backend, a, r);
        Arrow y = r.coin() ? scale(x, random_scalar(c.backend, r)) : random_prep(c.backend, a, r);
        return Instance{{"a", x}, {"b", y}, {"w1", random_nonzero_prep(c.backend, w, r)},
                        {"w2", random_nonzero_prep(c.backend, w, r)}};
      },
      [](const Instance& i) {
        const Arrow &a = arg(i, 0), &b = arg(i, 1), &w1 = arg(i, 2), &w2 = arg(i, 3);
        if (a.is_zero() || w1.is_zero() || w2.is_zero()) return true;
        Arrow sum = add_arrows(kappa(kappa(a, a), w1), kappa(kappa(b, b), w2));
        auto outer = factor_product_state(sum);
        if (!outer || outer->a.is_zero() || outer->b.is_zero()) return true;
        auto inner = factor_product_state(outer->a);
        if (!inner || inner->a.is_zero() || inner->b.is_zero()) return true;
        return proportionality(a, b).has_value();
      });

  add_checker(out, "thm-nocloning", "an object can be cloned iff it is a unit object", needs_quantic,
              [](const LawContext& c, Rng& r, LawRecorder& rec) {
                const BackendId b = c.backend;
                Cloner cl = build_cloner(unit_object(), b);
                CloneWitness ok = verify_cloner(cl.a, cl.c, cl.w);
                rec.record(ok.ok(), {{"c", cl.c}, {"w", cl.w}}, "unit object cloner rejected");
                for (std::size_t t = 0; t < c.trials / 2; ++t) {
                  Arrow x = scalar_arrow(random_nonzero_scalar(b, r));
                  Arrow lhs = compose(cl.c, kappa(x, cl.w));
                  rec.record(lhs == kappa(kappa(x, x), cloner_ancilla(cl, x)) && clone_form(lhs, x),
                             {{"a", x}}, "unit object cloning equation");
                }
                for (std::size_t t = 0; t < c.trials / 2; ++t) {
                  FinObject a = sized(r, "a", 2, std::min<std::size_t>(c.max_size, 3));
                  FinObject wo = capped_object(c, r, "w", 2);
                  FinObject dom = tensor_object(a, wo), cod = tensor_object(tensor_object(a, a), wo);
                  Arrow cand = t % 4 == 0 ? copy_candidate(a, wo, b) : random_arrow(b, dom, cod, r);
                  Arrow w = random_nonzero_prep(b, wo, r);
                  CloneWitness found = verify_cloner(a, cand, w);
                  bool valid = !found.ok() && found.a && found.lhs && found.rhs &&
                               compose(cand, kappa(*found.a, w)) == *found.lhs &&
                               !(*found.lhs == *found.rhs) && !clone_form(*found.lhs, *found.a);
                  rec.record(valid, {{"c", cand}, {"w", w}}, "candidate cloner not refuted");
                }
              });

  add_property(
      out, "thm-xy-adjoint", "x_c and y_c are adjoint as generalized arrows", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = capped_object(c, r, "a", 3), b = capped_object(c, r, "b", 3);
        return Instance{{"c", random_prep(c.backend, tensor_object(a, b), r)},
                        {"a", random_prep(c.backend, a, r)}, {"b", random_prep(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &x = arg(i, 0), &a = arg(i, 1), &b = arg(i, 2);
        auto split = split_tensor_object(x.cod());
        if (!split || split->left != a.cod() || split->right != b.cod()) return true;
        return scalar_product(b, x_c(x, a)) == scalar_product(a, y_c(x, b)) &&
               scalar_product(kappa(a, b), x) == scalar_product(b, x_c(x, a));
      });

  add_property(
      out, "cor-partial-trace",
      "partial traces are self-adjoint and their diagonal values are squared norms", always,
      [](const LawContext& c, Rng& r) {
        FinObject a = capped_object(c, r, "a", 3), b = capped_object(c, r, "b", 3);
        return Instance{{"c", random_prep(c.backend, tensor_object(a, b), r)},
                        {"a", random_prep(c.backend, a, r)}, {"a2", random_prep(c.backend, a, r)},
                        {"b", random_prep(c.backend, b, r)}, {"b2", random_prep(c.backend, b, r)}};
      },
      [](const Instance& i) {
        const Arrow &x = arg(i, 0), &a = arg(i, 1), &a2 = arg(i, 2), &b = arg(i, 3), &b2 = arg(i, 4);
        auto split = split_tensor_object(x.cod());
        if (!split || split->left != a.cod() || split->right != b.cod()) return true;
        Gqo da = partial_trace_A(x), db = partial_trace_B(x);
        return scalar_product(a2, apply(da, a)) == scalar_product(apply(da, a2), a) &&
               scalar_product(a, apply(da, a)) == sqnorm(x_c(x, a)) &&
               scalar_product(b2, apply(db, b)) == scalar_product(apply(db, b2), b) &&
               scalar_product(b, apply(db, b)) == sqnorm(y_c(x, b)) && !da.antilinear && !db.antilinear;
      });

  add_property(
      out, "thm-equal-spectrum", "the two partial traces have the same nonzero spectrum", needs_quantic,
      [](const LawContext& c, Rng& r) {
        const std::size_t cap = spectrum_cap(c);
        FinObject a = capped_object(c, r, "a", cap), b = capped_object(c, r, "b", cap);
        Arrow x = random_prep(c.backend, tensor_object(a, b), r);
        if (r.below(3) == 0) x = kappa(random_prep(c.backend, a, r), random_prep(c.backend, b, r));
        return Instance{{"c", x}};
      },
      [](const Instance& i) { return spectra_match(arg(i, 0)); });
}

}  // namespace qcat::laws
