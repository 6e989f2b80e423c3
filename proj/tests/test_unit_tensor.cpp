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

#include <gtest/gtest.h>

#include "qcat/error.hpp"
#include "qcat/random.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

using namespace qcat;

namespace {

const BackendId R = BackendId::Rat;
const BackendId Q2 = BackendId::QSqrt2;

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::rational(Rational(n, d)); }

TEST(Unit, ScalarProductsAndNorms) {
  FinObject A({"0", "1"});
  Arrow a = prep_from(A, {q(3), q(4)});
  EXPECT_EQ(sqnorm(a), q(25));
  NormalizationResult n = normalize(a);
  EXPECT_EQ(n.factor, q(5));
  EXPECT_TRUE(sqnorm(n.normalized).is_one());
  EXPECT_EQ(compose(n.normalized, scalar_arrow(n.factor)), a);
  EXPECT_THROW(normalize(prep_from(A, {q(1), q(1)})), Error);
  NormalizationResult z = normalize(zero_arrow(unit_object(), A, R));
  EXPECT_TRUE(z.factor.is_zero());
  EXPECT_TRUE(sqnorm(z.normalized).is_one());

  const BackendId G = BackendId::Gauss;
  Arrow b = prep_from(A, {Scalar::gaussian(Rational(1), Rational(0)),
                          Scalar::gaussian(Rational(0), Rational(1))});
  EXPECT_EQ(sqnorm(b), Scalar::from_int(G, 2));
  // 2 = (1+i)⋆(1+i) is a norm over Q(i); 3 is not a sum of two squares.
  EXPECT_TRUE(sqnorm(normalize(b).normalized).is_one());
  FinObject A3({"0", "1", "2"});
  Scalar one = Scalar::one(G);
  EXPECT_THROW(normalize(prep_from(A3, {one, one, one})), Error);
  Arrow c = prep_from(A, {Scalar::quadratic(Rational(1), Rational(0)),
                          Scalar::quadratic(Rational(1), Rational(0))});
  EXPECT_TRUE(sqnorm(normalize(c).normalized).is_one());
}

TEST(Unit, ScalarProductSymmetry) {
  const BackendId G = BackendId::Gauss;
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    FinObject A = random_object(rng, "a", 4);
    Arrow a = random_prep(G, A, rng), b = random_prep(G, A, rng);
    ASSERT_EQ(scalar_product(b, a), s_star(scalar_product(a, b)));
    ASSERT_EQ(s_star(sqnorm(a)), sqnorm(a));
  }
}

TEST(Unit, LiftedScalarsCommute) {
  for (BackendId b : all_backends()) {
    Rng rng(derive_seed(42, backend_name(b)));
    for (int t = 0; t < 30; ++t) {
      FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
      Arrow f = random_arrow(b, A, B, rng);
      Scalar s = random_scalar(b, rng);
      ASSERT_EQ(compose(f, lift_scalar(s, A)), compose(lift_scalar(s, B), f));
    }
  }
}

TEST(Unit, AxiomCheckPassesEverywhere) {
  for (BackendId b : all_backends()) {
    LawResult r = check_unit_axioms(b, 50, 43);
    EXPECT_EQ(r.status, LawStatus::Pass) << backend_name(b) << " " << r.detail;
    EXPECT_GT(r.instances, 0U);
  }
}

TEST(Tensor, KroneckerOracle) {
  FinObject A({"0", "1"}), B({"x", "y", "z"});
  Rng rng(44);
  Arrow f = random_arrow(R, A, A, rng), g = random_arrow(R, B, B, rng);
  Arrow fg = tensor_arrows(f, g);
  FinObject AB = tensor_object(A, B);
  EXPECT_EQ(AB.label(1), "<0,y>");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          ASSERT_EQ(fg.at(i * 3 + j, k * 3 + l), f.at(i, k) * g.at(j, l));
  auto split = split_tensor_object(AB);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->left, A);
  EXPECT_EQ(split->right, B);
  EXPECT_FALSE(split_tensor_object(A).has_value());
}

TEST(Tensor, NestedTensorLabelsSplit) {
  FinObject A({"0", "1"});
  FinObject AA = tensor_object(A, A);
  FinObject AAA = tensor_object(AA, A);
  auto split = split_tensor_object(AAA);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->left, AA);
  EXPECT_EQ(split->right, A);
}

TEST(Tensor, FunctorialityAndAdjoints) {
  for (BackendId b : all_backends()) {
    Rng rng(derive_seed(45, backend_name(b)));
    for (int t = 0; t < 20; ++t) {
      FinObject A = random_object(rng, "a", 3), A1 = random_object(rng, "b", 3),
                A2 = random_object(rng, "c", 2), B = random_object(rng, "d", 3),
                B1 = random_object(rng, "e", 2), B2 = random_object(rng, "f", 2);
      Arrow f1 = random_arrow(b, A2, A1, rng), f = random_arrow(b, A1, A, rng);
      Arrow g1 = random_arrow(b, B2, B1, rng), g = random_arrow(b, B1, B, rng);
      ASSERT_EQ(tensor_arrows(compose(f, f1), compose(g, g1)),
                compose(tensor_arrows(f, g), tensor_arrows(f1, g1)));
      ASSERT_EQ(adjoint(tensor_arrows(f, g)), tensor_arrows(adjoint(f), adjoint(g)));
      ASSERT_EQ(tensor_arrows(identity(A, b), identity(B, b)),
                identity(tensor_object(A, B), b));
    }
  }
}

TEST(Tensor, FactorizationThroughKappa) {
  Rng rng(46);
  FinObject A = make_object("a", 2), B = make_object("b", 3), X = make_object("x", 2);
  BiArrow alpha = BiArrow::from_function(A, B, X, R, [&](std::size_t, std::size_t) {
    return random_prep(R, X, rng);
  });
  Arrow f = factorize(alpha);
  for (int t = 0; t < 30; ++t) {
    Arrow a = random_prep(R, A, rng), b = random_prep(R, B, rng);
    ASSERT_EQ(compose(f, kappa(a, b)), alpha(a, b));
  }
  EXPECT_EQ(factorize(kappa_biarrow(A, B, R)), identity(tensor_object(A, B), R));
}

TEST(Tensor, UnitRelabelings) {
  FinObject A({"p", "q"});
  Arrow l = unit_left_relabel(A, R);
  EXPECT_TRUE(is_unitary(l));
  EXPECT_EQ(l.dom(), tensor_object(unit_object(), A));
  Scalar s = q(3);
  Arrow a = prep_from(A, {q(1), q(-2)});
  EXPECT_EQ(compose(l, kappa(scalar_arrow(s), a)), scale(a, s));
  EXPECT_EQ(compose(unit_right_relabel(A, R), kappa(a, scalar_arrow(s))), scale(a, s));
}

TEST(Tensor, SwapAndAssociator) {
  FinObject A = make_object("a", 2), B = make_object("b", 3), C = make_object("c", 2);
  Arrow sw = swap_unitary(A, B, R);
  EXPECT_TRUE(is_unitary(sw));
  EXPECT_EQ(compose(swap_unitary(B, A, R), sw), identity(tensor_object(A, B), R));
  Arrow as = model_associator(A, B, C, R);
  EXPECT_TRUE(is_unitary(as));
  Rng rng(47);
  Arrow a = random_prep(R, A, rng), b = random_prep(R, B, rng), c = random_prep(R, C, rng);
  EXPECT_EQ(compose(as, kappa(kappa(a, b), c)), kappa(a, kappa(b, c)));
  EXPECT_EQ(compose(sw, kappa(a, b)), kappa(b, a));
}

TEST(Tensor, ScalarProductCompatibility) {
  for (BackendId b : all_backends()) {
    LawResult r = condition2_check(make_object("a", 2), make_object("b", 3), b, 20, 48);
    EXPECT_EQ(r.status, LawStatus::Pass) << backend_name(b);
  }
}

TEST(Tensor, SymmetricAndAntisymmetricSquares) {
  for (std::size_t n = 1; n <= 3; ++n) {
    FinObject A = make_object("a", n);
    SymTensorResult s = s_tensor(A, Q2);
    EXPECT_EQ(s.object.size(), n * (n + 1) / 2);
    EXPECT_TRUE(is_right_unitary(adjoint(s.p)));
    Arrow k = identity(tensor_object(A, A), Q2);
    if (n == 1) {
      EXPECT_THROW(a_tensor(A, Q2), Error);
      EXPECT_EQ(compose(adjoint(s.p), s.p), k);
      continue;
    }
    SymTensorResult a = a_tensor(A, Q2);
    EXPECT_EQ(a.object.size(), n * (n - 1) / 2);
    EXPECT_EQ(add_arrows(compose(adjoint(s.p), s.p), compose(adjoint(a.p), a.p)), k);
  }
  EXPECT_THROW(s_tensor(make_object("a", 2), R), Error);
  EXPECT_EQ(s_tensor(FinObject({"x", "y"}), Q2).object.label(1), "{x,y}");
  EXPECT_EQ(a_tensor(FinObject({"x", "y"}), Q2).object.label(0), "(x<y)");
}

TEST(Tensor, SymmetricMediator) {
  FinObject A = make_object("a", 2), X = make_object("x", 2);
  Rng rng(49);
  // A symmetric bi-arrow: generator(i,j) = generator(j,i).
  std::vector<Arrow> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(random_prep(Q2, X, rng));
  BiArrow alpha = BiArrow::from_function(A, A, X, Q2, [&](std::size_t i, std::size_t j) {
    return gens[i + j];
  });
  SymTensorResult s = s_tensor(A, Q2);
  Arrow x = sym_mediator(alpha, s);
  EXPECT_EQ(post_compose(x, s.sigma), alpha);
}

}  // namespace
