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

#include "qcat/biproduct.hpp"
#include "qcat/error.hpp"
#include "qcat/random.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

using namespace qcat;

namespace {

const BackendId R = BackendId::Rat;

TEST(Biproduct, InjectionsFormUCoproduct) {
  for (BackendId b : all_backends()) {
    Rng rng(derive_seed(51, backend_name(b)));
    for (int t = 0; t < 10; ++t) {
      FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
      DirectSum ds = direct_sum(A, B, b);
      ASSERT_EQ(ds.object.size(), A.size() + B.size());
      ASSERT_TRUE(is_right_unitary(ds.inj_left));
      ASSERT_TRUE(is_right_unitary(ds.inj_right));
      ASSERT_TRUE(compose(adjoint(ds.inj_right), ds.inj_left).is_zero());
      ASSERT_EQ(add_arrows(compose(ds.inj_left, adjoint(ds.inj_left)),
                           compose(ds.inj_right, adjoint(ds.inj_right))),
                identity(ds.object, b));
      auto back = split_direct_sum(ds.object, b);
      ASSERT_TRUE(back.has_value());
      ASSERT_EQ(back->left, A);
      ASSERT_EQ(back->right, B);
    }
  }
  DirectSum one = direct_sum(FinObject({"x"}), FinObject({"y"}), R);
  EXPECT_EQ(one.object.label(0), "L:x");
  EXPECT_EQ(one.inj_left.entries()[0], Scalar::one(R));
  EXPECT_TRUE(one.inj_left.entries()[1].is_zero());
  EXPECT_TRUE(one.inj_right.entries()[1].is_one());
}

TEST(Biproduct, CopairPairAndBlocks) {
  Rng rng(52);
  FinObject A = make_object("a", 2), B = make_object("b", 3), X = make_object("x", 2);
  DirectSum ds = direct_sum(A, B, R);
  Arrow f = random_arrow(R, A, X, rng), g = random_arrow(R, B, X, rng);
  Arrow fg = copair(f, g, ds);
  EXPECT_EQ(compose(fg, ds.inj_left), f);
  EXPECT_EQ(compose(fg, ds.inj_right), g);
  EXPECT_EQ(copair(f, zero_arrow(B, X, R), ds), compose(f, adjoint(ds.inj_left)));
  Arrow p = pair(adjoint(f), adjoint(g), ds);
  EXPECT_EQ(adjoint(p), fg);
  EXPECT_EQ(compose(adjoint(ds.inj_left), p), adjoint(f));

  Arrow a = random_arrow(R, A, A, rng), ab = random_arrow(R, A, B, rng),
        ba = random_arrow(R, B, A, rng), bb = random_arrow(R, B, B, rng);
  Arrow x = block_matrix(a, ab, ba, bb, ds);
  const Arrow &u = ds.inj_left, &v = ds.inj_right;
  EXPECT_EQ(compose(adjoint(u), compose(x, u)), a);
  EXPECT_EQ(compose(adjoint(v), compose(x, u)), ab);
  EXPECT_EQ(compose(adjoint(u), compose(x, v)), ba);
  EXPECT_EQ(compose(adjoint(v), compose(x, v)), bb);
  EXPECT_EQ(block_matrix(identity(A, R), zero_arrow(A, B, R), zero_arrow(B, A, R),
                         identity(B, R), ds),
            identity(ds.object, R));
  EXPECT_EQ(block_matrix(a, zero_arrow(A, B, R), zero_arrow(B, A, R), bb, ds),
            direct_sum_arrows(a, bb));
  EXPECT_THROW(copair(f, f, ds), Error);
}

TEST(Biproduct, DiagonalAndAddition) {
  for (BackendId b : all_backends()) {
    Rng rng(derive_seed(53, backend_name(b)));
    for (int t = 0; t < 30; ++t) {
      FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
      Arrow f = random_arrow(b, A, B, rng), g = random_arrow(b, A, B, rng);
      ASSERT_EQ(hom_add_via_biproduct(f, g), add_arrows(f, g));
      ASSERT_EQ(adjoint(diagonal(A, b)), codiagonal(A, b));
      ASSERT_EQ(compose(direct_sum_arrows(f, f), diagonal(A, b)), compose(diagonal(B, b), f));
      ASSERT_EQ(compose(codiagonal(B, b), direct_sum_arrows(f, f)),
                compose(f, codiagonal(A, b)));
    }
    FinObject A = make_object("a", 2);
    EXPECT_EQ(compose(codiagonal(A, b), diagonal(A, b)),
              add_arrows(identity(A, b), identity(A, b)));
  }
  FinObject one({"x"});
  Arrow d = diagonal(one, R);
  EXPECT_EQ(d.rows(), 1U);
  EXPECT_TRUE(d.at(0, 0).is_one() && d.at(0, 1).is_one());
}

TEST(Biproduct, BornRule) {
  const BackendId G = BackendId::Gauss;
  FinObject one({"0"});
  DirectSum ds = direct_sum(one, one, G);
  Arrow x = prep_from(ds.object, {Scalar::one(G), Scalar::gaussian(Rational(0), Rational(1))});
  BornDecomposition d = born_decompose(x, ds);
  EXPECT_TRUE(d.holds());
  EXPECT_TRUE(d.sqnorm_y.is_one());
  EXPECT_TRUE(d.sqnorm_z.is_one());
  EXPECT_EQ(d.sqnorm_x, Scalar::from_int(G, 2));

  Rng rng(54);
  for (BackendId b : all_backends()) {
    for (int t = 0; t < 30; ++t) {
      FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
      DirectSum s = direct_sum(A, B, b);
      Arrow w = random_prep(b, A, rng);
      BornDecomposition left = born_decompose(compose(s.inj_left, w), s);
      ASSERT_TRUE(left.z.is_zero());
      ASSERT_EQ(compose(adjoint(s.inj_left), compose(s.inj_left, w)), w);
      BornDecomposition r = born_decompose(random_prep(b, s.object, rng), s);
      ASSERT_TRUE(r.holds()) << backend_name(b);
    }
  }
}

TEST(Biproduct, Bases) {
  const BackendId Q2 = BackendId::QSqrt2;
  FinObject A = make_object("a", 3);
  std::vector<Arrow> deltas;
  for (std::size_t i = 0; i < 3; ++i) deltas.push_back(point_prep(A, i, Q2));
  EXPECT_TRUE(is_basis(deltas));
  EXPECT_FALSE(is_basis(std::span(deltas).first(2)));
  Rng rng(55);
  Arrow u = random_unitary(Q2, A, rng);
  std::vector<Arrow> rotated;
  for (const auto& d : deltas) rotated.push_back(compose(u, d));
  EXPECT_TRUE(is_basis(rotated));

  // Completion from a single tilted vector over Q(sqrt2).
  Scalar h = Scalar::quadratic(Rational(0), Rational(1, 2));
  Arrow tilt = prep_from(A, {h, h, Scalar::zero(Q2)});
  BasisCompletion c = complete_basis(A, std::span(&tilt, 1), Q2);
  EXPECT_TRUE(c.normalized);
  EXPECT_TRUE(c.complete);
  EXPECT_TRUE(is_basis(c.preps));

  // Over Q the orthogonal complement of (1,1) is not normalizable.
  Arrow ones = prep_from(make_object("b", 2), {Scalar::one(R), Scalar::one(R)});
  BasisCompletion r = complete_basis(ones.cod(), std::span(&ones, 1), R);
  EXPECT_FALSE(r.normalized);
  EXPECT_TRUE(r.complete);

  // Over Bool the relations model is checked exhaustively.
  const BackendId B = BackendId::Bool;
  FinObject two = make_object("c", 2);
  std::vector<Arrow> bd = {point_prep(two, 0, B), point_prep(two, 1, B)};
  EXPECT_TRUE(is_basis(bd));
  EXPECT_FALSE(is_basis(std::span(bd).first(1)));
}

TEST(Biproduct, BasisUnionThroughInjections) {
  FinObject A = make_object("a", 2), B = make_object("b", 2);
  DirectSum ds = direct_sum(A, B, R);
  std::vector<Arrow> all;
  for (std::size_t i = 0; i < 2; ++i) all.push_back(compose(ds.inj_left, point_prep(A, i, R)));
  for (std::size_t i = 0; i < 2; ++i) all.push_back(compose(ds.inj_right, point_prep(B, i, R)));
  EXPECT_TRUE(is_basis(all));
}

TEST(Biproduct, Distributors) {
  for (BackendId b : {BackendId::Rat, BackendId::F5}) {
    for (std::size_t na = 1; na <= 2; ++na)
      for (std::size_t nb = 1; nb <= 2; ++nb)
        for (std::size_t nc = 1; nc <= 2; ++nc) {
          FinObject A = make_object("a", na), B = make_object("b", nb), C = make_object("c", nc);
          Arrow x = distributor_x(A, B, C, b), y = distributor_y(A, B, C, b);
          ASSERT_TRUE(is_unitary(x));
          ASSERT_TRUE(is_unitary(y));
          DirectSum outer = direct_sum(tensor_object(A, B), tensor_object(A, C), b);
          DirectSum bc = direct_sum(B, C, b);
          ASSERT_EQ(compose(x, outer.inj_left), tensor_arrows(identity(A, b), bc.inj_left));
        }
  }
  FinObject one({"0"});
  Arrow x = distributor_x(one, one, one, R);
  EXPECT_EQ(x.rows(), 2U);
  EXPECT_TRUE(is_unitary(x));
}

TEST(Biproduct, TensorDistributesOverAddition) {
  for (BackendId b : all_backends()) {
    LawResult r = tensor_distributes_over_add(b, 30, 56);
    EXPECT_EQ(r.status, LawStatus::Pass) << backend_name(b);
  }
}

}  // namespace
