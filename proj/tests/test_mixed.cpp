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
#include "qcat/mixed.hpp"
#include "qcat/random.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

using namespace qcat;

namespace {

const BackendId G = BackendId::Gauss;
const BackendId Q2 = BackendId::QSqrt2;

Arrow bell(BackendId b) {
  FinObject A = make_object("a", 2);
  Scalar h = b == Q2 ? Scalar::quadratic(Rational(0), Rational(1, 2)) : Scalar::one(b);
  Scalar z = Scalar::zero(b);
  return prep_from(tensor_object(A, A), {h, z, z, h});
}

// Direct contraction: x_c(a)(j) = Σ_i a(i)⋆ c(<i,j>).
Arrow x_oracle(const Arrow& c, const Arrow& a, const FinObject& B) {
  std::vector<Scalar> out;
  for (std::size_t j = 0; j < B.size(); ++j) {
    Scalar s = Scalar::zero(c.backend());
    for (std::size_t i = 0; i < a.cols(); ++i)
      s = s + s_star(a.at(0, i)) * c.at(0, i * B.size() + j);
    out.push_back(s);
  }
  return prep_from(B, out);
}

TEST(Mixed, ContractionsMatchOracle) {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
    Arrow c = random_prep(G, tensor_object(A, B), rng);
    Arrow a = random_prep(G, A, rng), b = random_prep(G, B, rng);
    ASSERT_EQ(x_c(c, a), x_oracle(c, a, B));
    ASSERT_EQ(scalar_product(b, x_c(c, a)), scalar_product(a, y_c(c, b)));
    Scalar s = random_scalar(G, rng);
    ASSERT_EQ(x_c(c, scale(a, s)), scale(x_c(c, a), s_star(s)));
  }
}

TEST(Mixed, ProductStateContraction) {
  Rng rng(62);
  FinObject A = make_object("a", 2), B = make_object("b", 3);
  Arrow a1 = random_prep(G, A, rng), b1 = random_prep(G, B, rng), a = random_prep(G, A, rng);
  Arrow c = kappa(a1, b1);
  EXPECT_EQ(x_c(c, a), scale(b1, scalar_product(a, a1)));
  Arrow d = apply(partial_trace_A(c), a);
  EXPECT_EQ(d, scale(a1, scalar_product(a1, a) * sqnorm(b1)));
  EXPECT_TRUE(x_c(zero_arrow(unit_object(), tensor_object(A, B), G), a).is_zero());
}

TEST(Mixed, BellStatePartialTraces) {
  Arrow c = bell(Q2);
  FinObject A = make_object("a", 2);
  Scalar half = Scalar::quadratic(Rational(1, 2), Rational(0));
  Arrow psi0 = point_prep(A, 0, Q2);
  EXPECT_EQ(x_c(c, psi0), scale(psi0, Scalar::quadratic(Rational(0), Rational(1, 2))));
  EXPECT_EQ(partial_trace_A(c).matrix, lift_scalar(half, A));
  EXPECT_EQ(partial_trace_B(c).matrix, lift_scalar(half, A));
  EXPECT_FALSE(partial_trace_A(c).antilinear);
  EXPECT_TRUE(x_c(c).antilinear);
  SpectraComparison sp = compare_spectra(c);
  EXPECT_TRUE(sp.match);
  // (λ - 1/2)^2 · λ^2.
  ASSERT_EQ(sp.padded_a.size(), 5U);
  EXPECT_EQ(sp.padded_a[2], Scalar::quadratic(Rational(1, 4), Rational(0)));
  EXPECT_EQ(sp.padded_a[3], Scalar::quadratic(Rational(-1), Rational(0)));
}

TEST(Mixed, PartialTraceSelfAdjoint) {
  Rng rng(63);
  for (int t = 0; t < 50; ++t) {
    FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
    Arrow c = random_prep(G, tensor_object(A, B), rng);
    Gqo d = partial_trace_A(c);
    Arrow a = random_prep(G, A, rng), a2 = random_prep(G, A, rng);
    ASSERT_EQ(scalar_product(a2, apply(d, a)), scalar_product(apply(d, a2), a));
    Arrow xa = x_c(c, a);
    ASSERT_EQ(scalar_product(a, apply(d, a)), sqnorm(xa));
    ASSERT_TRUE(is_self_adjoint(d.matrix));
  }
}

TEST(Mixed, SpectraOnRandomStates) {
  for (BackendId b : {BackendId::Gauss, BackendId::Rat, BackendId::QSqrt2, BackendId::F5,
                      BackendId::Cplx64}) {
    Rng rng(derive_seed(64, backend_name(b)));
    for (int t = 0; t < 40; ++t) {
      FinObject A = random_object(rng, "a", 3), B = random_object(rng, "b", 3);
      Arrow c = random_prep(b, tensor_object(A, B), rng);
      ASSERT_TRUE(spectra_match(c)) << backend_name(b);
    }
  }
  FinObject A = make_object("a", 3);
  Rng rng(1);
  EXPECT_THROW(spectra_match(random_prep(BackendId::F2, tensor_object(A, A), rng)), Error);
  EXPECT_THROW(spectra_match(bell(BackendId::Bool)), Error);
}

TEST(Mixed, SpectraMismatchDetected) {
  // Not a real partial-trace pair, but compare_spectra must be able to say no:
  // a state with d^A spectrum {1/2,1/2} versus one with {1}.
  Arrow c = bell(Q2);
  FinObject A = make_object("a", 2);
  Arrow prod = kappa(point_prep(A, 0, Q2), point_prep(A, 0, Q2));
  Poly pa = poly_shift(characteristic_polynomial(partial_trace_A(c).matrix), 2);
  Poly pb = poly_shift(characteristic_polynomial(partial_trace_B(prod).matrix), 2);
  EXPECT_FALSE(poly_equal(pa, pb));
}

// Tries every pair of factor preparations.
bool brute_product(const Arrow& c, const FinObject& A, const FinObject& B) {
  auto all = *enumerate_scalars(c.backend());
  auto preps = [&](const FinObject& X) {
    std::vector<Arrow> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < X.size(); ++i) total *= all.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Scalar> v;
      std::size_t r = code;
      for (std::size_t i = 0; i < X.size(); ++i) {
        v.push_back(all[r % all.size()]);
        r /= all.size();
      }
      out.push_back(prep_from(X, v));
    }
    return out;
  };
  for (const Arrow& a : preps(A))
    for (const Arrow& b : preps(B))
      if (kappa(a, b) == c) return true;
  return false;
}

TEST(Mixed, ProductStateAgreesWithBruteForce) {
  for (BackendId b : {BackendId::F2, BackendId::F3, BackendId::Bool}) {
    auto all = *enumerate_scalars(b);
    FinObject A = make_object("a", 2);
    FinObject AB = tensor_object(A, A);
    std::size_t total = all.size() * all.size() * all.size() * all.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Scalar> v;
      std::size_t r = code;
      for (int i = 0; i < 4; ++i) {
        v.push_back(all[r % all.size()]);
        r /= all.size();
      }
      Arrow c = prep_from(AB, v);
      ASSERT_EQ(is_product_state(c), brute_product(c, A, A)) << format_arrow("c", c);
    }
  }
}

TEST(Mixed, ProductStateExamples) {
  FinObject A = make_object("a", 2);
  EXPECT_TRUE(is_product_state(kappa(point_prep(A, 0, G), point_prep(A, 1, G))));
  EXPECT_FALSE(is_product_state(bell(Q2)));
  EXPECT_TRUE(is_product_state(zero_arrow(unit_object(), tensor_object(A, A), G)));
  auto f = factor_product_state(kappa(prep_from(A, {Scalar::from_int(G, 2), Scalar::one(G)}),
                                      prep_from(A, {Scalar::from_int(G, 3), Scalar::one(G)})));
  ASSERT_TRUE(f.has_value());
}

TEST(Mixed, SuperpositionCases) {
  const BackendId F5 = BackendId::F5;
  FinObject A = make_object("a", 2), B = make_object("b", 2);
  Rng rng(65);
  Arrow a1 = random_nonzero_prep(F5, A, rng), b1 = random_nonzero_prep(F5, B, rng);
  Arrow b2 = random_nonzero_prep(F5, B, rng);
  SuperpositionCase sc = superposition_decide(a1, b1, scale(a1, Scalar::residue(F5, 3)), b2);
  EXPECT_TRUE(sc.product);
  EXPECT_EQ(sc.branch, 1);
  EXPECT_EQ(sc.s.k(), 3);

  Arrow a = prep_from(A, {Scalar::one(G), Scalar::zero(G)});
  Arrow a2 = prep_from(A, {Scalar::zero(G), Scalar::one(G)});
  Arrow b = prep_from(B, {Scalar::one(G), Scalar::from_int(G, 2)});
  SuperpositionCase same = superposition_decide(a, b, a2, b);
  EXPECT_TRUE(same.product);
  EXPECT_EQ(same.branch, 2);
  EXPECT_TRUE(same.s.is_one());

  SuperpositionCase bellc = superposition_decide(point_prep(A, 0, G), point_prep(B, 0, G),
                                                 point_prep(A, 1, G), point_prep(B, 1, G));
  EXPECT_FALSE(bellc.product);
  EXPECT_EQ(bellc.branch, 0);
  EXPECT_THROW(superposition_decide(zero_arrow(unit_object(), A, G), b, a, b), Error);
}

TEST(Mixed, ClonerForUnitObject) {
  for (BackendId b : all_backends()) {
    if (!backend(b).caps.is_field()) continue;
    Cloner cl = build_cloner(unit_object(), b);
    CloneWitness w = verify_cloner(cl.a, cl.c, cl.w);
    EXPECT_TRUE(w.ok()) << backend_name(b);
    Rng rng(derive_seed(66, backend_name(b)));
    for (int t = 0; t < 20; ++t) {
      Arrow s = random_prep(b, cl.a, rng);
      Arrow lhs = compose(cl.c, kappa(s, cl.w));
      ASSERT_EQ(lhs, kappa(kappa(s, s), cloner_ancilla(cl, s)));
    }
  }
  EXPECT_THROW(build_cloner(make_object("a", 2), G), Error);
}

TEST(Mixed, CopyCandidateFailsOnSuperposition) {
  FinObject A = make_object("a", 2), W = make_object("w", 1);
  Arrow c = copy_candidate(A, W, G);
  CloneWitness w = verify_cloner(A, c, point_prep(W, 0, G));
  ASSERT_FALSE(w.ok());
  EXPECT_EQ(*w.a, add_arrows(point_prep(A, 0, G), point_prep(A, 1, G)));
  EXPECT_FALSE(*w.lhs == *w.rhs);
  EXPECT_EQ(compose(c, kappa(*w.a, *w.b)), *w.lhs);
}

TEST(Mixed, RandomCandidatesFail) {
  Rng rng(67);
  FinObject A = make_object("a", 2);
  for (int t = 0; t < 30; ++t) {
    FinObject W = random_object(rng, "w", 2);
    Arrow c = random_arrow(G, tensor_object(A, W), tensor_object(tensor_object(A, A), W), rng);
    Arrow w = random_prep(G, W, rng);
    CloneWitness cw = verify_cloner(A, c, w);
    ASSERT_FALSE(cw.ok());
    ASSERT_FALSE(compose(c, kappa(*cw.a, *cw.b)) == *cw.rhs);
  }
}

}  // namespace
