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

#include "qcat/linalg.hpp"
#include "qcat/random.hpp"

using namespace qcat;

namespace {

// Faddeev-LeVerrier over Q: M_k = A·M_{k-1} + c_{n-k+1}·I, c_{n-k} = -tr(A·M_k)/k.
// Returns det(λI - A), low-order coefficient first.
std::vector<Rational> faddeev_leverrier(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<Rational>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) z[i][j] = z[i][j] + x[i][k] * y[k][j];
    return z;
  };
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  Mat m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
    m = am;
    Mat t = mul(a, m);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr = tr + t[i][i];
    c[n - k] = -tr / Rational(static_cast<std::int64_t>(k));
  }
  return c;
}

TEST(Linalg, BerkowitzMatchesFaddeevLeVerrier) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(6);
    FinObject A = make_object("a", n);
    Arrow f = random_arrow(BackendId::Rat, A, A, rng);
    std::vector<std::vector<Rational>> op(n, std::vector<Rational>(n));
    // Operator matrix is the transpose of the entry table; same polynomial.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) op[j][i] = f.at(i, j).re();
    auto oracle = faddeev_leverrier(op);
    Poly p = characteristic_polynomial(f);
    ASSERT_EQ(p.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(p[k].re(), oracle[k]) << "n=" << n;
  }
}

TEST(Linalg, CharacteristicPolynomialSmallCases) {
  const BackendId F5 = BackendId::F5;
  FinObject A = make_object("a", 2);
  // [[1,2],[3,4]] over F5: λ^2 - 5λ - 2 = λ^2 + 3.
  Arrow f(A, A, F5,
          {Scalar::residue(F5, 1), Scalar::residue(F5, 2), Scalar::residue(F5, 3),
           Scalar::residue(F5, 4)});
  Poly p = characteristic_polynomial(f);
  EXPECT_EQ(p[0].k(), 3);
  EXPECT_EQ(p[1].k(), 0);
  EXPECT_EQ(p[2].k(), 1);
}

TEST(Linalg, PolynomialHelpers) {
  const BackendId R = BackendId::Rat;
  auto s = [&](std::int64_t v) { return Scalar::from_int(R, v); };
  Poly p = {s(1), s(1)};  // 1 + λ
  Poly sq = poly_mul(p, p);
  EXPECT_TRUE(poly_equal(sq, Poly{s(1), s(2), s(1)}));
  EXPECT_TRUE(poly_equal(poly_shift(p, 2), Poly{s(0), s(0), s(1), s(1)}));
  EXPECT_TRUE(poly_equal(Poly{s(1), s(0)}, Poly{s(1)}));
}

TEST(Linalg, RankOverFields) {
  const BackendId R = BackendId::Rat;
  auto s = [&](std::int64_t v) { return Scalar::from_int(R, v); };
  EXPECT_EQ(rank({{s(1), s(2)}, {s(2), s(4)}}, R), 1U);
  EXPECT_EQ(rank({{s(1), s(2)}, {s(2), s(5)}}, R), 2U);
  EXPECT_EQ(rank({{s(0), s(0)}}, R), 0U);
  const BackendId F3 = BackendId::F3;
  auto r = [&](std::int64_t v) { return Scalar::residue(F3, v); };
  EXPECT_EQ(rank({{r(1), r(1)}, {r(1), r(2)}, {r(2), r(2)}}, F3), 2U);
  const BackendId C = BackendId::Cplx64;
  auto c = [&](double v) { return Scalar::complex({v, 0}); };
  EXPECT_EQ(rank({{c(1), c(2)}, {c(2), c(4 + 1e-13)}}, C), 1U);
}

}  // namespace
