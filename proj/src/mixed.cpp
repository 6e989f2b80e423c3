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

#include "qcat/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "qcat/error.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

namespace qcat {

namespace {

void require_same(const FinObject& a, const FinObject& b, std::string_view what) {
  if (!(a == b)) {
    throw Error(ErrorKind::ObjectMismatch,
                std::string(what) + ": {" + a.str() + "} vs {" + b.str() + "}");
  }
}

/// Index of an entry usable as a pivot: the first nonzero one on exact
/// backends, the largest in modulus on Cplx64.
std::optional<std::size_t> pivot_index(std::span<const Scalar> xs) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].is_zero()) continue;
    if (xs[k].backend() != BackendId::Cplx64) return k;
    if (!best || std::abs(xs[k].cvalue()) > std::abs(xs[*best].cvalue())) best = k;
  }
  return best;
}

Eigen::MatrixXcd to_eigen(const Arrow& f) {
  Eigen::MatrixXcd m(f.cols(), f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) m(j, i) = f.at(i, j).cvalue();
  return m;
}

std::vector<double> nonzero_eigenvalues(const Arrow& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(f),
                                                         Eigen::EigenvaluesOnly);
  std::vector<double> all(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  double scale = 1.0;
  for (double v : all) scale = std::max(scale, std::abs(v));
  const double tol = backend(BackendId::Cplx64).caps.tolerance * scale;
  std::vector<double> out;
  for (double v : all)
    if (std::abs(v) > tol) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Arrow apply(const Gqo& g, const Arrow& a) {
  return compose(g.matrix, g.antilinear ? conjugate(a) : a);
}

Gqo compose(const Gqo& g, const Gqo& f) {
  Arrow inner = g.antilinear ? conjugate(f.matrix) : f.matrix;
  return {compose(g.matrix, inner), g.antilinear != f.antilinear};
}

Gqo x_c(const Arrow& c) {
  require_preparation(c);
  TensorFactors ab = require_tensor_object(c.cod());
  const std::size_t nb = ab.right.size();
  return {Arrow::from_function(ab.left, ab.right, c.backend(),
                               [&](std::size_t i, std::size_t j) {
                                 return c.at(0, i * nb + j);
                               }),
          true};
}

Gqo y_c(const Arrow& c) {
  require_preparation(c);
  TensorFactors ab = require_tensor_object(c.cod());
  const std::size_t nb = ab.right.size();
  return {Arrow::from_function(ab.right, ab.left, c.backend(),
                               [&](std::size_t j, std::size_t i) {
                                 return c.at(0, i * nb + j);
                               }),
          true};
}

Arrow x_c(const Arrow& c, const Arrow& a) {
  require_preparation(a);
  Gqo g = x_c(c);
  require_same(a.cod(), g.matrix.dom(), "x_c argument");
  return apply(g, a);
}

Arrow y_c(const Arrow& c, const Arrow& b) {
  require_preparation(b);
  Gqo g = y_c(c);
  require_same(b.cod(), g.matrix.dom(), "y_c argument");
  return apply(g, b);
}

Gqo partial_trace_A(const Arrow& c) { return compose(y_c(c), x_c(c)); }
Gqo partial_trace_B(const Arrow& c) { return compose(x_c(c), y_c(c)); }

SpectraComparison compare_spectra(const Arrow& c) {
  Arrow da = partial_trace_A(c).matrix;
  Arrow db = partial_trace_B(c).matrix;
  const BackendId b = c.backend();
  const CapabilitySet& caps = backend(b).caps;
  SpectraComparison out;
  if (b == BackendId::Cplx64) {
    std::vector<double> ea = nonzero_eigenvalues(da);
    std::vector<double> eb = nonzero_eigenvalues(db);
    out.match = ea.size() == eb.size();
    for (std::size_t k = 0; out.match && k < ea.size(); ++k) {
      out.match = std::abs(ea[k] - eb[k]) <=
                  caps.tolerance * std::max(1.0, std::abs(ea[k]));
    }
    return out;
  }
  const std::size_t na = da.rows(), nb = db.rows();
  if (!caps.is_field() ||
      (caps.characteristic != 0 &&
       static_cast<std::size_t>(caps.characteristic) <= std::max(na, nb))) {
    throw Error(ErrorKind::CapabilityMissing,
                "spectrum comparison needs a field of characteristic 0 or above " +
                    std::to_string(std::max(na, nb)));
  }
  out.padded_a = poly_shift(characteristic_polynomial(da), nb);
  out.padded_b = poly_shift(characteristic_polynomial(db), na);
  out.match = poly_equal(out.padded_a, out.padded_b);
  return out;
}

bool spectra_match(const Arrow& c) { return compare_spectra(c).match; }

ScalarRows coefficient_matrix(const Arrow& c) {
  require_preparation(c);
  TensorFactors ab = require_tensor_object(c.cod());
  const std::size_t na = ab.left.size(), nb = ab.right.size();
  ScalarRows m(na, std::vector<Scalar>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) m[i][j] = c.at(0, i * nb + j);
  return m;
}

std::optional<ProductFactors> factor_product_state(const Arrow& c) {
  TensorFactors ab = require_tensor_object(c.cod());
  const BackendId b = c.backend();
  auto piv = pivot_index(c.entries());
  if (!piv) {
    return ProductFactors{zero_arrow(unit_object(), ab.left, b),
                          point_prep(ab.right, 0, b)};
  }
  const std::size_t nb = ab.right.size();
  const std::size_t i0 = *piv / nb, j0 = *piv % nb;
  ScalarRows m = coefficient_matrix(c);
  const Scalar inv = s_inv(m[i0][j0]);
  std::vector<Scalar> av, bv;
  for (std::size_t i = 0; i < ab.left.size(); ++i) av.push_back(m[i][j0]);
  for (std::size_t j = 0; j < nb; ++j) bv.push_back(m[i0][j] * inv);
  ProductFactors f{prep_from(ab.left, std::move(av)), prep_from(ab.right, std::move(bv))};
  if (!(kappa(f.a, f.b) == c)) return std::nullopt;
  return f;
}

bool is_product_state(const Arrow& c) { return factor_product_state(c).has_value(); }

std::optional<Scalar> proportionality(const Arrow& x, const Arrow& y) {
  require_same(x.dom(), y.dom(), "proportionality");
  require_same(x.cod(), y.cod(), "proportionality");
  auto piv = pivot_index(x.entries());
  if (!piv) {
    throw Error(ErrorKind::PreconditionViolated, "proportionality to a zero arrow");
  }
  Scalar s = s_div(y.entries()[*piv], x.entries()[*piv]);
  if (!(scale(x, s) == y)) return std::nullopt;
  return s;
}

SuperpositionCase superposition_decide(const Arrow& a1, const Arrow& b1,
                                       const Arrow& a2, const Arrow& b2) {
  if (!backend(a1.backend()).caps.is_field()) {
    throw Error(ErrorKind::CapabilityMissing, "superposition analysis needs a field");
  }
  Arrow first = kappa(a1, b1);
  if (first.is_zero()) {
    throw Error(ErrorKind::PreconditionViolated, "a1 (*) b1 is zero");
  }
  SuperpositionCase out;
  out.s = Scalar::zero(a1.backend());
  out.product = is_product_state(add_arrows(first, kappa(a2, b2)));
  if (!out.product) return out;
  if (auto s = proportionality(a1, a2)) {
    out.branch = 1;
    out.s = *s;
  } else if (auto t = proportionality(b1, b2)) {
    out.branch = 2;
    out.s = *t;
  }
  return out;
}

Cloner build_cloner(const FinObject& a, BackendId backend) {
  if (!is_unit_object(a)) {
    throw Error(ErrorKind::NotUnitObject, "{" + a.str() + "} is not a unit object");
  }
  FinObject w = unit_object();
  const std::size_t image[] = {0};
  Arrow c = functional_arrow(tensor_object(a, w), tensor_object(tensor_object(a, a), w),
                             image, backend);
  return {a, w, std::move(c), point_prep(w, 0, backend)};
}

Arrow cloner_ancilla(const Cloner& cl, const Arrow& a) {
  require_preparation(a);
  require_same(a.cod(), cl.a, "cloner input");
  const Scalar& s = a.at(0, 0);
  if (s.is_zero()) return zero_arrow(unit_object(), cl.w_object, a.backend());
  return scale(cl.w, s_inv(s));
}

Arrow copy_candidate(const FinObject& a, const FinObject& w, BackendId backend) {
  const std::size_t na = a.size(), nw = w.size();
  std::vector<std::size_t> image(na * nw);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < nw; ++k) image[i * nw + k] = (i * na + i) * nw + k;
  return functional_arrow(tensor_object(a, w), tensor_object(tensor_object(a, a), w),
                          image, backend);
}

CloneWitness verify_cloner(const FinObject& a, const Arrow& c, const Arrow& w) {
  require_preparation(w);
  const BackendId b = c.backend();
  const FinObject& wobj = w.cod();
  const FinObject aa = tensor_object(a, a);
  require_same(c.dom(), tensor_object(a, wobj), "cloner domain");
  require_same(c.cod(), tensor_object(aa, wobj), "cloner codomain");

  std::vector<Arrow> probes;
  for (std::size_t i = 0; i < a.size(); ++i) probes.push_back(point_prep(a, i, b));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      probes.push_back(add_arrows(probes[i], probes[j]));
  Scalar two = Scalar::from_int(b, 2);
  if (!two.is_zero() && !two.is_one()) probes.push_back(scale(probes[0], two));

  const Arrow fallback = w.is_zero() ? point_prep(wobj, 0, b) : w;
  const std::size_t nw = wobj.size();
  CloneWitness out;
  for (const Arrow& x : probes) {
    ++out.probes;
    Arrow lhs = compose(c, kappa(x, w));
    Arrow xx = kappa(x, x);
    const std::size_t k = *pivot_index(xx.entries());
    const Scalar inv = s_inv(xx.at(0, k));
    Arrow wp = Arrow::from_function(unit_object(), wobj, b, [&](std::size_t, std::size_t j) {
      return lhs.at(0, k * nw + j) * inv;
    });
    Arrow rhs = kappa(xx, wp.is_zero() ? fallback : wp);
    if (wp.is_zero() || !(lhs == rhs)) {
      out.status = CloneWitness::Status::Counterexample;
      out.a = x;
      out.b = w;
      out.lhs = std::move(lhs);
      out.rhs = std::move(rhs);
      return out;
    }
  }
  return out;
}

std::string format_clone_witness(const CloneWitness& w) {
  std::ostringstream os;
  os << "clone-check " << (w.ok() ? "OK" : "COUNTEREXAMPLE") << " probes=" << w.probes
     << '\n';
  if (!w.ok()) {
    os << format_arrow("a", *w.a) << format_arrow("w", *w.b) << format_arrow("lhs", *w.lhs)
       << format_arrow("rhs", *w.rhs);
  }
  return os.str();
}

}  // namespace qcat
