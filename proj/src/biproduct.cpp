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

#include "qcat/biproduct.hpp"

#include <functional>

#include "qcat/error.hpp"
#include "qcat/linalg.hpp"
#include "qcat/tensor.hpp"
#include "qcat/unit.hpp"

namespace qcat {

namespace {

void require_object(const FinObject& a, const FinObject& b, std::string_view what) {
  if (!(a == b)) {
    throw Error(ErrorKind::ObjectMismatch,
                std::string(what) + ": {" + a.str() + "} vs {" + b.str() + "}");
  }
}

FinObject tagged_union(const FinObject& a, const FinObject& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  return FinObject(std::move(labels));
}

/// Every preparation over Bool, used for exact maximality checks.
void for_each_bool_prep(const FinObject& a, const std::function<void(const Arrow&)>& fn) {
  const std::size_t n = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Scalar> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(Scalar::boolean((mask >> i) & 1U));
    fn(prep_from(a, std::move(coords)));
  }
}

}  // namespace

DirectSum direct_sum(const FinObject& a, const FinObject& b, BackendId backend) {
  FinObject sum = tagged_union(a, b);
  std::vector<std::size_t> left(a.size()), right(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) left[i] = i;
  for (std::size_t j = 0; j < b.size(); ++j) right[j] = a.size() + j;
  Arrow u = functional_arrow(a, sum, left, backend);
  Arrow v = functional_arrow(b, sum, right, backend);
  return {a, b, std::move(sum), std::move(u), std::move(v)};
}

std::optional<DirectSum> split_direct_sum(const FinObject& sum, BackendId backend) {
  std::vector<std::string> left, right;
  for (const auto& l : sum.labels()) {
    if (l.rfind("L:", 0) == 0 && right.empty()) {
      left.push_back(l.substr(2));
    } else if (l.rfind("R:", 0) == 0) {
      right.push_back(l.substr(2));
    } else {
      return std::nullopt;
    }
  }
  if (left.empty() || right.empty()) return std::nullopt;
  try {
    return direct_sum(FinObject(left), FinObject(right), backend);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Arrow copair(const Arrow& f, const Arrow& g, const DirectSum& ds) {
  require_object(f.dom(), ds.left, "copair left leg");
  require_object(g.dom(), ds.right, "copair right leg");
  require_object(f.cod(), g.cod(), "copair codomains");
  if (f.backend() != g.backend()) throw Error(ErrorKind::BackendMismatch, "copair");
  const std::size_t na = ds.left.size();
  return Arrow::from_function(ds.object, f.cod(), f.backend(),
                              [&](std::size_t k, std::size_t x) {
                                return k < na ? f.at(k, x) : g.at(k - na, x);
                              });
}

Arrow pair(const Arrow& f, const Arrow& g, const DirectSum& ds) {
  return adjoint(copair(adjoint(f), adjoint(g), ds));
}

Arrow block_matrix(const Arrow& a, const Arrow& f, const Arrow& g,
                   const Arrow& b, const DirectSum& ds) {
  require_object(a.dom(), ds.left, "block a");
  require_object(a.cod(), ds.left, "block a");
  require_object(f.dom(), ds.left, "block f");
  require_object(f.cod(), ds.right, "block f");
  require_object(g.dom(), ds.right, "block g");
  require_object(g.cod(), ds.left, "block g");
  require_object(b.dom(), ds.right, "block b");
  require_object(b.cod(), ds.right, "block b");
  const std::size_t na = ds.left.size();
  return Arrow::from_function(ds.object, ds.object, a.backend(),
                              [&](std::size_t i, std::size_t j) {
                                bool li = i < na, lj = j < na;
                                if (li && lj) return a.at(i, j);
                                if (li) return f.at(i, j - na);
                                if (lj) return g.at(i - na, j);
                                return b.at(i - na, j - na);
                              });
}

Arrow direct_sum_arrows(const Arrow& f, const Arrow& g) {
  if (f.backend() != g.backend()) throw Error(ErrorKind::BackendMismatch, "direct sum");
  DirectSum dom = direct_sum(f.dom(), g.dom(), f.backend());
  DirectSum cod = direct_sum(f.cod(), g.cod(), f.backend());
  return copair(compose(cod.inj_left, f), compose(cod.inj_right, g), dom);
}

Arrow diagonal(const FinObject& a, BackendId backend) {
  Arrow id = identity(a, backend);
  return pair(id, id, direct_sum(a, a, backend));
}

Arrow codiagonal(const FinObject& a, BackendId backend) {
  Arrow id = identity(a, backend);
  return copair(id, id, direct_sum(a, a, backend));
}

Arrow hom_add_via_biproduct(const Arrow& f, const Arrow& g) {
  require_object(f.dom(), g.dom(), "hom addition");
  require_object(f.cod(), g.cod(), "hom addition");
  return compose(codiagonal(f.cod(), f.backend()),
                 compose(direct_sum_arrows(f, g), diagonal(f.dom(), f.backend())));
}

BornDecomposition born_decompose(const Arrow& x, const DirectSum& ds) {
  require_preparation(x);
  require_object(x.cod(), ds.object, "Born decomposition");
  const Arrow& u = ds.inj_left;
  const Arrow& v = ds.inj_right;
  Arrow y = compose(u, compose(adjoint(u), x));
  Arrow z = compose(v, compose(adjoint(v), x));
  BornDecomposition out{y, z, sqnorm(x), sqnorm(y), sqnorm(z)};
  out.sums_to_x = add_arrows(y, z) == x;
  out.orthogonal = scalar_product(y, z).is_zero();
  out.projection = out.sqnorm_y == scalar_product(y, x);
  out.totals = out.sqnorm_y + out.sqnorm_z == out.sqnorm_x;
  return out;
}

bool is_basis(std::span<const Arrow> preps) {
  if (preps.empty()) return false;
  const FinObject& a = preps.front().cod();
  const BackendId b = preps.front().backend();
  for (std::size_t i = 0; i < preps.size(); ++i) {
    require_preparation(preps[i]);
    require_object(preps[i].cod(), a, "basis member");
    if (!sqnorm(preps[i]).is_one()) return false;
    for (std::size_t j = i + 1; j < preps.size(); ++j) {
      if (!scalar_product(preps[i], preps[j]).is_zero()) return false;
    }
  }
  if (b == BackendId::Bool) {
    bool maximal = true;
    for_each_bool_prep(a, [&](const Arrow& x) {
      if (x.is_zero()) return;
      bool orth = true;
      for (const auto& p : preps) orth = orth && scalar_product(p, x).is_zero();
      if (orth) maximal = false;
    });
    return maximal;
  }
  ScalarRows m;
  for (const auto& p : preps) m.push_back(rows_of(p).front());
  return rank(std::move(m), b) == a.size();
}

BasisCompletion complete_basis(const FinObject& a, std::span<const Arrow> partial,
                               BackendId backend) {
  BasisCompletion out;
  out.preps.assign(partial.begin(), partial.end());
  const bool field = qcat::backend(backend).caps.is_field();
  for (std::size_t k = 0; k < a.size(); ++k) {
    Arrow cand = point_prep(a, k, backend);
    if (field) {
      for (const auto& p : out.preps) {
        Scalar norm = sqnorm(p);
        if (norm.is_zero()) continue;
        cand = add_arrows(cand, scale(p, -(scalar_product(p, cand) * s_inv(norm))));
      }
      if (cand.is_zero() || sqnorm(cand).is_zero()) continue;
    } else {
      bool orth = true;
      for (const auto& p : out.preps) orth = orth && scalar_product(p, cand).is_zero();
      if (!orth) continue;
    }
    try {
      out.preps.push_back(normalize(cand).normalized);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotNormalizableInBackend) throw;
      out.normalized = false;
      out.preps.push_back(cand);
    }
  }
  if (field) {
    ScalarRows m;
    for (const auto& p : out.preps) m.push_back(rows_of(p).front());
    out.complete = rank(std::move(m), backend) == a.size();
  } else {
    out.complete = out.normalized && is_basis(out.preps);
  }
  return out;
}

Arrow distributor_x(const FinObject& a, const FinObject& b, const FinObject& c,
                    BackendId backend) {
  DirectSum bc = direct_sum(b, c, backend);
  DirectSum outer = direct_sum(tensor_object(a, b), tensor_object(a, c), backend);
  Arrow id = identity(a, backend);
  return copair(tensor_arrows(id, bc.inj_left), tensor_arrows(id, bc.inj_right), outer);
}

Arrow distributor_y(const FinObject& a, const FinObject& b, const FinObject& c,
                    BackendId backend) {
  DirectSum bc = direct_sum(b, c, backend);
  DirectSum outer = direct_sum(tensor_object(b, a), tensor_object(c, a), backend);
  Arrow id = identity(a, backend);
  return copair(tensor_arrows(bc.inj_left, id), tensor_arrows(bc.inj_right, id), outer);
}

LawResult tensor_distributes_over_add(BackendId backend, std::size_t trials,
                                      std::uint64_t seed, std::size_t max_size) {
  LawRecorder rec("thm-tensor-dist");
  Rng rng(seed);
  for (std::size_t t = 0; t < trials && !rec.failed(); ++t) {
    FinObject A = random_object(rng, "a", max_size);
    FinObject B = random_object(rng, "b", max_size);
    Arrow a = random_prep(backend, A, rng);
    Arrow b1 = random_prep(backend, B, rng);
    Arrow b2 = random_prep(backend, B, rng);
    bool prep_level =
        kappa(a, add_arrows(b1, b2)) == add_arrows(kappa(a, b1), kappa(a, b2)) &&
        kappa(add_arrows(b1, b2), a) == add_arrows(kappa(b1, a), kappa(b2, a));
    rec.record(prep_level, {{"a", a}, {"b1", b1}, {"b2", b2}}, "preparation level");

    FinObject A2 = random_object(rng, "c", max_size);
    FinObject B2 = random_object(rng, "d", max_size);
    Arrow f = random_arrow(backend, A2, A, rng);
    Arrow g1 = random_arrow(backend, B2, B, rng);
    Arrow g2 = random_arrow(backend, B2, B, rng);
    bool arrow_level =
        tensor_arrows(f, add_arrows(g1, g2)) ==
            add_arrows(tensor_arrows(f, g1), tensor_arrows(f, g2)) &&
        tensor_arrows(add_arrows(g1, g2), f) ==
            add_arrows(tensor_arrows(g1, f), tensor_arrows(g2, f));
    rec.record(arrow_level, {{"a", f}, {"b1", g1}, {"b2", g2}}, "arrow level");
  }
  return rec.finish();
}

}  // namespace qcat
