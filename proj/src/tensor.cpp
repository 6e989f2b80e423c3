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

#include "qcat/tensor.hpp"

#include <algorithm>

#include "qcat/error.hpp"
#include "qcat/unit.hpp"

namespace qcat {

namespace {

void require_object(const FinObject& a, const FinObject& b, std::string_view what) {
  if (!(a == b)) {
    throw Error(ErrorKind::ObjectMismatch,
                std::string(what) + ": {" + a.str() + "} vs {" + b.str() + "}");
  }
}

void require_backend(BackendId a, BackendId b) {
  if (a != b) {
    throw Error(ErrorKind::BackendMismatch,
                std::string(backend_name(a)) + " vs " + std::string(backend_name(b)));
  }
}

Arrow permutation(const FinObject& dom, const FinObject& cod, BackendId backend,
                  const std::function<std::string(std::size_t)>& image_label) {
  std::vector<std::size_t> image(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) image[i] = cod.require_index(image_label(i));
  return functional_arrow(dom, cod, image, backend);
}

void require_square_caps(BackendId backend) {
  const auto& caps = qcat::backend(backend).caps;
  if (!caps.has_multiplicative_inverse_of_nonzero || !caps.has_minus_one ||
      !caps.has_sqrt2) {
    throw Error(ErrorKind::CapabilityMissing,
                "symmetric tensor squares need inverses, 1⁻ and √2; " +
                    std::string(backend_name(backend)) + " lacks one");
  }
}

}  // namespace

FinObject tensor_object(const FinObject& a, const FinObject& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) labels.push_back(pair_label(x, y));
  }
  return FinObject(std::move(labels));
}

std::optional<TensorFactors> split_tensor_object(const FinObject& ab) {
  std::vector<std::string> left, right;
  for (const auto& label : ab.labels()) {
    auto pr = parse_pair_label(label);
    if (!pr) return std::nullopt;
    if (std::find(left.begin(), left.end(), pr->first) == left.end()) {
      left.push_back(pr->first);
    }
    if (std::find(right.begin(), right.end(), pr->second) == right.end()) {
      right.push_back(pr->second);
    }
  }
  try {
    TensorFactors f{FinObject(left), FinObject(right)};
    if (!(tensor_object(f.left, f.right) == ab)) return std::nullopt;
    return f;
  } catch (const Error&) {
    return std::nullopt;
  }
}

TensorFactors require_tensor_object(const FinObject& ab) {
  auto f = split_tensor_object(ab);
  if (!f) throw Error(ErrorKind::ObjectMismatch, "{" + ab.str() + "} is not a tensor object");
  return *f;
}

Arrow kappa(const Arrow& a, const Arrow& b) {
  require_preparation(a);
  require_preparation(b);
  require_backend(a.backend(), b.backend());
  FinObject ab = tensor_object(a.cod(), b.cod());
  return Arrow::from_function(unit_object(), ab, a.backend(),
                              [&](std::size_t, std::size_t k) {
                                return a.at(0, k / b.cols()) * b.at(0, k % b.cols());
                              });
}

Arrow tensor_arrows(const Arrow& f, const Arrow& g) {
  require_backend(f.backend(), g.backend());
  FinObject dom = tensor_object(f.dom(), g.dom());
  FinObject cod = tensor_object(f.cod(), g.cod());
  const std::size_t gr = g.rows(), gc = g.cols();
  return Arrow::from_function(dom, cod, f.backend(), [&](std::size_t i, std::size_t j) {
    return f.at(i / gr, j / gc) * g.at(i % gr, j % gc);
  });
}

Arrow unit_left_relabel(const FinObject& a, BackendId backend) {
  FinObject ia = tensor_object(unit_object(), a);
  return permutation(ia, a, backend, [&](std::size_t i) { return a.label(i); });
}

Arrow unit_right_relabel(const FinObject& a, BackendId backend) {
  FinObject ai = tensor_object(a, unit_object());
  return permutation(ai, a, backend, [&](std::size_t i) { return a.label(i); });
}

BiArrow::BiArrow(FinObject left, FinObject right, FinObject cod,
                 BackendId backend, std::vector<Arrow> table)
    : left_(std::move(left)),
      right_(std::move(right)),
      cod_(std::move(cod)),
      backend_(backend),
      table_(std::move(table)) {
  if (table_.size() != left_.size() * right_.size()) {
    throw Error(ErrorKind::IncompleteTable,
                "expected " + std::to_string(left_.size() * right_.size()) +
                    " generators, got " + std::to_string(table_.size()));
  }
  for (const auto& g : table_) {
    if (!is_preparation(g) || !(g.cod() == cod_) || g.backend() != backend_) {
      throw Error(ErrorKind::IncompleteTable,
                  "generator is not a preparation of {" + cod_.str() + "}");
    }
  }
}

BiArrow BiArrow::from_function(
    FinObject left, FinObject right, FinObject cod, BackendId backend,
    const std::function<Arrow(std::size_t, std::size_t)>& generator) {
  std::vector<Arrow> table;
  table.reserve(left.size() * right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) table.push_back(generator(i, j));
  }
  return BiArrow(std::move(left), std::move(right), std::move(cod), backend,
                 std::move(table));
}

Arrow BiArrow::operator()(const Arrow& a, const Arrow& b) const {
  require_preparation(a);
  require_preparation(b);
  require_object(a.cod(), left_, "bi-arrow left argument");
  require_object(b.cod(), right_, "bi-arrow right argument");
  require_backend(a.backend(), backend_);
  require_backend(b.backend(), backend_);
  std::vector<Scalar> out(cod_.size(), Scalar::zero(backend_));
  for (std::size_t i = 0; i < left_.size(); ++i) {
    for (std::size_t j = 0; j < right_.size(); ++j) {
      Scalar w = a.at(0, i) * b.at(0, j);
      const Arrow& g = generator(i, j);
      for (std::size_t x = 0; x < cod_.size(); ++x) out[x] = out[x] + w * g.at(0, x);
    }
  }
  return Arrow(unit_object(), cod_, backend_, std::move(out));
}

bool operator==(const BiArrow& x, const BiArrow& y) {
  return x.left_ == y.left_ && x.right_ == y.right_ && x.cod_ == y.cod_ &&
         x.backend_ == y.backend_ && x.table_ == y.table_;
}

BiArrow biarrow_from_table(FinObject left, FinObject right, FinObject cod,
                           BackendId backend, std::vector<Arrow> table) {
  return BiArrow(std::move(left), std::move(right), std::move(cod), backend,
                 std::move(table));
}

Arrow eval_biarrow(const BiArrow& alpha, const Arrow& a, const Arrow& b) {
  return alpha(a, b);
}

BiArrow kappa_biarrow(const FinObject& a, const FinObject& b, BackendId backend) {
  return BiArrow::from_function(a, b, tensor_object(a, b), backend,
                                [&](std::size_t i, std::size_t j) {
                                  return kappa(point_prep(a, i, backend),
                                               point_prep(b, j, backend));
                                });
}

BiArrow post_compose(const Arrow& x, const BiArrow& alpha) {
  require_object(x.dom(), alpha.cod(), "post-composition");
  return BiArrow::from_function(alpha.left(), alpha.right(), x.cod(), alpha.backend(),
                                [&](std::size_t i, std::size_t j) {
                                  return compose(x, alpha.generator(i, j));
                                });
}

BiArrow add_biarrows(const BiArrow& x, const BiArrow& y) {
  require_object(x.left(), y.left(), "bi-arrow sum");
  require_object(x.right(), y.right(), "bi-arrow sum");
  require_object(x.cod(), y.cod(), "bi-arrow sum");
  return BiArrow::from_function(x.left(), x.right(), x.cod(), x.backend(),
                                [&](std::size_t i, std::size_t j) {
                                  return add_arrows(x.generator(i, j), y.generator(i, j));
                                });
}

Arrow factorize(const BiArrow& alpha) {
  FinObject ab = tensor_object(alpha.left(), alpha.right());
  const std::size_t nb = alpha.right().size();
  return Arrow::from_function(ab, alpha.cod(), alpha.backend(),
                              [&](std::size_t k, std::size_t x) {
                                return alpha.generator(k / nb, k % nb).at(0, x);
                              });
}

Arrow swap_unitary(const FinObject& a, const FinObject& b, BackendId backend) {
  FinObject ab = tensor_object(a, b);
  FinObject ba = tensor_object(b, a);
  return permutation(ab, ba, backend, [&](std::size_t k) {
    return pair_label(b.label(k % b.size()), a.label(k / b.size()));
  });
}

Arrow model_associator(const FinObject& a, const FinObject& b,
                       const FinObject& c, BackendId backend) {
  FinObject left = tensor_object(tensor_object(a, b), c);
  FinObject right = tensor_object(a, tensor_object(b, c));
  return permutation(left, right, backend, [&](std::size_t k) {
    std::size_t ic = k % c.size();
    std::size_t ib = (k / c.size()) % b.size();
    std::size_t ia = k / (c.size() * b.size());
    return pair_label(a.label(ia), pair_label(b.label(ib), c.label(ic)));
  });
}

LawResult condition2_check(const FinObject& a, const FinObject& b,
                           BackendId backend, std::size_t trials,
                           std::uint64_t seed) {
  LawRecorder rec("tensor-cond2");
  auto check = [&](const Arrow& x, const Arrow& y, const Arrow& x2, const Arrow& y2) {
    Scalar lhs = scalar_product(kappa(x, y), kappa(x2, y2));
    Scalar rhs = scalar_product(x, x2) * scalar_product(y, y2);
    rec.record(lhs == rhs, {{"a", x}, {"b", y}, {"a2", x2}, {"b2", y2}},
               "kappa does not preserve scalar products");
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t i2 = 0; i2 < a.size(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.size(); ++j2) {
          check(point_prep(a, i, backend), point_prep(b, j, backend),
                point_prep(a, i2, backend), point_prep(b, j2, backend));
        }
      }
    }
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials && !rec.failed(); ++t) {
    check(random_prep(backend, a, rng), random_prep(backend, b, rng),
          random_prep(backend, a, rng), random_prep(backend, b, rng));
  }
  return rec.finish();
}

SymTensorResult s_tensor(const FinObject& a, BackendId backend) {
  require_square_caps(backend);
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      labels.push_back("{" + a.label(i) + "," + a.label(j) + "}");
      pairs.emplace_back(i, j);
    }
  }
  FinObject sym(std::move(labels));
  FinObject aa = tensor_object(a, a);
  const Scalar one = Scalar::one(backend);
  const Scalar half_root = s_inv(sqrt_two(backend));
  const std::size_t n = a.size();
  Arrow p = Arrow::from_function(aa, sym, backend, [&](std::size_t k, std::size_t s) {
    auto [i, j] = pairs[s];
    std::size_t x = k / n, y = k % n;
    bool hit = (x == i && y == j) || (x == j && y == i);
    if (!hit) return Scalar::zero(backend);
    return i == j ? one : half_root;
  });
  BiArrow sigma = post_compose(p, kappa_biarrow(a, a, backend));
  return {std::move(sym), std::move(sigma), std::move(p)};
}

SymTensorResult a_tensor(const FinObject& a, BackendId backend) {
  require_square_caps(backend);
  if (a.size() < 2) {
    throw Error(ErrorKind::ObjectMismatch,
                "the antisymmetric square of a singleton is empty");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      labels.push_back("(" + a.label(i) + "<" + a.label(j) + ")");
      pairs.emplace_back(i, j);
    }
  }
  FinObject anti(std::move(labels));
  FinObject aa = tensor_object(a, a);
  const Scalar half_root = s_inv(sqrt_two(backend));
  const std::size_t n = a.size();
  Arrow q = Arrow::from_function(aa, anti, backend, [&](std::size_t k, std::size_t s) {
    auto [i, j] = pairs[s];
    std::size_t x = k / n, y = k % n;
    if (x == i && y == j) return half_root;
    if (x == j && y == i) return -half_root;
    return Scalar::zero(backend);
  });
  BiArrow tau = post_compose(q, kappa_biarrow(a, a, backend));
  return {std::move(anti), std::move(tau), std::move(q)};
}

Arrow sym_mediator(const BiArrow& alpha, const SymTensorResult& square) {
  return compose(factorize(alpha), adjoint(square.p));
}

}  // namespace qcat
