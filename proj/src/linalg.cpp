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

#include "qcat/linalg.hpp"

#include <cmath>

#include "qcat/error.hpp"

namespace qcat {

ScalarRows rows_of(const Arrow& f) {
  ScalarRows m(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    m[i].reserve(f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j) m[i].push_back(f.at(i, j));
  }
  return m;
}

std::size_t rank(ScalarRows m, BackendId backend_id) {
  const auto& caps = backend(backend_id).caps;
  if (!caps.is_field()) {
    throw Error(ErrorKind::CapabilityMissing,
                "rank needs a field, not " + std::string(backend_name(backend_id)));
  }
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    if (caps.is_exact) {
      for (std::size_t i = r; i < rows; ++i) {
        if (!m[i][c].is_zero()) {
          pivot = i;
          break;
        }
      }
    } else {
      double best = caps.tolerance;
      for (std::size_t i = r; i < rows; ++i) {
        double mag = std::abs(m[i][c].cvalue());
        if (mag > best) {
          best = mag;
          pivot = i;
        }
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Scalar inv = s_inv(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (caps.is_exact && m[i][c].is_zero()) continue;
      Scalar factor = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        m[i][k] = m[i][k] - factor * m[r][k];
      }
    }
    ++r;
  }
  return r;
}

Poly characteristic_polynomial(const Arrow& f) {
  if (!(f.dom() == f.cod())) {
    throw Error(ErrorKind::ObjectMismatch, "characteristic polynomial of a non-inner arrow");
  }
  const BackendId b = f.backend();
  if (!backend(b).caps.has_additive_inverse) {
    throw Error(ErrorKind::CapabilityMissing, "characteristic polynomial needs negatives");
  }
  const std::size_t n = f.rows();
  // Matrix entries in the usual (row, column) sense; the transpose has the
  // same characteristic polynomial, so the arrow orientation is irrelevant.
  auto a = [&](std::size_t i, std::size_t j) -> const Scalar& { return f.at(i, j); };
  const Scalar zero = Scalar::zero(b);
  // Coefficients highest degree first while iterating.
  std::vector<Scalar> p = {Scalar::one(b)};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading principal block of size k, new row R = a(k, 0..k-1), new
    // column C = a(0..k-1, k), corner a(k,k).
    std::vector<Scalar> t;
    t.reserve(k + 2);
    t.push_back(Scalar::one(b));
    t.push_back(-a(k, k));
    std::vector<Scalar> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      Scalar dot = zero;
      for (std::size_t i = 0; i < k; ++i) dot = dot + a(k, i) * v[i];
      t.push_back(-dot);
      if (power + 1 < k) {
        std::vector<Scalar> next(k, zero);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) next[i] = next[i] + a(i, j) * v[j];
        }
        v = std::move(next);
      }
    }
    std::vector<Scalar> q(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k); ++j) {
        q[i] = q[i] + t[i - j] * p[j];
      }
    }
    p = std::move(q);
  }
  return Poly(p.rbegin(), p.rend());
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  BackendId b = p.front().backend();
  Poly out(p.size() + q.size() - 1, Scalar::zero(b));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] = out[i + j] + p[i] * q[j];
  }
  return out;
}

Poly poly_shift(const Poly& p, std::size_t k) {
  if (p.empty()) return {};
  Poly out(k, Scalar::zero(p.front().backend()));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool poly_equal(const Poly& p, const Poly& q) {
  std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool pz = i >= p.size() || p[i].is_zero();
    bool qz = i >= q.size() || q[i].is_zero();
    if (pz && qz) continue;
    if (i >= p.size() || i >= q.size() || !(p[i] == q[i])) return false;
  }
  return true;
}

}  // namespace qcat
