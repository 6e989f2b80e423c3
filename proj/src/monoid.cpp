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

#include "qcat/monoid.hpp"

#include <functional>

namespace qcat {

namespace {

MonoidFixture from_op(std::string name, std::vector<std::string> elements,
                      std::size_t unit,
                      const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  MonoidFixture m{std::move(name), std::move(elements), {}, unit};
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.table.push_back(op(a, b));
  return m;
}

bool is_coproduct(const MonoidFixture& m, std::size_t u, std::size_t v) {
  const std::size_t n = m.size();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t mediators = 0;
      for (std::size_t h = 0; h < n; ++h) {
        if (m.op(h, u) == f && m.op(h, v) == g) ++mediators;
      }
      if (mediators != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::size_t> MonoidFixture::absorbing() const {
  for (std::size_t z = 0; z < size(); ++z) {
    bool ok = true;
    for (std::size_t a = 0; a < size() && ok; ++a) ok = op(z, a) == z && op(a, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::vector<MonoidFixture> standard_fixtures() {
  std::vector<MonoidFixture> out;
  out.push_back(from_op("z4", {"0", "1", "2", "3"}, 0,
                        [](std::size_t a, std::size_t b) { return (a + b) % 4; }));
  out.push_back(from_op("singleton", {"e"}, 0, [](std::size_t, std::size_t) { return 0; }));
  // 4 stands for inf.
  out.push_back(from_op("capped-naturals", {"0", "1", "2", "3", "inf"}, 0,
                        [](std::size_t a, std::size_t b) {
                          return a == 4 || b == 4 ? std::size_t{4} : std::min<std::size_t>(a + b, 4);
                        }));
  out.push_back(from_op("multiplicative-bits", {"0", "1"}, 1,
                        [](std::size_t a, std::size_t b) { return a * b; }));
  return out;
}

FixtureFindings analyze_fixture(const MonoidFixture& m) {
  FixtureFindings out;
  const std::size_t n = m.size();
  bool ok = m.table.size() == n * n && m.unit < n;
  for (std::size_t a = 0; a < n && ok; ++a) {
    ok = m.op(m.unit, a) == a && m.op(a, m.unit) == a;
    for (std::size_t b = 0; b < n && ok; ++b) {
      // Commutativity makes the identity involution an adjoint.
      ok = m.op(a, b) == m.op(b, a);
      for (std::size_t c = 0; c < n && ok; ++c) ok = m.op(m.op(a, b), c) == m.op(a, m.op(b, c));
    }
  }
  out.category_axioms = ok;

  for (std::size_t u = 0; u < n; ++u)
    if (m.op(u, u) == m.unit) out.unitaries.push_back(u);

  for (std::size_t z = 0; z < n; ++z) {
    bool absorbs = true;
    for (std::size_t f = 0; f < n && absorbs; ++f)
      for (std::size_t g = 0; g < n && absorbs; ++g) absorbs = m.op(g, m.op(z, f)) == z;
    if (absorbs) out.zero_candidates.push_back(z);
  }
  out.trivial = n == 1;

  if (out.zero_candidates.size() == 1) {
    const std::size_t zero = out.zero_candidates.front();
    for (std::size_t u = 0; u < n && !out.has_u_coproduct; ++u) {
      for (std::size_t v = 0; v < n && !out.has_u_coproduct; ++v) {
        bool right_unitary = m.op(u, u) == m.unit && m.op(v, v) == m.unit;
        bool orthogonal = m.op(v, u) == zero;
        out.has_u_coproduct = right_unitary && orthogonal && is_coproduct(m, u, v);
      }
    }
  }
  return out;
}

}  // namespace qcat
