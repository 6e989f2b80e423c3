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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcat {

/// A finite commutative monoid viewed as a one-object category whose arrows
/// are the elements, composition is the monoid operation and every arrow is
/// its own adjoint.
struct MonoidFixture {
  std::string name;
  std::vector<std::string> elements;
  /// op(a, b) = table[a * size + b]
  std::vector<std::size_t> table;
  std::size_t unit = 0;

  std::size_t size() const { return elements.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table[a * size() + b]; }
  std::optional<std::size_t> absorbing() const;
};

/// (Z4, +), the singleton monoid, {0, 1, 2, 3, inf} under addition capped at
/// the absorbing inf, and ({0, 1}, ·).
std::vector<MonoidFixture> standard_fixtures();

struct FixtureFindings {
  bool category_axioms = false;
  /// Elements u with u⋆∘u = id, i.e. u∘u = unit.
  std::vector<std::size_t> unitaries;
  /// Every z with g∘z∘f = z for all f, g.
  std::vector<std::size_t> zero_candidates;
  bool trivial = false;
  /// Some pair u, v of right-unitary, orthogonal arrows is a coproduct of the
  /// object with itself. Needs a zero family to state orthogonality.
  bool has_u_coproduct = false;
};

/// Brute-force analysis of the fixture category.
FixtureFindings analyze_fixture(const MonoidFixture& m);

}  // namespace qcat
