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

#include <algorithm>

#include "laws/common.hpp"
#include "qcat/monoid.hpp"

namespace qcat::laws {

namespace {

using FixtureCheck = std::function<bool(const MonoidFixture&, const FixtureFindings&)>;

Checker over_fixtures(FixtureCheck check) {
  return [check](const LawContext&, Rng&, LawRecorder& rec) {
    for (const auto& m : standard_fixtures())
      rec.record(check(m, analyze_fixture(m)), {}, "fixture " + m.name);
  };
}

}  // namespace

void register_fixtures(std::vector<Law>& out) {
  add_checker(out, "fixture-adjoint-axioms",
              "commutative monoids with the identity involution satisfy the adjoint category axioms",
              always, over_fixtures([](const MonoidFixture& m, const FixtureFindings& f) {
                if (!f.category_axioms) return false;
                // Unitaries are exactly the self-inverse elements.
                for (std::size_t u = 0; u < m.size(); ++u) {
                  const bool listed =
                      std::find(f.unitaries.begin(), f.unitaries.end(), u) != f.unitaries.end();
                  if (listed != (m.op(u, u) == m.unit)) return false;
                }
                return true;
              }));

  add_checker(out, "fixture-zero-family",
              "a fixture has a zero arrow exactly when it has an absorbing element", always,
              over_fixtures([](const MonoidFixture& m, const FixtureFindings& f) {
                auto z = m.absorbing();
                return f.zero_candidates.size() == (z ? 1U : 0U) &&
                       (!z || f.zero_candidates.front() == *z);
              }));

  add_checker(out, "fixture-trivial", "a one-element fixture where identity equals zero is trivial",
              always, over_fixtures([](const MonoidFixture& m, const FixtureFindings& f) {
                const bool identity_is_zero = f.zero_candidates.size() == 1 && f.zero_candidates[0] == m.unit;
                return f.trivial == identity_is_zero && f.trivial == (m.size() == 1);
              }));

  add_checker(out, "fixture-no-ucoproduct",
              "the only commutative monoid fixture with u-coproducts is the singleton", always,
              over_fixtures([](const MonoidFixture& m, const FixtureFindings& f) {
                return f.has_u_coproduct == (m.size() == 1);
              }));
}

}  // namespace qcat::laws
