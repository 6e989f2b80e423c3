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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/arrow.hpp"
#include "qcat/random.hpp"

namespace qcat {

enum class LawStatus { Pass, Fail, NotApplicable };

std::string_view status_name(LawStatus s);

struct LawResult {
  std::string law_id;
  LawStatus status = LawStatus::Pass;
  /// Non-degenerate instances exercised.
  std::size_t instances = 0;
  /// Missing capability for NotApplicable, failure summary for Fail.
  std::string detail;
  /// Counterexample, already shrunk.
  std::vector<NamedArrow> witness;

  bool passed() const { return status == LawStatus::Pass; }
};

/// An instance of a randomized property: the arrows it is stated over.
/// Scalars travel as 1×1 arrows on the unit object.
using Instance = std::vector<NamedArrow>;
using Property = std::function<bool(const Instance&)>;

/// Zeroes entries, then drops labels from shared objects, for as long as the
/// property keeps failing. Candidates on which the property throws are
/// treated as passing, so shrinking never leaves the property's domain.
Instance shrink_counterexample(Instance failing, const Property& holds);

/// Runs `trials` instances drawn by `generate`; on the first failure the
/// instance is shrunk and recorded. An instance counts as exercised unless
/// the generator marks it degenerate by returning an empty instance.
LawResult check_property(std::string law_id, std::size_t trials, Rng& rng,
                         const std::function<Instance(Rng&)>& generate,
                         const Property& holds);

/// Accumulates the outcome of a hand-rolled law check.
class LawRecorder {
 public:
  explicit LawRecorder(std::string law_id) { result_.law_id = std::move(law_id); }

  /// Counts one exercised instance; keeps the first failing witness.
  void record(bool holds, const Instance& witness = {},
              std::string_view detail = {});
  /// Folds in the instances and first failure of a finished sub-check.
  void merge(const LawResult& sub);
  bool failed() const { return result_.status == LawStatus::Fail; }
  LawResult finish() const;

 private:
  LawResult result_;
};

LawResult not_applicable(std::string law_id, std::string missing);

}  // namespace qcat
