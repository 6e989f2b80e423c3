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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/law_result.hpp"
#include "qcat/scalar.hpp"

namespace qcat {

struct LawContext {
  BackendId backend;
  std::size_t max_size = 4;
  std::size_t trials = 200;
  /// Already derived for this law.
  std::uint64_t seed = 0;
};

struct Law {
  std::string id;
  /// One-line statement of what is checked.
  std::string statement;
  /// core, unit, tensor, biproduct, quantic or fixtures.
  std::string topic;
  /// Name of the missing capability, or empty when the law applies.
  std::function<std::string(const CapabilitySet&)> missing;
  std::function<LawResult(const LawContext&)> check;
};

/// Every law, in registry order. Ids are stable.
const std::vector<Law>& law_registry();
/// nullptr for an unknown id.
const Law* find_law(std::string_view id);

struct SuiteConfig {
  BackendId backend = BackendId::Rat;
  std::size_t max_size = 4;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  /// Restrict to these ids; all laws when empty.
  std::vector<std::string> only;
};

struct LawReport {
  SuiteConfig config;
  std::vector<LawResult> results;
  double wall_seconds = 0;

  std::size_t count(LawStatus s) const;
};

/// Runs the selected laws. Each law gets its own seed derived from the suite
/// seed, the backend and the law id, so results do not depend on which other
/// laws run. A law that throws is reported as a failure.
LawReport run_suite(const SuiteConfig& config);

/// Writes each failing law's witness as an arrow file in `dir` and returns
/// law id -> path.
std::map<std::string, std::string> write_witnesses(const LawReport& report,
                                                   const std::string& dir);

/// Line-oriented report. Wall time is left out so equal runs give equal text.
std::string format_report(const LawReport& report,
                          const std::map<std::string, std::string>& witness_files = {});

}  // namespace qcat
