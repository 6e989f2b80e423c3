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
#include <chrono>
#include <filesystem>
#include <sstream>

#include "laws/common.hpp"
#include "qcat/error.hpp"

namespace qcat {

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> out;
    auto topic = [&out](const char* name, void (*add)(std::vector<Law>&)) {
      const std::size_t first = out.size();
      add(out);
      for (std::size_t k = first; k < out.size(); ++k) out[k].topic = name;
    };
    topic("core", laws::register_core);
    topic("unit", laws::register_unit);
    topic("tensor", laws::register_tensor);
    topic("biproduct", laws::register_biproduct);
    topic("quantic", laws::register_quantic);
    topic("fixtures", laws::register_fixtures);
    return out;
  }();
  return registry;
}

const Law* find_law(std::string_view id) {
  for (const auto& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

std::size_t LawReport::count(LawStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const LawResult& r) { return r.status == s; }));
}

LawReport run_suite(const SuiteConfig& config) {
  for (const auto& id : config.only)
    if (!find_law(id)) throw Error(ErrorKind::UnknownName, "no law named " + id);

  const auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.config = config;
  const CapabilitySet& caps = backend(config.backend).caps;
  for (const auto& law : law_registry()) {
    if (!config.only.empty() &&
        std::find(config.only.begin(), config.only.end(), law.id) == config.only.end())
      continue;
    std::string missing = law.missing(caps);
    if (!missing.empty()) {
      report.results.push_back(not_applicable(law.id, missing));
      continue;
    }
    LawContext ctx{config.backend, config.max_size, config.trials, derive_seed(config.seed, law.id)};
    try {
      report.results.push_back(law.check(ctx));
    } catch (const std::exception& e) {
      LawResult r;
      r.law_id = law.id;
      r.status = LawStatus::Fail;
      r.detail = std::string("checker raised ") + e.what();
      report.results.push_back(std::move(r));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::map<std::string, std::string> write_witnesses(const LawReport& report, const std::string& dir) {
  std::map<std::string, std::string> files;
  for (const auto& r : report.results) {
    if (r.status != LawStatus::Fail || r.witness.empty()) continue;
    std::filesystem::create_directories(dir);
    std::string path = (std::filesystem::path(dir) /
                        (r.law_id + "." + std::string(backend_name(report.config.backend)) + ".arrows"))
                           .string();
    write_arrow_file(path, r.witness);
    files[r.law_id] = path;
  }
  return files;
}

std::string format_report(const LawReport& report,
                          const std::map<std::string, std::string>& witness_files) {
  std::ostringstream os;
  const SuiteConfig& c = report.config;
  os << "# qcat law report backend=" << backend_name(c.backend) << " seed=" << c.seed
     << " max-size=" << c.max_size << " trials=" << c.trials << "\n";
  for (const auto& r : report.results) {
    os << r.law_id << " " << status_name(r.status);
    if (r.status == LawStatus::NotApplicable) {
      os << " missing=" << r.detail << "\n";
      continue;
    }
    os << " instances=" << r.instances;
    if (auto it = witness_files.find(r.law_id); it != witness_files.end())
      os << " witness=" << it->second;
    os << "\n";
    if (r.status == LawStatus::Fail && !r.detail.empty()) os << "#   " << r.detail << "\n";
  }
  os << "# summary pass=" << report.count(LawStatus::Pass) << " fail=" << report.count(LawStatus::Fail)
     << " na=" << report.count(LawStatus::NotApplicable) << "\n";
  return os.str();
}

}  // namespace qcat
