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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qcat/error.hpp"
#include "qcat/laws.hpp"
#include "qcat/monoid.hpp"
#include "qcat/random.hpp"

using namespace qcat;

namespace {

std::vector<std::pair<std::string, std::string>> read_manifest() {
  std::ifstream in(std::string(QCAT_TEST_DATA) + "/data/laws.manifest");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return out;
}

bool quantic_law(const Law& law) {
  CapabilitySet everything = backend(BackendId::Gauss).caps;
  everything.has_sqrt2 = true;
  CapabilitySet no_minus = everything;
  no_minus.has_minus_one = false;
  return law.missing(everything).empty() && !law.missing(no_minus).empty();
}

TEST(Laws, RegistryMatchesManifestBothWays) {
  auto manifest = read_manifest();
  ASSERT_GE(manifest.size(), 40U);
  std::set<std::string> ids;
  for (const auto& law : law_registry()) ASSERT_TRUE(ids.insert(law.id).second) << law.id;
  ASSERT_EQ(manifest.size(), law_registry().size());
  for (std::size_t k = 0; k < manifest.size(); ++k) {
    EXPECT_EQ(manifest[k].first, law_registry()[k].id);
    EXPECT_EQ(manifest[k].second, law_registry()[k].statement);
  }
  for (const char* id : {"thm-scalar-com", "thm-nocloning", "lemma-dense"})
    EXPECT_NE(find_law(id), nullptr) << id;
}

TEST(Laws, ReportsAreDeterministic) {
  SuiteConfig c;
  c.backend = BackendId::Gauss;
  c.trials = 15;
  c.seed = 99;
  EXPECT_EQ(format_report(run_suite(c)), format_report(run_suite(c)));
  SuiteConfig other = c;
  other.seed = 100;
  EXPECT_EQ(run_suite(other).count(LawStatus::Fail), 0U);
}

TEST(Laws, SuitePassesOnEveryBackend) {
  for (BackendId b : all_backends()) {
    SuiteConfig c;
    c.backend = b;
    c.seed = 11;
    LawReport r = run_suite(c);
    for (const auto& res : r.results) {
      if (b == BackendId::F2 && res.law_id == "qcat-minus-one") {
        EXPECT_EQ(res.status, LawStatus::Fail);
        continue;
      }
      EXPECT_NE(res.status, LawStatus::Fail) << backend_name(b) << " " << res.law_id << " " << res.detail;
      if (res.status == LawStatus::Pass) EXPECT_GT(res.instances, 0U) << res.law_id;
    }
  }
}

TEST(Laws, QuanticLawsAreGatedOnBoolAndF2) {
  for (BackendId b : {BackendId::Bool, BackendId::F2}) {
    SuiteConfig c;
    c.backend = b;
    c.trials = 5;
    LawReport r = run_suite(c);
    std::size_t gated = 0;
    for (std::size_t k = 0; k < r.results.size(); ++k) {
      const Law& law = law_registry()[k];
      ASSERT_EQ(law.id, r.results[k].law_id);
      if (!quantic_law(law)) continue;
      ++gated;
      EXPECT_EQ(r.results[k].status, LawStatus::NotApplicable) << law.id;
      EXPECT_EQ(r.results[k].detail, "has_minus_one") << law.id;
    }
    EXPECT_GE(gated, 10U);
    const auto& minus = *std::find_if(r.results.begin(), r.results.end(),
                                      [](const LawResult& x) { return x.law_id == "qcat-minus-one"; });
    EXPECT_EQ(minus.status, b == BackendId::Bool ? LawStatus::NotApplicable : LawStatus::Fail);
  }
}

TEST(Laws, OnlySelectsAndRejectsUnknownIds) {
  SuiteConfig c;
  c.only = {"cat-assoc", "lemma-dense"};
  LawReport r = run_suite(c);
  ASSERT_EQ(r.results.size(), 2U);
  EXPECT_EQ(r.results[0].law_id, "cat-assoc");
  c.only = {"no-such-law"};
  EXPECT_THROW(run_suite(c), Error);
}

TEST(Laws, ReportFormat) {
  SuiteConfig c;
  c.backend = BackendId::Bool;
  c.trials = 3;
  c.seed = 5;
  c.only = {"cat-assoc", "thm-nocloning"};
  std::string text = format_report(run_suite(c));
  EXPECT_EQ(text,
            "# qcat law report backend=bool seed=5 max-size=4 trials=3\n"
            "cat-assoc PASS instances=3\n"
            "thm-nocloning N/A missing=has_minus_one\n"
            "# summary pass=1 fail=0 na=1\n");
}

TEST(Laws, FailingWitnessIsShrunkAndWritten) {
  Rng rng(3);
  // Deliberately false: every endomorphism is self-adjoint.
  LawResult res = check_property(
      "fake-law", 50, rng,
      [](Rng& r) {
        FinObject a = random_object(r, "a", 4);
        return Instance{{"f", random_arrow(BackendId::Rat, a, a, r)}};
      },
      [](const Instance& i) { return is_self_adjoint(i[0].arrow); });
  ASSERT_EQ(res.status, LawStatus::Fail);
  const Arrow& f = res.witness[0].arrow;
  EXPECT_EQ(f.dom().size(), 2U);
  std::size_t nonzero = 0;
  for (const auto& s : f.entries()) nonzero += !s.is_zero();
  EXPECT_EQ(nonzero, 1U);

  LawReport report;
  report.config.backend = BackendId::Rat;
  report.results.push_back(res);
  auto dir = std::filesystem::temp_directory_path() / "qcat-witness-test";
  std::filesystem::remove_all(dir);
  auto files = write_witnesses(report, dir.string());
  ASSERT_EQ(files.count("fake-law"), 1U);
  auto back = read_arrow_file(files["fake-law"]);
  ASSERT_EQ(back.size(), 1U);
  EXPECT_EQ(back[0].arrow, f);
  EXPECT_NE(format_report(report, files).find("fake-law FAIL instances=1 witness=" + files["fake-law"]),
            std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Laws, GoldenBooleanArrow) {
  auto golden = read_arrow_file(std::string(QCAT_TEST_DATA) + "/golden/bool_2x2_seed7.arrows");
  ASSERT_EQ(golden.size(), 1U);
  EXPECT_EQ(generate_arrow(BackendId::Bool, make_object("a", 2), make_object("b", 2), 7), golden[0].arrow);
}

TEST(Fixtures, Findings) {
  auto fixtures = standard_fixtures();
  auto by_name = [&](std::string_view n) {
    return *std::find_if(fixtures.begin(), fixtures.end(), [&](const MonoidFixture& m) { return m.name == n; });
  };
  FixtureFindings z4 = analyze_fixture(by_name("z4"));
  EXPECT_TRUE(z4.category_axioms);
  EXPECT_EQ(z4.unitaries, (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(z4.zero_candidates.empty());
  EXPECT_FALSE(z4.has_u_coproduct);

  FixtureFindings one = analyze_fixture(by_name("singleton"));
  EXPECT_TRUE(one.trivial);
  EXPECT_TRUE(one.has_u_coproduct);

  FixtureFindings capped = analyze_fixture(by_name("capped-naturals"));
  EXPECT_EQ(capped.zero_candidates, (std::vector<std::size_t>{4}));
  EXPECT_FALSE(capped.trivial);
  EXPECT_FALSE(capped.has_u_coproduct);

  FixtureFindings bits = analyze_fixture(by_name("multiplicative-bits"));
  EXPECT_EQ(bits.zero_candidates, (std::vector<std::size_t>{0}));
  EXPECT_FALSE(bits.has_u_coproduct);

  MonoidFixture broken = by_name("z4");
  broken.table[1] = 3;
  EXPECT_FALSE(analyze_fixture(broken).category_axioms);
}

}  // namespace
