// Copyright 2026 The PMA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pma/harness.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "pma/errors.h"
#include "test_util.h"

namespace pma::harness {
namespace {

using nlohmann::json;
using pma::testing::AutoCtx;
using pma::testing::ExampleParties;
using pma::testing::Params;

// Independent closed forms for the total communication cost.
uint64_t ExpectedTotal(Variant v, uint64_t m, uint64_t n, uint64_t e, uint64_t mu,
                       uint64_t t2) {
  switch (v) {
    case Variant::kPma1:
      return (m - 1) * n + e * m * n + m * n;
    case Variant::kSpma1:
      return (m - 1) * n + e * m * n + m * n + n - 1;
    default: {
      const uint64_t d = t2 * n;
      return (e + 1) * (d + mu + 1) + d + mu;
    }
  }
}

TEST(RunConfigTest, ParsesKeysAndAutoValues) {
  const auto c = ParseRunConfig(json::parse(R"({
      "variant": "spma2", "M": 3, "N": "auto", "T": 1, "Y": [0, 1, 2], "T2": 1,
      "E": 4, "p": "auto", "theta": 2, "seed": 9, "pk": [0.25],
      "audits": ["lemma5"], "transcript": true})"));
  EXPECT_EQ(c.variant, Variant::kSpma2);
  EXPECT_EQ(c.parties, 3u);
  EXPECT_FALSE(c.databases.has_value());
  EXPECT_EQ(c.eavesdrop, (std::vector<size_t>{0, 1, 2}));
  EXPECT_EQ(c.universe, 4u);
  EXPECT_FALSE(c.modulus.has_value());
  EXPECT_EQ(c.theta, 2u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.probabilities, (std::vector<double>{0.25}));
  EXPECT_EQ(c.audits, (std::vector<std::string>{"lemma5"}));
  EXPECT_TRUE(c.include_transcript);
  EXPECT_EQ(ParseRunConfig(c.ToJson()).ToJson(), c.ToJson());
}

TEST(RunConfigTest, RejectsBadInput) {
  EXPECT_THROW(ParseRunConfig(json::parse(R"({"colusion": 1})")), ParameterError);
  EXPECT_THROW(ParseRunConfig(json::parse(R"({"variant": "pma3"})")), ParameterError);
  EXPECT_THROW(ParseRunConfig(json::parse(R"({"M": -2})")), ParameterError);
  EXPECT_THROW(ParseRunConfig(json::parse("[1]")), ParameterError);
  EXPECT_THROW(LoadRunConfig("/nonexistent/config.json"), ParameterError);
}

TEST(RunProtocolTest, ExamplePartiesCountSharedElement) {
  const auto parties = ExampleParties();
  for (Variant v : {Variant::kPma1, Variant::kSpma1, Variant::kSpma2}) {
    const size_t t = v == Variant::kSpma2 ? 0 : 1;
    const auto ctx = AutoCtx(v, 2, t, 1, 5);
    RandomSource rng(3, 3);
    EXPECT_EQ(RunProtocol(ctx, parties, 3, rng).count, 2u) << VariantName(v);
    RandomSource rng1(3, 1);
    EXPECT_EQ(RunProtocol(ctx, parties, 1, rng1).count, 1u) << VariantName(v);
  }
}

TEST(CostTest, MatchesClosedForms) {
  for (Variant v : {Variant::kPma1, Variant::kSpma1, Variant::kSpma2}) {
    for (size_t m = 2; m <= 4; ++m) {
      for (size_t t = 0; t <= 2; ++t) {
        if (v == Variant::kSpma2 && m < t + 2) continue;
        for (size_t e = 1; e <= 3; ++e) {
          const auto ctx = AutoCtx(v, m, t, 1, e);
          const auto& p = ctx.params;
          std::vector<IncidenceVector> inc(m, IncidenceVector{std::vector<uint8_t>(e, 1)});
          RandomSource rng(5, 1);
          const auto run = RunProtocol(ctx, inc, 1, rng);
          const uint64_t mu = v == Variant::kSpma2 ? std::max(t * p.databases, size_t{1})
                                                   : std::max(t, size_t{1});
          const uint64_t want = ExpectedTotal(v, m, p.databases, e, mu, 1);
          EXPECT_EQ(run.cost.total, want) << VariantName(v) << " M=" << m << " T=" << t;
          EXPECT_EQ(run.cost.formula_total, want);
          EXPECT_EQ(FormulaTotal(p), want);
          EXPECT_EQ(run.cost.download, p.DownloadBound());
          EXPECT_EQ(run.cost.total,
                    run.cost.download + run.cost.upload + run.cost.randomness_sharing);
        }
      }
    }
  }
}

TEST(CostTest, SingleElementSingleParty) {
  // SPMA-II with M=3, N=1, T=1, Y=0 downloads N + TN + 1 = 3 symbols.
  const auto ctx = SchemeContext::Create(Params(Variant::kSpma2, 3, 1, 1, 0, 1));
  const std::vector<IncidenceVector> inc(3, IncidenceVector{{1}});
  RandomSource rng(1, 1);
  const auto run = RunProtocol(ctx, inc, 1, rng);
  EXPECT_EQ(run.count, 3u);
  EXPECT_EQ(run.cost.download, 3u);
  EXPECT_GT(run.cost.storage_distribution, 0u);
}

TEST(CostTableTest, TypeOneIsExactlyLinear) {
  for (Variant v : {Variant::kPma1, Variant::kSpma1}) {
    CostSweep s;
    s.variant = v;
    const auto table = BuildCostTable(s);
    ASSERT_EQ(table.rows.size(), 5u);
    std::vector<uint64_t> downloads;
    for (const auto& r : table.rows) {
      EXPECT_TRUE(r.valid) << r.error;
      downloads.push_back(r.cost.download);
      EXPECT_EQ(r.contrast, r.parties * r.parties * 1);
    }
    EXPECT_EQ(downloads, (std::vector<uint64_t>{4, 6, 8, 10, 12}));
    EXPECT_TRUE(table.linear);
    EXPECT_DOUBLE_EQ(table.slope, 2.0);
    EXPECT_DOUBLE_EQ(table.residual, 0.0);
  }
}

TEST(CostTableTest, TypeTwoDownloadIsConstant) {
  CostSweep s;
  s.variant = Variant::kSpma2;
  s.m_first = 3;
  s.databases = 1;
  const auto table = BuildCostTable(s);
  for (const auto& r : table.rows) {
    ASSERT_TRUE(r.valid) << r.error;
    EXPECT_EQ(r.cost.download, 3u);
  }
  EXPECT_FALSE(table.linear);
  EXPECT_NE(table.ToCsv().find("download"), std::string::npos);
}

TEST(CostTableTest, InvalidRowsAreReported) {
  CostSweep s;
  s.variant = Variant::kSpma2;
  s.m_first = 2;
  s.m_last = 3;
  s.databases = 1;
  s.collusion = 2;
  const auto table = BuildCostTable(s);
  ASSERT_EQ(table.rows.size(), 2u);
  EXPECT_FALSE(table.rows[0].valid);
  EXPECT_FALSE(table.rows[0].error.empty());
}

TEST(RunConfiguredTest, DeterministicAndCorrect) {
  RunConfig c;
  c.variant = Variant::kSpma1;
  c.parties = 3;
  c.universe = 4;
  c.seed = 11;
  c.include_transcript = true;
  const auto a = RunConfigured(c);
  const auto b = RunConfigured(c);
  EXPECT_TRUE(a.all_correct());
  EXPECT_EQ(a.outcomes.size(), 4u);
  EXPECT_EQ(a.ToJson().dump(), b.ToJson().dump());
  EXPECT_EQ(a.ToJson()["schema_version"].get<int>(), kSchemaVersion);
  c.seed = 12;
  EXPECT_NE(RunConfigured(c).ToJson().dump(), a.ToJson().dump());
}

TEST(RunConfiguredTest, DatasetsFile) {
  RunConfig c;
  c.datasets_path = std::string(PMA_TESTDATA_DIR) + "/example_parties.json";
  c.theta = 3;
  const auto r = RunConfigured(c);
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].element, "c");
  EXPECT_EQ(r.outcomes[0].count, 2u);
  c.parties = 3;
  EXPECT_THROW(RunConfigured(c), ParameterError);
  c.parties.reset();
  c.theta = 6;
  EXPECT_THROW(RunConfigured(c), ParameterError);
}

TEST(AuditSuiteTest, SelectionByNameAuditAndLemma) {
  SuiteOptions o;
  o.selection = {"symmetric_privacy_pma1"};
  auto r = RunAuditSuite(o);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_TRUE(r.entries[0].negative_control);
  EXPECT_TRUE(r.entries[0].as_expected());
  EXPECT_TRUE(r.all_as_expected());

  o.selection = {"lemma4"};
  r = RunAuditSuite(o);
  EXPECT_GE(r.entries.size(), 3u);
  for (const auto& e : r.entries) EXPECT_EQ(e.lemma, 4);
  EXPECT_TRUE(r.all_as_expected());

  o.selection = {};
  EXPECT_TRUE(RunAuditSuite(o).entries.empty());
  o.selection = {"no_such_audit"};
  EXPECT_THROW(RunAuditSuite(o), ParameterError);
}

TEST(AuditSuiteTest, CapTurnsIntoRecordedError) {
  SuiteOptions o;
  o.cap = 5;
  o.selection = {"blind_estimation_pma1"};
  const auto r = RunAuditSuite(o);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_FALSE(r.entries[0].error.empty());
  EXPECT_FALSE(r.entries[0].as_expected());
  EXPECT_FALSE(r.ToJson()["entries"].empty());
}

TEST(AuditSuiteTest, EveryCaseHasALemma) {
  for (const auto& c : DefaultSuite()) {
    EXPECT_GE(c.lemma, 1) << c.name;
    EXPECT_LE(c.lemma, 7) << c.name;
  }
}

}  // namespace
}  // namespace pma::harness
