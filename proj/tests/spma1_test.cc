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

#include "pma/spma1.h"

#include <vector>

#include "gtest/gtest.h"
#include "pma/errors.h"
#include "pma/pma1.h"
#include "pma/random_source.h"
#include "test_util.h"

namespace pma {
namespace {

using testing::Bits;
using testing::BruteCount;
using testing::Ctx;
using testing::ExampleParties;
using testing::Vec;

TEST(Spma1NoiseTest, Shapes) {
  RandomSource rng(3);
  const auto one_db = spma1::GenerateNoise(Ctx(Variant::kSpma1, 3, 1, 0, 0, 2), rng);
  ASSERT_EQ(one_db.zprime.size(), 3u);
  for (const auto& row : one_db.zprime) EXPECT_TRUE(row.empty());

  const auto small = spma1::GenerateNoise(Ctx(Variant::kSpma1, 2, 2, 1, 0, 2, 3), rng);
  ASSERT_EQ(small.zprime.size(), 2u);
  for (const auto& row : small.zprime) {
    ASSERT_EQ(row.size(), 1u);
    EXPECT_LT(row[0].value, 3u);
  }
}

TEST(Spma1NoiseTest, Reproducible) {
  const auto ctx = Ctx(Variant::kSpma1, 4, 3, 2, 0, 2);
  RandomSource a(12), b(12);
  EXPECT_EQ(spma1::GenerateNoise(ctx, a).zprime, spma1::GenerateNoise(ctx, b).zprime);
}

TEST(Spma1AnswerTest, Examples) {
  const PrimeField f5(5);
  const auto p = Bits({1, 0});
  EXPECT_EQ(spma1::Answer(f5, p, Vec({1, 0}), Vec({0}), FieldElement(0), FieldElement(1)),
            FieldElement(1));
  // 1 + 2 * 2 with 1 + alpha = 2.
  EXPECT_EQ(spma1::Answer(f5, p, Vec({1, 0}), Vec({2}), FieldElement(0), FieldElement(1)),
            FieldElement(0));
  // Noise only: 2 * 3 + 4 * 1 with 1 + alpha = 2.
  EXPECT_EQ(
      spma1::Answer(f5, p, Vec({0, 0}), Vec({3, 1}), FieldElement(0), FieldElement(1)),
      FieldElement(0));
  EXPECT_EQ(
      spma1::Answer(f5, p, Vec({0, 0}), Vec({1, 1}), FieldElement(0), FieldElement(2)),
      FieldElement(2));
  EXPECT_THROW(spma1::Answer(f5, p, Vec({0}), Vec({}), FieldElement(0), FieldElement(1)),
               ParameterError);
}

TEST(Spma1DecodeTest, ExampleParties) {
  const auto ctx = Ctx(Variant::kSpma1, 2, 2, 1, 0, 5);
  RandomSource rng(6);
  const auto run =
      spma1::Execute(ctx, ExampleParties(), 4, spma1::SampleRandomness(ctx, rng));
  EXPECT_EQ(run.count, 2u);
}

TEST(Spma1DecodeTest, EmptyParties) {
  const auto ctx = Ctx(Variant::kSpma1, 3, 3, 2, 1, 2);
  const std::vector<IncidenceVector> empty(3, Bits({0, 0}));
  RandomSource rng(6);
  EXPECT_EQ(spma1::Execute(ctx, empty, 2, spma1::SampleRandomness(ctx, rng)).count, 0u);
}

TEST(Spma1RunTest, ZeroNoiseReproducesPma1) {
  RandomSource rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t m = 2 + rng.NextWord() % 4;
    const size_t t = rng.NextWord() % 3;
    const size_t e = 1 + rng.NextWord() % 4;
    const auto ctx1 = Ctx(Variant::kPma1, m, t + 1, t, 0, e, 13);
    const auto ctx2 = Ctx(Variant::kSpma1, m, t + 1, t, 0, e, 13);
    std::vector<IncidenceVector> parties;
    for (size_t i = 0; i < m; ++i) {
      IncidenceVector v{std::vector<uint8_t>(e)};
      for (auto& b : v.bits) b = rng.Bernoulli(0.5);
      parties.push_back(v);
    }
    const size_t theta = 1 + rng.NextWord() % e;
    auto r = spma1::SampleRandomness(ctx2, rng);
    for (auto& row : r.noise.zprime) std::fill(row.begin(), row.end(), FieldElement(0));
    const auto a = pma1::Execute(ctx1, parties, theta, r.base);
    const auto b = spma1::Execute(ctx2, parties, theta, r);
    EXPECT_EQ(pma1::CollectAnswers(ctx1, a.transcript),
              pma1::CollectAnswers(ctx2, b.transcript));
    EXPECT_EQ(a.count, b.count);
  }
}

TEST(Spma1RunTest, ExhaustiveCorrectness) {
  for (size_t m : {2, 3}) {
    for (size_t e : {1, 2}) {
      const auto ctx = Ctx(Variant::kSpma1, m, 2, 1, 1, e);
      for (const auto& parties : AllIncidenceAssignments(m, e)) {
        for (size_t theta = 1; theta <= e; ++theta) {
          for (uint64_t seed = 0; seed < 3; ++seed) {
            RandomSource rng(seed);
            const auto run =
                spma1::Execute(ctx, parties, theta, spma1::SampleRandomness(ctx, rng));
            ASSERT_EQ(run.count, BruteCount(parties, theta));
          }
        }
      }
    }
  }
}

TEST(Spma1RunTest, SameDownloadAsPma1) {
  for (size_t m = 2; m <= 6; ++m) {
    for (size_t t = 0; t <= 2; ++t) {
      for (size_t y = 0; y <= 2; ++y) {
        const size_t n = std::max(t, y) + 1;
        const auto ctx = Ctx(Variant::kSpma1, m, n, t, y, 2);
        RandomSource rng(m * 9 + t * 3 + y);
        const std::vector<IncidenceVector> parties(m, Bits({1, 0}));
        const auto run =
            spma1::Execute(ctx, parties, 1, spma1::SampleRandomness(ctx, rng));
        EXPECT_EQ(run.transcript.Count(LinkKind::kAnswer), m * n);
        EXPECT_EQ(run.transcript.Count(LinkKind::kPartyNoise), m * (n - 1));
      }
    }
  }
}

TEST(Spma1RunTest, RejectsWrongNoiseShape) {
  const auto ctx = Ctx(Variant::kSpma1, 2, 2, 1, 0, 2);
  auto r = spma1::ZeroRandomness(ctx);
  r.noise.zprime[0].push_back(FieldElement(1));
  Transcript t;
  const std::vector<IncidenceVector> parties(2, Bits({1, 0}));
  EXPECT_THROW(spma1::Run(ctx, parties, 1, r, t), ParameterError);
}

}  // namespace
}  // namespace pma
