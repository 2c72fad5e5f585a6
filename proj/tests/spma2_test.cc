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

#include "pma/spma2.h"

#include <vector>

#include "gtest/gtest.h"
#include "pma/audit.h"
#include "pma/errors.h"
#include "pma/random_source.h"
#include "test_util.h"

namespace pma {
namespace {

using testing::Bits;
using testing::BruteCount;
using testing::Ctx;
using testing::EvalPoly;
using testing::ExampleParties;
using testing::Params;
using testing::Vec;

TEST(Spma2CountTest, EffectiveDatabases) {
  EXPECT_EQ(spma2::EffectiveDatabaseCount(Params(Variant::kSpma2, 3, 1, 1, 0, 2)), 3u);
  EXPECT_EQ(spma2::EffectiveDatabaseCount(Params(Variant::kSpma2, 3, 2, 1, 0, 2)), 5u);
  EXPECT_EQ(spma2::EffectiveDatabaseCount(Params(Variant::kSpma2, 2, 3, 0, 0, 2)), 4u);
  EXPECT_THROW(spma2::EffectiveDatabaseCount(Params(Variant::kSpma2, 2, 1, 1, 0, 2)),
               ParameterError);
}

TEST(Spma2StorageTest, ZeroNoiseReplicates) {
  const auto ctx = Ctx(Variant::kSpma2, 3, 1, 1, 0, 3);
  const std::vector<FieldVector> noise{Vec({0, 0, 0})};
  const auto s = spma2::EncodeStorage(ctx.field, ctx.alphas, Bits({1, 0, 1}), 3, noise);
  ASSERT_EQ(s.shares.size(), 3u);
  for (const auto& share : s.shares) EXPECT_EQ(share, Vec({1, 0, 1}));
}

TEST(Spma2StorageTest, SmallFieldExample) {
  const PrimeField f5(5);
  const EvalPoints alphas(f5, Vec({1}));
  const std::vector<FieldVector> noise{Vec({2})};
  const auto s = spma2::EncodeStorage(f5, alphas, Bits({1}), 1, noise);
  EXPECT_EQ(s.shares[0], Vec({0}));
}

TEST(Spma2StorageTest, Reproducible) {
  const auto ctx = Ctx(Variant::kSpma2, 3, 2, 1, 0, 4);
  RandomSource a(31), b(31);
  EXPECT_EQ(spma2::EncodeStorage(ctx, Bits({1, 1, 0, 0}), a).shares,
            spma2::EncodeStorage(ctx, Bits({1, 1, 0, 0}), b).shares);
}

TEST(Spma2AggregateTest, Examples) {
  const PrimeField f5(5);
  const std::vector<FieldVector> one{Vec({3, 1})};
  EXPECT_EQ(spma2::Aggregate(f5, one, 1), Vec({3, 1}));
  const std::vector<FieldVector> sets{Vec({1, 1, 1, 1, 1}), Vec({0, 1, 1, 1, 0})};
  EXPECT_EQ(spma2::Aggregate(f5, sets, 2), Vec({1, 2, 2, 2, 1}));
  EXPECT_THROW(spma2::Aggregate(f5, one, 2), ProtocolError);
}

TEST(Spma2QueriesTest, ZeroNoiseAndDegree) {
  const auto ctx = Ctx(Variant::kSpma2, 3, 1, 1, 0, 2);
  const std::vector<FieldVector> noise{Vec({0, 0})};
  const auto q = spma2::BuildQueries(ctx, 2, noise);
  EXPECT_EQ(q.mu, 1u);
  ASSERT_EQ(q.queries.size(), 3u);
  for (const auto& v : q.queries) EXPECT_EQ(v, Vec({0, 1}));
}

TEST(Spma2AnswerTest, Examples) {
  const PrimeField f7(7);
  EXPECT_EQ(spma2::Answer(f7, Vec({1, 2, 0}), Vec({0, 1, 0}), Vec({0, 0}), FieldElement(3)),
            FieldElement(2));
  // Noise only: 3 * 4 + 9 * 1 with 1 + alpha = 3.
  EXPECT_EQ(spma2::Answer(f7, Vec({0, 0}), Vec({0, 0}), Vec({4, 1}), FieldElement(2)),
            FieldElement(0));
}

TEST(Spma2DecodeTest, RecoversConstantCoefficient) {
  const auto ctx = SchemeContext::Create(Params(Variant::kSpma2, 3, 1, 1, 0, 2, 7),
                                         Vec({1, 2, 3}));
  const FieldVector poly = Vec({2, 5, 3});
  FieldVector answers;
  for (size_t n = 0; n < 3; ++n) {
    answers.push_back(EvalPoly(ctx.field, poly, ctx.alphas.Shifted(n)));
  }
  EXPECT_EQ(spma2::Decode(ctx, answers), 2u);
  EXPECT_THROW(spma2::Decode(ctx, Vec({1, 2})), ProtocolError);
}

TEST(Spma2DecodeTest, ExampleParties) {
  // Without collusion two parties with one database each suffice.
  const auto ctx = Ctx(Variant::kSpma2, 2, 1, 0, 0, 5);
  RandomSource rng(5);
  const auto run =
      spma2::Execute(ctx, ExampleParties(), 2, spma2::SampleRandomness(ctx, rng));
  EXPECT_EQ(run.count, 2u);
  const auto none = spma2::Execute(ctx, ExampleParties(), 1, spma2::SampleRandomness(ctx, rng));
  EXPECT_EQ(none.count, 1u);
  const std::vector<IncidenceVector> empty(2, Bits({0, 0, 0, 0, 0}));
  EXPECT_EQ(spma2::Execute(ctx, empty, 3, spma2::SampleRandomness(ctx, rng)).count, 0u);
}

TEST(Spma2RunTest, ExhaustiveCorrectness) {
  const auto ctx = Ctx(Variant::kSpma2, 3, 1, 1, 0, 2);
  for (const auto& parties : AllIncidenceAssignments(3, 2)) {
    for (size_t theta = 1; theta <= 2; ++theta) {
      for (uint64_t seed = 0; seed < 3; ++seed) {
        RandomSource rng(seed);
        const auto run =
            spma2::Execute(ctx, parties, theta, spma2::SampleRandomness(ctx, rng));
        ASSERT_EQ(run.count, BruteCount(parties, theta));
        EXPECT_EQ(run.transcript.Count(LinkKind::kAnswer), 3u);
      }
    }
  }
}

TEST(Spma2RunTest, AnswerPolynomialDegreeAndValues) {
  const auto ctx = Ctx(Variant::kSpma2, 4, 2, 1, 1, 3, 11);
  const size_t n_eff = ctx.params.effective_databases;
  ASSERT_EQ(n_eff, 2u + 2u + 1u);
  RandomSource rng(44);
  const std::vector<IncidenceVector> parties{Bits({1, 0, 1}), Bits({0, 1, 1}),
                                             Bits({1, 1, 1}), Bits({0, 0, 1})};
  for (size_t theta = 1; theta <= 3; ++theta) {
    const auto r = spma2::SampleRandomness(ctx, rng);
    const auto run = spma2::Execute(ctx, parties, theta, r);
    const FieldVector answers = spma2::CollectAnswers(ctx, run.transcript);

    // Naive convolution of the aggregated storage and query polynomials.
    const auto& f = ctx.field;
    std::vector<FieldVector> storage(1 + 2, FieldVector(3));
    for (size_t i = 0; i < 4; ++i) {
      for (size_t k = 0; k < 3; ++k) {
        storage[0][k] = f.Add(storage[0][k], FieldElement(parties[i].bits[k]));
        for (size_t a = 1; a <= 2; ++a) {
          storage[a][k] = f.Add(storage[a][k], r.storage_noise[i][a - 1][k]);
        }
      }
    }
    std::vector<FieldVector> query{f.UnitVector(3, theta - 1)};
    for (const auto& z : r.query_noise) query.push_back(z);
    FieldVector coeffs(storage.size() + query.size() - 1);
    for (size_t a = 0; a < storage.size(); ++a) {
      for (size_t b = 0; b < query.size(); ++b) {
        for (size_t k = 0; k < 3; ++k) {
          coeffs[a + b] = f.Add(coeffs[a + b], f.Mul(storage[a][k], query[b][k]));
        }
      }
    }
    for (size_t k = 0; k < r.zprime.size(); ++k) {
      coeffs[k + 1] = f.Add(coeffs[k + 1], r.zprime[k]);
    }
    ASSERT_EQ(coeffs.size(), n_eff);
    EXPECT_EQ(coeffs[0], FieldElement(static_cast<uint32_t>(BruteCount(parties, theta))));
    EXPECT_EQ(audit::ExpandAnswerPolynomial(f, storage, query, r.zprime), coeffs);
    for (size_t n = 0; n < n_eff; ++n) {
      EXPECT_EQ(answers[n], EvalPoly(f, coeffs, ctx.alphas.Shifted(n)));
    }
  }
}

TEST(Spma2RunTest, ExtraDatabasesStayIdle) {
  const auto ctx = Ctx(Variant::kSpma2, 3, 2, 1, 0, 2);
  ASSERT_EQ(ctx.params.effective_databases, 5u);
  RandomSource rng(2);
  const std::vector<IncidenceVector> parties(3, Bits({1, 1}));
  const auto run = spma2::Execute(ctx, parties, 1, spma2::SampleRandomness(ctx, rng));
  EXPECT_FALSE(run.transcript.Touches(2, 1));
  for (size_t n = 0; n < 5; ++n) EXPECT_TRUE(run.transcript.Touches(n / 2, n % 2));
  EXPECT_EQ(run.count, 3u);
}

TEST(Spma2RunTest, CommunicatingPartiesWidenStorageNoise) {
  auto params = Params(Variant::kSpma2, 4, 1, 1, 0, 2);
  params.communicating_parties = 2;
  const auto ctx = SchemeContext::Create(params);
  EXPECT_EQ(ctx.params.effective_databases, 4u);
  RandomSource rng(10);
  for (const auto& parties : AllIncidenceAssignments(4, 2)) {
    const auto r = spma2::SampleRandomness(ctx, rng);
    ASSERT_EQ(r.storage_noise[0].size(), 2u);
    for (size_t theta = 1; theta <= 2; ++theta) {
      ASSERT_EQ(spma2::Execute(ctx, parties, theta, r).count, BruteCount(parties, theta));
    }
  }
}

TEST(Spma2RunTest, Pma2IsAnAlias) {
  const auto a = Ctx(Variant::kSpma2, 3, 1, 1, 0, 2);
  const auto b = Ctx(Variant::kPma2, 3, 1, 1, 0, 2);
  RandomSource r1(3), r2(3);
  const std::vector<IncidenceVector> parties{Bits({1, 0}), Bits({1, 1}), Bits({0, 1})};
  const auto x = spma2::Execute(a, parties, 2, spma2::SampleRandomness(a, r1));
  const auto y = spma2::Execute(b, parties, 2, spma2::SampleRandomness(b, r2));
  EXPECT_EQ(spma2::CollectAnswers(a, x.transcript), spma2::CollectAnswers(b, y.transcript));
}

}  // namespace
}  // namespace pma
