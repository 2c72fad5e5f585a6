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

#include "pma/distribution.h"

#include "gtest/gtest.h"
#include "pma/errors.h"
#include "test_util.h"

namespace pma {
namespace {

using testing::Vec;

TEST(RationalTest, Reduces) {
  EXPECT_EQ(Rational::Of(6, 9), (Rational{2, 3}));
  EXPECT_EQ(Rational::Of(0, 5), (Rational{0, 1}));
  EXPECT_EQ(Rational::Of(6, 9).ToString(), "2/3");
  EXPECT_THROW(Rational::Of(1, 0), DomainError);
}

TEST(DistributionMapTest, ProbabilitiesAndComparison) {
  DistributionMap a, b;
  a.Add(Vec({1}), 2);
  a.Add(Vec({2}));
  b.Add(Vec({1}), 4);
  b.Add(Vec({2}), 2);
  EXPECT_EQ(a.total(), 3u);
  EXPECT_EQ(a.Probability(Vec({1})), (Rational{2, 3}));
  EXPECT_EQ(a.Probability(Vec({0})), (Rational{0, 1}));
  EXPECT_TRUE(a.SameAs(b));
  EXPECT_FALSE(a.FirstDifference(b).has_value());
  b.Add(Vec({0}));
  EXPECT_FALSE(a.SameAs(b));
  EXPECT_EQ(a.FirstDifference(b), Vec({0}));
}

TEST(EnumerateTest, SumOfTwoUniformsIsUniform) {
  const PrimeField f3(3);
  const auto d = EnumerateDistribution(f3, 2, [&](std::span<const FieldElement> r, FieldVector& v) {
    v.push_back(f3.Add(r[0], r[1]));
  });
  EXPECT_EQ(d.total(), 9u);
  ASSERT_EQ(d.counts().size(), 3u);
  for (const auto& [view, count] : d.counts()) EXPECT_EQ(count, 3u);
}

TEST(EnumerateTest, ProductIsNotUniform) {
  const PrimeField f3(3);
  const auto d = EnumerateDistribution(f3, 2, [&](std::span<const FieldElement> r, FieldVector& v) {
    v.push_back(f3.Mul(r[0], r[1]));
  });
  // Zero arises for 5 of the 9 pairs.
  EXPECT_EQ(d.Probability(Vec({0})), (Rational{5, 9}));
}

TEST(EnumerateTest, VisitsEveryAssignmentOnce) {
  const PrimeField f5(5);
  const auto d = EnumerateDistribution(f5, 3, [](std::span<const FieldElement> r, FieldVector& v) {
    v.assign(r.begin(), r.end());
  });
  EXPECT_EQ(d.total(), 125u);
  EXPECT_EQ(d.counts().size(), 125u);
}

TEST(EnumerateTest, ZeroDimensionsIsOnePoint) {
  const PrimeField f5(5);
  const auto d = EnumerateDistribution(f5, 0, [](std::span<const FieldElement>, FieldVector& v) {
    v.push_back(FieldElement(4));
  });
  EXPECT_EQ(d.total(), 1u);
  EXPECT_EQ(d.Probability(Vec({4})), (Rational{1, 1}));
}

TEST(EnumerateTest, CapIsEnforced) {
  const PrimeField f3(3);
  auto noop = [](std::span<const FieldElement>, FieldVector&) {};
  EXPECT_THROW(EnumerateDistribution(f3, 5, noop, 100), AuditInfeasibleError);
  EXPECT_NO_THROW(EnumerateDistribution(f3, 4, noop, 81));
}

TEST(EnumerateTest, AssignmentCount) {
  EXPECT_EQ(AssignmentCount(3, 4), 81u);
  EXPECT_EQ(AssignmentCount(5, 0), 1u);
  EXPECT_FALSE(AssignmentCount(3, 64).has_value());
}

}  // namespace
}  // namespace pma
