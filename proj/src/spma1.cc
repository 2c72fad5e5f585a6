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

#include <string>

#include "pma/errors.h"

namespace pma::spma1 {

PartyNoise GenerateNoise(const SchemeContext& ctx, RandomSource& rng) {
  PartyNoise out;
  for (size_t i = 0; i < ctx.params.parties; ++i) {
    out.zprime.push_back(rng.UniformVector(ctx.field, ctx.params.databases - 1));
  }
  return out;
}

FieldElement Answer(const PrimeField& field, const IncidenceVector& incidence,
                    std::span<const FieldElement> query,
                    std::span<const FieldElement> zprime, FieldElement mask,
                    FieldElement alpha) {
  FieldElement acc = pma1::Answer(field, incidence, query, mask);
  const FieldElement x = field.Add(alpha, FieldElement(1));
  FieldElement power = x;
  for (FieldElement z : zprime) {
    acc = field.Add(acc, field.Mul(power, z));
    power = field.Mul(power, x);
  }
  return acc;
}

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng) {
  Randomness r;
  r.base = pma1::SampleRandomness(ctx, rng);
  r.noise = GenerateNoise(ctx, rng);
  return r;
}

Randomness ZeroRandomness(const SchemeContext& ctx) {
  Randomness r;
  r.base = pma1::ZeroRandomness(ctx);
  r.noise.zprime.assign(ctx.params.parties, FieldVector(ctx.params.databases - 1));
  return r;
}

void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript) {
  const auto& params = ctx.params;
  if (randomness.noise.zprime.size() != params.parties) {
    throw ParameterError("Z' needs one row per party");
  }
  for (const auto& row : randomness.noise.zprime) {
    if (row.size() + 1 != params.databases) {
      throw ParameterError("Z' rows need N - 1 = " +
                           std::to_string(params.databases - 1) + " entries");
    }
  }
  pma1::internal::RunTypeOne(ctx, incidences, theta, randomness.base,
                             &randomness.noise.zprime, transcript);
}

pma1::Execution Execute(const SchemeContext& ctx,
                        std::span<const IncidenceVector> incidences, size_t theta,
                        const Randomness& randomness) {
  pma1::Execution out;
  Run(ctx, incidences, theta, randomness, out.transcript);
  out.count = Decode(ctx, pma1::CollectAnswers(ctx, out.transcript));
  return out;
}

}  // namespace pma::spma1
