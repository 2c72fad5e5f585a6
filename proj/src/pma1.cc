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

#include "pma/pma1.h"

#include <string>
#include <utility>

#include "pma/errors.h"

namespace pma::pma1 {
namespace {

void CheckTheta(const SchemeParams& params, size_t theta) {
  if (theta < 1 || theta > params.universe) {
    throw ParameterError("theta = " + std::to_string(theta) + " outside 1.." +
                         std::to_string(params.universe));
  }
}

void CheckIncidences(const SchemeParams& params,
                     std::span<const IncidenceVector> incidences) {
  if (incidences.size() != params.parties) {
    throw ParameterError("expected " + std::to_string(params.parties) +
                         " incidence vectors, got " +
                         std::to_string(incidences.size()));
  }
  for (const auto& p : incidences) {
    if (p.size() != params.universe) {
      throw ParameterError("incidence vector has length " + std::to_string(p.size()) +
                           ", universe has " + std::to_string(params.universe));
    }
  }
}

}  // namespace

QuerySet BuildQueries(const SchemeContext& ctx, size_t theta,
                      std::span<const std::vector<FieldVector>> noise) {
  const auto& params = ctx.params;
  const auto& field = ctx.field;
  CheckTheta(params, theta);
  const size_t mu = params.QueryNoiseDegree();
  if (noise.size() != params.parties) {
    throw ParameterError("query noise needs one row per party");
  }
  for (const auto& row : noise) {
    if (row.size() != mu) {
      throw ParameterError("query noise needs mu = " + std::to_string(mu) +
                           " vectors per party");
    }
  }

  QuerySet out;
  out.mu = mu;
  out.queries.assign(params.parties, {});
  const FieldVector unit = field.UnitVector(params.universe, theta - 1);
  for (size_t i = 0; i < params.parties; ++i) {
    out.queries[i].reserve(params.databases);
    for (size_t j = 0; j < params.databases; ++j) {
      FieldVector q = unit;
      const FieldElement x = ctx.alphas.Shifted(j);
      FieldElement power = x;
      for (size_t l = 0; l < mu; ++l) {
        field.AddScaled(q, power, noise[i][l]);
        power = field.Mul(power, x);
      }
      out.queries[i].push_back(std::move(q));
    }
  }
  return out;
}

QuerySet GenerateQueries(const SchemeContext& ctx, size_t theta, RandomSource& rng) {
  const auto& params = ctx.params;
  std::vector<std::vector<FieldVector>> noise(params.parties);
  for (auto& row : noise) {
    for (size_t l = 0; l < params.QueryNoiseDegree(); ++l) {
      row.push_back(rng.UniformVector(ctx.field, params.universe));
    }
  }
  return BuildQueries(ctx, theta, noise);
}

MaskingVectors CompleteMasks(const PrimeField& field,
                             std::vector<FieldVector> free_shares) {
  if (free_shares.empty()) throw ParameterError("masking needs at least two parties");
  const size_t n = free_shares.front().size();
  FieldVector last(n);
  for (const auto& s : free_shares) {
    if (s.size() != n) throw ParameterError("mask shares differ in length");
    for (size_t j = 0; j < n; ++j) last[j] = field.Sub(last[j], s[j]);
  }
  MaskingVectors out{std::move(free_shares)};
  out.shares.push_back(std::move(last));
  return out;
}

MaskingVectors GenerateMasks(const SchemeContext& ctx, RandomSource& rng) {
  std::vector<FieldVector> free_shares;
  for (size_t i = 0; i + 1 < ctx.params.parties; ++i) {
    free_shares.push_back(rng.UniformVector(ctx.field, ctx.params.databases));
  }
  return CompleteMasks(ctx.field, std::move(free_shares));
}

FieldElement Answer(const PrimeField& field, const IncidenceVector& incidence,
                    std::span<const FieldElement> query, FieldElement mask) {
  if (incidence.size() != query.size()) {
    throw ParameterError("incidence vector has length " +
                         std::to_string(incidence.size()) + ", query has " +
                         std::to_string(query.size()));
  }
  FieldElement acc = mask;
  for (size_t k = 0; k < query.size(); ++k) {
    if (incidence.bits[k]) acc = field.Add(acc, query[k]);
  }
  return acc;
}

size_t Decode(const SchemeContext& ctx, const std::vector<FieldVector>& answers) {
  const auto& params = ctx.params;
  const auto& field = ctx.field;
  if (answers.size() != params.parties) {
    throw ProtocolError("expected answers from " + std::to_string(params.parties) +
                        " parties, got " + std::to_string(answers.size()));
  }
  FieldVector summed(params.databases);
  for (size_t i = 0; i < params.parties; ++i) {
    if (answers[i].size() != params.databases) {
      throw ProtocolError("party " + std::to_string(i + 1) + " returned " +
                          std::to_string(answers[i].size()) + " of " +
                          std::to_string(params.databases) + " answers");
    }
    for (size_t j = 0; j < params.databases; ++j) {
      summed[j] = field.Add(summed[j], answers[i][j]);
    }
  }
  const Matrix upsilon = BuildUpsilon(field, ctx.alphas.values(), params.databases);
  const FieldVector coefficients = SolveLinear(field, upsilon, summed);
  const uint32_t count = coefficients[0].value;
  if (count > params.parties) {
    throw IntegrityError("decoded count " + std::to_string(count) +
                         " exceeds the number of parties " +
                         std::to_string(params.parties));
  }
  return count;
}

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng) {
  const auto& params = ctx.params;
  Randomness r;
  r.query_noise.resize(params.parties);
  for (auto& row : r.query_noise) {
    for (size_t l = 0; l < params.QueryNoiseDegree(); ++l) {
      row.push_back(rng.UniformVector(ctx.field, params.universe));
    }
  }
  for (size_t i = 0; i + 1 < params.parties; ++i) {
    r.free_masks.push_back(rng.UniformVector(ctx.field, params.databases));
  }
  return r;
}

Randomness ZeroRandomness(const SchemeContext& ctx) {
  const auto& params = ctx.params;
  Randomness r;
  r.query_noise.assign(params.parties,
                       std::vector<FieldVector>(params.QueryNoiseDegree(),
                                                FieldVector(params.universe)));
  r.free_masks.assign(params.parties - 1, FieldVector(params.databases));
  return r;
}

namespace internal {

void RunTypeOne(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
                size_t theta, const Randomness& randomness,
                const std::vector<FieldVector>* zprime, Transcript& transcript) {
  const auto& params = ctx.params;
  const auto& field = ctx.field;
  CheckIncidences(params, incidences);
  transcript.Clear();
  transcript.Reserve(params.TotalDatabases() * (params.universe + 2));

  const MaskingVectors masks = CompleteMasks(field, randomness.free_masks);
  const size_t dealer = params.parties - 1;
  for (size_t i = 0; i < dealer; ++i) {
    transcript.Emit(Round::kSetup, LinkKind::kMaskDeal, Endpoint::Party(dealer),
                    Endpoint::Party(i), masks.shares[i]);
  }
  if (zprime != nullptr) {
    for (size_t i = 0; i < params.parties; ++i) {
      transcript.Emit(Round::kSetup, LinkKind::kPartyNoise, Endpoint::Party(i),
                      Endpoint::PartyDatabases(i), (*zprime)[i]);
    }
  }

  const QuerySet queries = BuildQueries(ctx, theta, randomness.query_noise);
  for (size_t i = 0; i < params.parties; ++i) {
    for (size_t j = 0; j < params.databases; ++j) {
      transcript.Emit(Round::kQuery, LinkKind::kQuery, Endpoint::User(),
                      Endpoint::Database(i, j), queries.queries[i][j]);
    }
  }
  for (size_t i = 0; i < params.parties; ++i) {
    for (size_t j = 0; j < params.databases; ++j) {
      FieldElement a =
          Answer(field, incidences[i], queries.queries[i][j], masks.shares[i][j]);
      if (zprime != nullptr) {
        const FieldElement x = ctx.alphas.Shifted(j);
        FieldElement power = x;
        for (FieldElement z : (*zprime)[i]) {
          a = field.Add(a, field.Mul(power, z));
          power = field.Mul(power, x);
        }
      }
      transcript.Emit(Round::kAnswer, LinkKind::kAnswer, Endpoint::Database(i, j),
                      Endpoint::User(), a);
    }
  }
}

}  // namespace internal

void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript) {
  internal::RunTypeOne(ctx, incidences, theta, randomness, nullptr, transcript);
}

std::vector<FieldVector> CollectAnswers(const SchemeContext& ctx,
                                        const Transcript& transcript) {
  std::vector<FieldVector> answers(ctx.params.parties);
  for (const auto& e : transcript.events()) {
    if (e.kind != LinkKind::kAnswer) continue;
    if (e.from.party >= answers.size()) {
      throw IntegrityError("answer from unknown party");
    }
    answers[e.from.party].push_back(e.value);
  }
  return answers;
}

Execution Execute(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
                  size_t theta, const Randomness& randomness) {
  Execution out;
  Run(ctx, incidences, theta, randomness, out.transcript);
  out.count = Decode(ctx, CollectAnswers(ctx, out.transcript));
  return out;
}

}  // namespace pma::pma1
