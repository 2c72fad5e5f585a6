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

#include <string>
#include <utility>

#include "pma/errors.h"

namespace pma::spma2 {
namespace {

std::string Str(size_t v) { return std::to_string(v); }

}  // namespace

size_t EffectiveDatabaseCount(const SchemeParams& params) {
  const size_t needed = params.EvalPointCount();
  if (needed > params.TotalDatabases()) {
    throw ParameterError("MN >= T2*N + max(TN, Y_1..Y_M) + 1 violated: MN = " +
                         Str(params.TotalDatabases()) + " < " + Str(needed));
  }
  return needed;
}

StorageShare EncodeStorage(const PrimeField& field, const EvalPoints& alphas,
                           const IncidenceVector& incidence, size_t share_count,
                           std::span<const FieldVector> noise) {
  if (share_count > alphas.size()) {
    throw ParameterError("need " + Str(share_count) + " evaluation points, have " +
                         Str(alphas.size()));
  }
  const FieldVector base = incidence.ToField();
  StorageShare out;
  out.shares.reserve(share_count);
  for (size_t n = 0; n < share_count; ++n) {
    FieldVector share = base;
    const FieldElement x = alphas.Shifted(n);
    FieldElement power = x;
    for (const auto& x_l : noise) {
      field.AddScaled(share, power, x_l);
      power = field.Mul(power, x);
    }
    out.shares.push_back(std::move(share));
  }
  return out;
}

StorageShare EncodeStorage(const SchemeContext& ctx, const IncidenceVector& incidence,
                           RandomSource& rng) {
  std::vector<FieldVector> noise;
  for (size_t l = 0; l < ctx.params.StorageNoiseDegree(); ++l) {
    noise.push_back(rng.UniformVector(ctx.field, ctx.params.universe));
  }
  return EncodeStorage(ctx.field, ctx.alphas, incidence,
                       EffectiveDatabaseCount(ctx.params), noise);
}

FieldVector Aggregate(const PrimeField& field, std::span<const FieldVector> shares,
                      size_t parties) {
  if (shares.size() != parties) {
    throw ProtocolError("database holds " + Str(shares.size()) + " of " +
                        Str(parties) + " storage shares");
  }
  FieldVector sum = shares.front();
  for (size_t i = 1; i < shares.size(); ++i) {
    if (shares[i].size() != sum.size()) {
      throw ProtocolError("storage shares differ in length");
    }
    for (size_t k = 0; k < sum.size(); ++k) sum[k] = field.Add(sum[k], shares[i][k]);
  }
  return sum;
}

GlobalNoise GenerateNoise(const SchemeContext& ctx, RandomSource& rng) {
  return {rng.UniformVector(ctx.field, EffectiveDatabaseCount(ctx.params) - 1)};
}

QuerySet BuildQueries(const SchemeContext& ctx, size_t theta,
                      std::span<const FieldVector> noise) {
  const auto& params = ctx.params;
  const auto& field = ctx.field;
  if (theta < 1 || theta > params.universe) {
    throw ParameterError("theta = " + Str(theta) + " outside 1.." + Str(params.universe));
  }
  const size_t mu = params.QueryNoiseDegree();
  if (noise.size() != mu) {
    throw ParameterError("query noise needs mu = " + Str(mu) + " vectors");
  }
  QuerySet out;
  out.mu = mu;
  const size_t n_eff = EffectiveDatabaseCount(params);
  const FieldVector unit = field.UnitVector(params.universe, theta - 1);
  out.queries.reserve(n_eff);
  for (size_t n = 0; n < n_eff; ++n) {
    FieldVector q = unit;
    const FieldElement x = ctx.alphas.Shifted(n);
    FieldElement power = x;
    for (const auto& z : noise) {
      field.AddScaled(q, power, z);
      power = field.Mul(power, x);
    }
    out.queries.push_back(std::move(q));
  }
  return out;
}

QuerySet GenerateQueries(const SchemeContext& ctx, size_t theta, RandomSource& rng) {
  std::vector<FieldVector> noise;
  for (size_t l = 0; l < ctx.params.QueryNoiseDegree(); ++l) {
    noise.push_back(rng.UniformVector(ctx.field, ctx.params.universe));
  }
  return BuildQueries(ctx, theta, noise);
}

FieldElement Answer(const PrimeField& field, std::span<const FieldElement> storage,
                    std::span<const FieldElement> query,
                    std::span<const FieldElement> zprime, FieldElement alpha) {
  FieldElement acc = field.Dot(storage, query);
  const FieldElement x = field.Add(alpha, FieldElement(1));
  FieldElement power = x;
  for (FieldElement z : zprime) {
    acc = field.Add(acc, field.Mul(power, z));
    power = field.Mul(power, x);
  }
  return acc;
}

size_t Decode(const SchemeContext& ctx, std::span<const FieldElement> answers) {
  const size_t n_eff = EffectiveDatabaseCount(ctx.params);
  if (answers.size() != n_eff) {
    throw ProtocolError("received " + Str(answers.size()) + " of " + Str(n_eff) +
                        " answers");
  }
  const Matrix upsilon = BuildUpsilon(ctx.field, ctx.alphas.values(), n_eff);
  const FieldVector coefficients = SolveLinear(ctx.field, upsilon, answers);
  const uint32_t count = coefficients[0].value;
  if (count > ctx.params.parties) {
    throw IntegrityError("decoded count " + std::to_string(count) +
                         " exceeds the number of parties " +
                         Str(ctx.params.parties));
  }
  return count;
}

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng) {
  const auto& params = ctx.params;
  Randomness r;
  r.storage_noise.resize(params.parties);
  for (auto& row : r.storage_noise) {
    for (size_t l = 0; l < params.StorageNoiseDegree(); ++l) {
      row.push_back(rng.UniformVector(ctx.field, params.universe));
    }
  }
  for (size_t l = 0; l < params.QueryNoiseDegree(); ++l) {
    r.query_noise.push_back(rng.UniformVector(ctx.field, params.universe));
  }
  r.zprime = rng.UniformVector(ctx.field, EffectiveDatabaseCount(params) - 1);
  return r;
}

Randomness ZeroRandomness(const SchemeContext& ctx) {
  const auto& params = ctx.params;
  Randomness r;
  r.storage_noise.assign(params.parties,
                         std::vector<FieldVector>(params.StorageNoiseDegree(),
                                                  FieldVector(params.universe)));
  r.query_noise.assign(params.QueryNoiseDegree(), FieldVector(params.universe));
  r.zprime.assign(EffectiveDatabaseCount(params) - 1, FieldElement());
  return r;
}

void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript) {
  const auto& params = ctx.params;
  const auto& field = ctx.field;
  const size_t n_eff = EffectiveDatabaseCount(params);
  if (incidences.size() != params.parties) {
    throw ParameterError("expected " + Str(params.parties) + " incidence vectors, got " +
                         Str(incidences.size()));
  }
  if (randomness.storage_noise.size() != params.parties) {
    throw ParameterError("storage noise needs one row per party");
  }
  if (randomness.zprime.size() + 1 != n_eff) {
    throw ParameterError("Z' needs n_eff - 1 = " + Str(n_eff - 1) + " entries");
  }
  transcript.Clear();
  transcript.Reserve(n_eff * (params.parties + 1) * params.universe + 2 * n_eff);

  std::vector<StorageShare> encoded;
  encoded.reserve(params.parties);
  for (size_t i = 0; i < params.parties; ++i) {
    if (incidences[i].size() != params.universe) {
      throw ParameterError("incidence vector of party " + Str(i + 1) +
                           " has the wrong length");
    }
    if (randomness.storage_noise[i].size() != params.StorageNoiseDegree()) {
      throw ParameterError("storage noise needs T2*N vectors per party");
    }
    encoded.push_back(EncodeStorage(field, ctx.alphas, incidences[i], n_eff,
                                    randomness.storage_noise[i]));
    for (size_t n = 0; n < n_eff; ++n) {
      transcript.Emit(Round::kSetup, LinkKind::kStorageShare, Endpoint::Party(i),
                      Endpoint::Database(OwnerParty(params, n), LocalIndex(params, n)),
                      encoded[i].shares[n]);
    }
  }
  transcript.Emit(Round::kSetup, LinkKind::kGlobalNoise, Endpoint::Party(0),
                  Endpoint::AllDatabases(), randomness.zprime);

  const QuerySet queries = BuildQueries(ctx, theta, randomness.query_noise);
  for (size_t n = 0; n < n_eff; ++n) {
    transcript.Emit(Round::kQuery, LinkKind::kQuery, Endpoint::User(),
                    Endpoint::Database(OwnerParty(params, n), LocalIndex(params, n)),
                    queries.queries[n]);
  }

  std::vector<FieldVector> held(params.parties);
  for (size_t n = 0; n < n_eff; ++n) {
    for (size_t i = 0; i < params.parties; ++i) held[i] = encoded[i].shares[n];
    const FieldVector storage = Aggregate(field, held, params.parties);
    const FieldElement a =
        Answer(field, storage, queries.queries[n], randomness.zprime, ctx.alphas[n]);
    transcript.Emit(Round::kAnswer, LinkKind::kAnswer,
                    Endpoint::Database(OwnerParty(params, n), LocalIndex(params, n)),
                    Endpoint::User(), a);
  }
}

FieldVector CollectAnswers(const SchemeContext& ctx, const Transcript& transcript) {
  FieldVector answers;
  for (const auto& e : transcript.events()) {
    if (e.kind != LinkKind::kAnswer) continue;
    const size_t n = e.from.party * ctx.params.databases + e.from.database;
    if (n != answers.size()) throw IntegrityError("answers out of database order");
    answers.push_back(e.value);
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

}  // namespace pma::spma2
