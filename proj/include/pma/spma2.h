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

#ifndef PMA_SPMA2_H_
#define PMA_SPMA2_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pma/field.h"
#include "pma/model.h"
#include "pma/random_source.h"
#include "pma/transcript.h"

// Symmetric private membership aggregation with collusion across whole
// parties. Also used for the non-symmetric type II variant.
//
// Party i secret-shares its incidence vector over the participating
// databases,
//
//   Ptilde_in = P_i + sum_{l=1..D} (1 + alpha_n)^l X_il,    D = T2 * N,
//
// and database n stores the sum over i. The user sends the single query
// Q_n = e_theta + sum_{l=1..mu} (1 + alpha_n)^l Z_l with mu = max(TN, Y_1..Y_M),
// and database n answers Ptilde_n . Q_n + sum_k (1 + alpha_n)^k Z'_k with Z'
// common to all parties. The answer is a polynomial of degree D + mu in
// (1 + alpha_n) whose constant term is the count, so D + mu + 1 databases
// suffice; the rest are dropped.
namespace pma::spma2 {

// D + mu + 1. Throws ParameterError when it exceeds MN.
size_t EffectiveDatabaseCount(const SchemeParams& params);

// Database n (0-based, n < MN) lives in party n / N at local index n % N.
inline size_t OwnerParty(const SchemeParams& params, size_t n) {
  return n / params.databases;
}
inline size_t LocalIndex(const SchemeParams& params, size_t n) {
  return n % params.databases;
}

struct StorageShare {
  std::vector<FieldVector> shares;  // Ptilde_in for n < n_eff
};

StorageShare EncodeStorage(const PrimeField& field, const EvalPoints& alphas,
                           const IncidenceVector& incidence, size_t share_count,
                           std::span<const FieldVector> noise);
StorageShare EncodeStorage(const SchemeContext& ctx, const IncidenceVector& incidence,
                           RandomSource& rng);

// Componentwise sum of the shares held by one database. Throws ProtocolError
// unless exactly `parties` shares of equal length are present.
FieldVector Aggregate(const PrimeField& field, std::span<const FieldVector> shares,
                      size_t parties);

struct GlobalNoise {
  FieldVector zprime;  // Z'_1..Z'_(n_eff - 1)
};

GlobalNoise GenerateNoise(const SchemeContext& ctx, RandomSource& rng);

struct QuerySet {
  size_t mu = 0;
  std::vector<FieldVector> queries;  // [n] for n < n_eff
};

QuerySet BuildQueries(const SchemeContext& ctx, size_t theta,
                      std::span<const FieldVector> noise);
QuerySet GenerateQueries(const SchemeContext& ctx, size_t theta, RandomSource& rng);

FieldElement Answer(const PrimeField& field, std::span<const FieldElement> storage,
                    std::span<const FieldElement> query,
                    std::span<const FieldElement> zprime, FieldElement alpha);

// answers[n] for n < n_eff. Throws ProtocolError if any is missing and
// IntegrityError if the decoded count is not in 0..M.
size_t Decode(const SchemeContext& ctx, std::span<const FieldElement> answers);

struct Randomness {
  std::vector<std::vector<FieldVector>> storage_noise;  // [party][l - 1]
  std::vector<FieldVector> query_noise;                 // [l - 1]
  FieldVector zprime;
};

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng);
Randomness ZeroRandomness(const SchemeContext& ctx);

// Share distribution, Z' agreement, queries, answers. Databases past n_eff
// never appear in the transcript.
void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript);

// answers[n] as received by the user, ordered by global database index.
FieldVector CollectAnswers(const SchemeContext& ctx, const Transcript& transcript);

struct Execution {
  size_t count = 0;
  Transcript transcript;
};

Execution Execute(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
                  size_t theta, const Randomness& randomness);

}  // namespace pma::spma2

#endif  // PMA_SPMA2_H_
