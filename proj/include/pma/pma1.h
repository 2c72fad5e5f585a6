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

#ifndef PMA_PMA1_H_
#define PMA_PMA1_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pma/field.h"
#include "pma/model.h"
#include "pma/random_source.h"
#include "pma/transcript.h"

// Private membership aggregation with collusion inside each party.
//
// Every party replicates its incidence vector P_i on all N databases. The
// user sends database (i, j) the query
//
//   Q_ij = e_theta + sum_{l=1..mu} (1 + alpha_j)^l Z_il,   mu = max(T, Y),
//
// and gets back A_ij = P_i . Q_ij + S_ij, where the masks S_i sum to zero over
// the parties. Summing the answers over i aligns every party's polynomial in
// (1 + alpha_j); the constant coefficient is the count, read off by inverting
// the N x N Vandermonde matrix.
namespace pma::pma1 {

struct QuerySet {
  size_t mu = 0;
  std::vector<std::vector<FieldVector>> queries;  // [party][database], length E
};

struct MaskingVectors {
  std::vector<FieldVector> shares;  // S_i, length N; sum over i is zero
};

// `noise[i]` must hold mu vectors of length E. theta is 1-based.
QuerySet BuildQueries(const SchemeContext& ctx, size_t theta,
                      std::span<const std::vector<FieldVector>> noise);
QuerySet GenerateQueries(const SchemeContext& ctx, size_t theta, RandomSource& rng);

// Parties 1..M-1 use `free_shares`; party M completes the sum to zero.
MaskingVectors CompleteMasks(const PrimeField& field,
                             std::vector<FieldVector> free_shares);
MaskingVectors GenerateMasks(const SchemeContext& ctx, RandomSource& rng);

FieldElement Answer(const PrimeField& field, const IncidenceVector& incidence,
                    std::span<const FieldElement> query, FieldElement mask);

// answers[i][j] from database j of party i. Sums over parties first, then
// solves the Vandermonde system. Throws IntegrityError if the constant
// coefficient is not a count in 0..M.
size_t Decode(const SchemeContext& ctx, const std::vector<FieldVector>& answers);

// All randomness of one run.
struct Randomness {
  std::vector<std::vector<FieldVector>> query_noise;  // [party][l - 1]
  std::vector<FieldVector> free_masks;                // S_1..S_{M-1}
};

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng);
Randomness ZeroRandomness(const SchemeContext& ctx);

// Plays one run into `transcript` (cleared first): mask dealing by party M,
// queries, answers.
void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript);

// answers[i][j] as received by the user.
std::vector<FieldVector> CollectAnswers(const SchemeContext& ctx,
                                        const Transcript& transcript);

struct Execution {
  size_t count = 0;
  Transcript transcript;
};

Execution Execute(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
                  size_t theta, const Randomness& randomness);

namespace internal {

// Shared by pma1 and spma1. With `zprime` null the answers are pma1 answers;
// otherwise party i's databases add their Z' terms and the provisioning of
// Z' is recorded ahead of the queries.
void RunTypeOne(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
                size_t theta, const Randomness& randomness,
                const std::vector<FieldVector>* zprime, Transcript& transcript);

}  // namespace internal

}  // namespace pma::pma1

#endif  // PMA_PMA1_H_
