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

#ifndef PMA_SPMA1_H_
#define PMA_SPMA1_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pma/field.h"
#include "pma/model.h"
#include "pma/pma1.h"
#include "pma/random_source.h"
#include "pma/transcript.h"

// Symmetric variant of pma1. Queries and masks are unchanged; the databases of
// party i additionally share scalars Z'_i1..Z'_i(N-1) and add
// sum_l (1 + alpha_j)^l Z'_il to every answer. Those terms land on the
// interference coefficients only, so decoding is identical to pma1 while the
// user no longer sees the interference.
namespace pma::spma1 {

struct PartyNoise {
  std::vector<FieldVector> zprime;  // [party], length N - 1
};

PartyNoise GenerateNoise(const SchemeContext& ctx, RandomSource& rng);

FieldElement Answer(const PrimeField& field, const IncidenceVector& incidence,
                    std::span<const FieldElement> query,
                    std::span<const FieldElement> zprime, FieldElement mask,
                    FieldElement alpha);

inline size_t Decode(const SchemeContext& ctx,
                     const std::vector<FieldVector>& answers) {
  return pma1::Decode(ctx, answers);
}

struct Randomness {
  pma1::Randomness base;
  PartyNoise noise;
};

Randomness SampleRandomness(const SchemeContext& ctx, RandomSource& rng);
Randomness ZeroRandomness(const SchemeContext& ctx);

// Mask dealing, per-party Z' provisioning, queries, answers.
void Run(const SchemeContext& ctx, std::span<const IncidenceVector> incidences,
         size_t theta, const Randomness& randomness, Transcript& transcript);

pma1::Execution Execute(const SchemeContext& ctx,
                        std::span<const IncidenceVector> incidences, size_t theta,
                        const Randomness& randomness);

}  // namespace pma::spma1

#endif  // PMA_SPMA1_H_
