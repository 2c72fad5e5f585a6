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

#ifndef PMA_RANDOM_SOURCE_H_
#define PMA_RANDOM_SOURCE_H_

#include <cstdint>
#include <random>

#include "pma/field.h"

namespace pma {

// Seeded, reproducible randomness. The same seed yields the same sequence of
// draws on every platform: the engine is fully specified by the standard and
// all reductions to GF(p) and [0, 1) are done here rather than through
// std::*_distribution, whose output is implementation-defined.
//
// Single consumer. Use Split() to hand independent streams to concurrent runs.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed, uint64_t stream = 0);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  // Number of 64-bit words consumed so far.
  uint64_t position() const { return position_; }

  uint64_t NextWord();
  // Uniform over GF(p) by rejection sampling.
  FieldElement Uniform(const PrimeField& field);
  FieldVector UniformVector(const PrimeField& field, size_t n);
  // True with probability `probability`, clamped to [0, 1].
  bool Bernoulli(double probability);

  RandomSource Split(uint64_t stream) const { return RandomSource(seed_, stream); }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t position_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace pma

#endif  // PMA_RANDOM_SOURCE_H_
