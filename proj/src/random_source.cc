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

#include "pma/random_source.h"

#include <limits>

namespace pma {
namespace {

std::mt19937_64 SeedEngine(uint64_t seed, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(uint64_t seed, uint64_t stream)
    : seed_(seed), stream_(stream), engine_(SeedEngine(seed, stream)) {}

uint64_t RandomSource::NextWord() {
  ++position_;
  return engine_();
}

FieldElement RandomSource::Uniform(const PrimeField& field) {
  const uint64_t p = field.modulus();
  // Largest multiple of p representable in 64 bits; words above it are
  // rejected so every residue is equally likely.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % p;
  uint64_t w = NextWord();
  while (w >= limit) w = NextWord();
  return FieldElement(static_cast<uint32_t>(w % p));
}

FieldVector RandomSource::UniformVector(const PrimeField& field, size_t n) {
  FieldVector v(n);
  for (auto& x : v) x = Uniform(field);
  return v;
}

bool RandomSource::Bernoulli(double probability) {
  if (probability <= 0.0) return false;
  if (probability >= 1.0) return true;
  const double u = static_cast<double>(NextWord() >> 11) * 0x1.0p-53;
  return u < probability;
}

}  // namespace pma
