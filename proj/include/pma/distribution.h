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

#ifndef PMA_DISTRIBUTION_H_
#define PMA_DISTRIBUTION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "pma/field.h"

namespace pma {

// Non-negative rational in lowest terms.
struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;

  static Rational Of(uint64_t num, uint64_t den);
  std::string ToString() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact probability mass function over observed tuples: integer counts over
// an enumerated randomness space and their total.
class DistributionMap {
 public:
  void Add(const FieldVector& view, uint64_t weight = 1);

  uint64_t total() const { return total_; }
  const std::map<FieldVector, uint64_t>& counts() const { return counts_; }
  Rational Probability(const FieldVector& view) const;

  // Same support and the same probability on every point.
  bool SameAs(const DistributionMap& other) const;
  // A view whose probability differs, smallest first.
  std::optional<FieldVector> FirstDifference(const DistributionMap& other) const;

  nlohmann::json ToJson() const;

 private:
  std::map<FieldVector, uint64_t> counts_;
  uint64_t total_ = 0;
};

inline constexpr uint64_t kDefaultEnumerationCap = 10'000'000;

// Writes the observed tuple for one randomness assignment into `view`.
using ViewExtractor =
    std::function<void(std::span<const FieldElement> randomness, FieldVector& view)>;

// Runs `extract` on every assignment in GF(p)^dims and tallies the views.
// Throws AuditInfeasibleError when p^dims exceeds `cap`.
DistributionMap EnumerateDistribution(const PrimeField& field, size_t dims,
                                      const ViewExtractor& extract,
                                      uint64_t cap = kDefaultEnumerationCap);

// p^dims, or nullopt when it overflows 64 bits.
std::optional<uint64_t> AssignmentCount(uint64_t modulus, size_t dims);

}  // namespace pma

#endif  // PMA_DISTRIBUTION_H_
