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

#include <numeric>
#include <unordered_map>
#include <vector>

#include "pma/errors.h"

namespace pma {

Rational Rational::Of(uint64_t num, uint64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  const uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

void DistributionMap::Add(const FieldVector& view, uint64_t weight) {
  counts_[view] += weight;
  total_ += weight;
}

Rational DistributionMap::Probability(const FieldVector& view) const {
  if (total_ == 0) return {};
  auto it = counts_.find(view);
  return Rational::Of(it == counts_.end() ? 0 : it->second, total_);
}

std::optional<FieldVector> DistributionMap::FirstDifference(
    const DistributionMap& other) const {
  using u128 = unsigned __int128;
  auto a = counts_.begin();
  auto b = other.counts_.begin();
  while (a != counts_.end() || b != other.counts_.end()) {
    if (b == other.counts_.end() || (a != counts_.end() && a->first < b->first)) {
      return a->first;
    }
    if (a == counts_.end() || b->first < a->first) return b->first;
    if (u128{a->second} * other.total_ != u128{b->second} * total_) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

bool DistributionMap::SameAs(const DistributionMap& other) const {
  return !FirstDifference(other).has_value();
}

nlohmann::json DistributionMap::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [view, count] : counts_) {
    std::vector<uint32_t> values;
    for (FieldElement v : view) values.push_back(v.value);
    out.push_back({{"view", values}, {"probability", Rational::Of(count, total_).ToString()}});
  }
  return out;
}

std::optional<uint64_t> AssignmentCount(uint64_t modulus, size_t dims) {
  uint64_t total = 1;
  for (size_t d = 0; d < dims; ++d) {
    if (total > UINT64_MAX / modulus) return std::nullopt;
    total *= modulus;
  }
  return total;
}

DistributionMap EnumerateDistribution(const PrimeField& field, size_t dims,
                                      const ViewExtractor& extract, uint64_t cap) {
  const uint64_t p = field.modulus();
  const auto total = AssignmentCount(p, dims);
  if (!total || *total > cap) {
    throw AuditInfeasibleError("enumerating " + std::to_string(dims) +
                               " randomness dimensions over GF(" + std::to_string(p) +
                               ") exceeds the cap of " + std::to_string(cap));
  }

  // Views are tallied under a radix-p integer key while they fit in 64 bits.
  std::unordered_map<uint64_t, uint64_t> packed;
  DistributionMap out;
  std::optional<size_t> view_length;
  bool packable = false;

  FieldVector assignment(dims);
  FieldVector view;
  for (uint64_t step = 0; step < *total; ++step) {
    view.clear();
    extract(assignment, view);
    if (!view_length) {
      view_length = view.size();
      const auto space = AssignmentCount(p, view.size());
      packable = space.has_value() && *space <= (UINT64_MAX >> 1);
    } else if (*view_length != view.size()) {
      throw IntegrityError("view length changed during enumeration");
    }
    if (packable) {
      uint64_t key = 0;
      for (FieldElement v : view) key = key * p + v.value;
      ++packed[key];
    } else {
      out.Add(view);
    }
    // Odometer increment, last coordinate fastest.
    for (size_t d = dims; d-- > 0;) {
      if (++assignment[d].value < p) break;
      assignment[d].value = 0;
    }
  }

  if (packable) {
    for (const auto& [key, count] : packed) {
      FieldVector decoded(*view_length);
      uint64_t rest = key;
      for (size_t k = *view_length; k-- > 0;) {
        decoded[k] = FieldElement(static_cast<uint32_t>(rest % p));
        rest /= p;
      }
      out.Add(decoded, count);
    }
  }
  return out;
}

}  // namespace pma
