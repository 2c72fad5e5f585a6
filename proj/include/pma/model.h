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

#ifndef PMA_MODEL_H_
#define PMA_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pma/field.h"
#include "pma/random_source.h"

namespace pma {

enum class Variant {
  kPma1,   // user privacy, collusion within a party
  kSpma1,  // kPma1 plus symmetric privacy towards the user
  kSpma2,  // symmetric, collusion across whole parties
  kPma2,   // served by the kSpma2 construction
};

std::string_view VariantName(Variant v);
// Accepts "pma1", "spma1", "spma2", "pma2" (case-insensitive, dashes ignored).
Variant ParseVariant(std::string_view name);
inline bool IsTypeTwo(Variant v) { return v == Variant::kSpma2 || v == Variant::kPma2; }

struct SchemeParams {
  Variant variant = Variant::kPma1;
  size_t parties = 2;    // M
  size_t databases = 1;  // N, per party
  size_t collusion = 0;  // T: databases within a party (type I) or parties (type II)
  // Y for type I (one entry) or Y_1..Y_M for type II. Empty means no
  // eavesdropping; only the maximum enters the construction.
  std::vector<size_t> eavesdrop;
  // T2 of the type II construction: parties pooling their storage.
  size_t communicating_parties = 1;
  size_t universe = 1;  // E
  uint64_t modulus = 0; // p

  // Filled in by ValidateParams.
  size_t effective_databases = 0;  // databases that take part in a run

  size_t MaxEavesdrop() const;
  // Degree of the query noise polynomial: max(T, Y) or max(TN, Y_1..Y_M).
  size_t QueryNoiseDegree() const;
  // Number of storage noise vectors per party in the type II scheme.
  size_t StorageNoiseDegree() const { return communicating_parties * databases; }
  // Databases that need distinct evaluation points.
  size_t EvalPointCount() const;
  size_t TotalDatabases() const { return parties * databases; }
  // Closed-form download cost the construction achieves.
  size_t DownloadBound() const;
};

// Checks every side condition and fills effective_databases. Warnings are
// appended for legal but questionable settings (no query noise, wasteful N,
// dropped databases). Throws ParameterError naming the failing inequality.
SchemeParams ValidateParams(SchemeParams raw,
                            std::vector<std::string>* warnings = nullptr);

// Smallest prime p > M with at least EvalPointCount() nonzero residues.
uint64_t AutoModulus(const SchemeParams& params);
// max(T, Y) + 1 for type I, the smallest feasible N for type II.
size_t AutoDatabases(const SchemeParams& params);

// Validated parameters plus the field and evaluation points they imply.
struct SchemeContext {
  SchemeParams params;
  PrimeField field;
  EvalPoints alphas;

  static SchemeContext Create(const SchemeParams& raw,
                              std::vector<std::string>* warnings = nullptr);
  // As Create, with caller-chosen evaluation points.
  static SchemeContext Create(const SchemeParams& raw, FieldVector alphas,
                              std::vector<std::string>* warnings = nullptr);
};

// Elements are identified by 1-based indices into the universe.
struct PartyDataset {
  std::set<size_t> members;
};

// P_i: bit k-1 is 1 iff element k is held.
struct IncidenceVector {
  std::vector<uint8_t> bits;

  size_t size() const { return bits.size(); }
  bool Holds(size_t element) const { return bits.at(element - 1) != 0; }
  FieldVector ToField() const;

  friend bool operator==(const IncidenceVector&, const IncidenceVector&) = default;
};

// Throws ParameterError for a member outside 1..universe.
IncidenceVector Incidence(const PartyDataset& dataset, size_t universe);
PartyDataset DatasetFromIncidence(const IncidenceVector& incidence);
std::vector<IncidenceVector> Incidences(std::span<const PartyDataset> datasets,
                                        size_t universe);

// Number of parties holding element theta.
size_t TrueCount(size_t theta, std::span<const PartyDataset> datasets);

// Each party holds element k independently with probability probs[k-1].
// A single probability is broadcast to every element.
std::vector<PartyDataset> GenerateDatasets(const SchemeParams& params,
                                           std::span<const double> probs,
                                           RandomSource& rng);

// Every assignment of M incidence vectors of length E, in lexicographic order
// of the M*E bits. Intended for exhaustive tests at tiny sizes.
std::vector<std::vector<IncidenceVector>> AllIncidenceAssignments(size_t parties,
                                                                  size_t universe);

// Datasets read from {"universe": [strings], "parties": [[strings]]}. The
// universe is sorted and element k is the k-th string in that order.
struct NamedDatasets {
  std::vector<std::string> universe;
  std::vector<PartyDataset> parties;

  // 1-based index of a universe element, or nullopt.
  std::optional<size_t> IndexOf(std::string_view name) const;
};

NamedDatasets ParseDatasets(std::string_view json_text);
NamedDatasets LoadDatasets(const std::string& path);

}  // namespace pma

#endif  // PMA_MODEL_H_
