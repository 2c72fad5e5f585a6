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

#ifndef PMA_AUDIT_H_
#define PMA_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pma/distribution.h"
#include "pma/field.h"
#include "pma/model.h"

// Exact privacy and security audits. Each audit fixes the secret inputs of a
// run (theta, datasets), enumerates every assignment of the protocol
// randomness it is told to treat as unknown, and tallies what the adversary
// observes. A requirement of zero leakage holds exactly when the resulting
// distributions coincide across the secrets it protects.
namespace pma::audit {

// 0-based database coordinates.
struct DatabaseRef {
  size_t party = 0;
  size_t database = 0;

  friend bool operator==(const DatabaseRef&, const DatabaseRef&) = default;
};

enum class ViewKind {
  kColludingDatabases,      // queries received by a set of databases
  kEavesdropperLinks,       // query and answer symbols on tapped links
  kCommunicatingDatabases,  // storage shares held by a set of databases
  kUserTranscript,          // every answer the user receives
};

struct AdversaryView {
  ViewKind kind = ViewKind::kUserTranscript;
  std::vector<DatabaseRef> selection;
  size_t budget = 0;
  // The selection respects the budget and the collusion structure it models
  // (e.g. type I collusion stays inside one party).
  bool within_budget = true;
};

// Broken-scheme switches used by negative controls. A zeroed component is
// held at zero instead of being enumerated.
struct Tampering {
  bool zero_masks = false;
  bool zero_answer_noise = false;  // Z'
  bool zero_storage_noise = false;
};

struct AuditOptions {
  uint64_t cap = kDefaultEnumerationCap;
  // Seeds the values an audit holds fixed, such as the query noise when the
  // view is conditioned on the queries.
  uint64_t seed = 1;
  Tampering tamper;
  // Restricts theta; empty means every element.
  std::vector<size_t> thetas;
};

struct Witness {
  std::string differs_in;  // "theta", "contents", "count", "placement", ...
  nlohmann::json secret_a;
  nlohmann::json secret_b;
  FieldVector view;
  Rational probability_a;
  Rational probability_b;
};

struct AuditResult {
  std::string audit;
  int lemma = 0;
  SchemeParams params;
  AdversaryView adversary;
  bool passed = false;
  uint64_t enumerated_assignments = 0;
  std::optional<Witness> witness;

  nlohmann::json ToJson() const;
};

nlohmann::json ParamsJson(const SchemeParams& params);

// Queries seen by `colluding` databases have the same distribution for every
// theta. Budget: T databases of one party (type I) or N*T databases (type II).
AuditResult AuditQueryPrivacy(const SchemeContext& ctx,
                              std::span<const DatabaseRef> colluding,
                              const AuditOptions& options = {});

enum class BlindEstimationView {
  kAnswersOnly,   // the user's view is the answers; its query noise is averaged
  kGivenQueries,  // the query noise is known to the observer and held fixed
};

// For every theta and every configuration of the other elements, the answer
// tuple has the same distribution for every placement of element theta among
// the parties with the same count. Type I variants only.
AuditResult AuditBlindEstimation(const SchemeContext& ctx,
                                 const AuditOptions& options = {},
                                 BlindEstimationView mode = BlindEstimationView::kAnswersOnly);

// With the queries fixed, the answer tuple has the same distribution for
// every configuration of the non-queried incidence bits (placement of theta,
// hence the count, held fixed).
AuditResult AuditSymmetricPrivacy(const SchemeContext& ctx,
                                  const AuditOptions& options = {});

// For every party and every set of `share_count` participating databases,
// the storage shares sent there have the same distribution for every
// incidence vector of that party. Type II only; budget T2*N.
AuditResult AuditStorageSecurity(const SchemeContext& ctx, size_t share_count,
                                 const AuditOptions& options = {});

// Party `eavesdropper` taps the query and answer links of `tapped` databases
// of other parties. Conditioned on its own dataset (and, for type II, its own
// storage noise), the observed symbols must not depend on theta, on the other
// parties' contents, or on the count.
AuditResult AuditEavesdropper(const SchemeContext& ctx, size_t eavesdropper,
                              std::span<const DatabaseRef> tapped,
                              const AuditOptions& options = {});

// Coefficients, in powers of (1 + alpha), of storage(x) . query(x) + sum_k
// zprime_k x^k, where storage(x) = sum_a storage[a] x^a and likewise for the
// query. Coefficient 0 is the count when storage[0] sums the incidence
// vectors and query[0] = e_theta.
FieldVector ExpandAnswerPolynomial(const PrimeField& field,
                                   std::span<const FieldVector> storage,
                                   std::span<const FieldVector> query,
                                   std::span<const FieldElement> zprime = {});

}  // namespace pma::audit

#endif  // PMA_AUDIT_H_
