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

#ifndef PMA_HARNESS_H_
#define PMA_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pma/audit.h"
#include "pma/model.h"
#include "pma/random_source.h"
#include "pma/transcript.h"

// Runs schemes from a configuration, accounts for every symbol sent, and
// drives the audit suite. All reports carry kSchemaVersion and serialize
// deterministically.
namespace pma::harness {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  Variant variant = Variant::kPma1;
  std::optional<size_t> parties;    // M; from the datasets file, else 2
  std::optional<size_t> databases;  // N; nullopt selects the smallest valid N
  size_t collusion = 1;             // T
  std::vector<size_t> eavesdrop;    // Y or Y_1..Y_M
  size_t communicating_parties = 1; // T2
  std::optional<size_t> universe;   // E; from the datasets file, else 2
  std::optional<uint64_t> modulus;  // p; nullopt selects the smallest valid prime
  std::optional<size_t> theta;      // nullopt runs every element
  uint64_t seed = 1;
  std::string datasets_path;        // empty: generate datasets
  std::vector<double> probabilities{0.5};  // p_k for generated datasets
  std::vector<std::string> audits;  // suite selection for the audit command
  bool include_transcript = false;

  nlohmann::json ToJson() const;
};

// Keys: variant, M, N ("auto" or int), T, Y (int or array), T2, E, p ("auto"
// or int), theta ("sweep" or int), seed, datasets, pk (number or array),
// audits, transcript. Unknown keys are errors.
RunConfig ParseRunConfig(const nlohmann::json& j);
RunConfig LoadRunConfig(const std::string& path);

// Symbol counts of one run. One symbol is one field element on one link.
struct CostReport {
  uint64_t download = 0;
  uint64_t upload = 0;
  // Masks plus answer noise, counted the way the closed forms count them:
  // the Z' of the type I symmetric scheme once, not once per party.
  uint64_t randomness_sharing = 0;
  uint64_t randomness_sharing_all_parties = 0;
  // Type II storage shares; a one-time setup cost outside `total`.
  uint64_t storage_distribution = 0;
  uint64_t total = 0;  // download + upload + randomness_sharing
  uint64_t download_bound = 0;
  uint64_t formula_total = 0;

  nlohmann::json ToJson() const;
};

// Closed-form total communication: (M-1)N + EMN + MN for PMA-I, plus N-1 for
// SPMA-I, and (E+1)(D+mu+1) + D+mu for type II with D = T2*N, which is
// (E+1)(N+TN+1) + N+NT at T2 = 1 and Y <= TN.
uint64_t FormulaTotal(const SchemeParams& params);

CostReport MeasureCosts(const SchemeParams& params, const Transcript& transcript);

struct ProtocolRun {
  size_t count = 0;
  Transcript transcript;
  CostReport cost;
};

// One execution with fresh randomness drawn from `rng`.
ProtocolRun RunProtocol(const SchemeContext& ctx,
                        std::span<const IncidenceVector> incidences, size_t theta,
                        RandomSource& rng);

struct ThetaOutcome {
  size_t theta = 0;
  std::string element;  // name from the datasets file, if any
  size_t count = 0;
  size_t true_count = 0;
  CostReport cost;
  std::optional<Transcript> transcript;

  bool correct() const { return count == true_count; }
};

struct RunReport {
  RunConfig config;
  SchemeParams params;
  std::vector<std::string> warnings;
  std::vector<PartyDataset> datasets;
  std::vector<std::string> element_names;  // empty for generated datasets
  std::vector<ThetaOutcome> outcomes;

  bool all_correct() const;
  nlohmann::json ToJson() const;
  std::string ToCsv() const;
  std::string ToText() const;
};

// Resolves auto values, loads or generates datasets (RandomSource(seed, 0))
// and runs each theta with RandomSource(seed, theta).
RunReport RunConfigured(const RunConfig& config);

// Parameters a RunConfig resolves to, before any run.
SchemeParams ResolveParams(const RunConfig& config, size_t parties, size_t universe);

struct CostSweep {
  Variant variant = Variant::kPma1;
  size_t m_first = 2;
  size_t m_last = 6;
  std::optional<size_t> databases;
  size_t collusion = 1;
  size_t eavesdrop = 0;
  size_t communicating_parties = 1;
  size_t universe = 2;
  // K of the exponential M^K (K-1) comparison column.
  size_t contrast_k = 2;
  uint64_t seed = 1;
};

struct CostRow {
  size_t parties = 0;
  bool valid = false;
  std::string error;
  SchemeParams params;
  CostReport cost;
  uint64_t contrast = 0;
};

struct CostTable {
  CostSweep sweep;
  std::vector<CostRow> rows;
  // Fit of download = slope * M through the origin over the valid rows;
  // residual is the sum of absolute deviations, so zero means exact.
  double slope = 0;
  double residual = 0;
  bool linear = false;

  nlohmann::json ToJson() const;
  std::string ToCsv() const;
  std::string ToText() const;
};

// Measures each M by running the protocol once on generated datasets.
CostTable BuildCostTable(const CostSweep& sweep);

struct SuiteCase {
  std::string name;
  std::string audit;  // audit kind, e.g. "eavesdropper"
  int lemma = 0;
  bool negative_control = false;  // expected to fail
  std::function<audit::AuditResult(uint64_t cap, uint64_t seed)> run;
};

// Positive audits at p=3, E=2, M=2, N=2, T=Y=1 (type I) and p=5, E=2, M=3,
// N=1, T=Y=1 (type II), plus negative controls that must fail.
std::vector<SuiteCase> DefaultSuite();

struct SuiteEntry {
  std::string name;
  std::string audit;
  int lemma = 0;
  bool negative_control = false;
  std::optional<audit::AuditResult> result;
  std::string error;  // set when the audit could not run

  bool as_expected() const;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;

  bool all_as_expected() const;
  nlohmann::json ToJson() const;
  std::string ToText() const;
};

struct SuiteOptions {
  uint64_t cap = kDefaultEnumerationCap;
  uint64_t seed = 1;
  // "all", "lemmaK", a case name, or an audit name such as "eavesdropper".
  // Empty selects nothing.
  std::vector<std::string> selection;
};

// Throws ParameterError for a selector that matches no case.
SuiteReport RunAuditSuite(const SuiteOptions& options);

}  // namespace pma::harness

#endif  // PMA_HARNESS_H_
