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

// Command line front end: run, audit, costs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pma/errors.h"
#include "pma/harness.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitFailure = 3;

enum class Format { kText, kJson, kCsv };

struct RunFlags {
  std::string config;
  std::string variant;
  std::optional<size_t> m, n, t, t2, e, theta;
  std::optional<uint64_t> p, seed;
  std::vector<size_t> y;
  std::vector<double> pk;
  std::string datasets;
  bool json = false;
  bool csv = false;
  bool transcript = false;
};

struct AuditFlags {
  std::string config;
  std::vector<std::string> suite;
  uint64_t seed = 1;
  uint64_t cap = pma::kDefaultEnumerationCap;
  bool json = false;
};

struct CostFlags {
  std::string variant = "pma1";
  std::string sweep = "2..6";
  std::optional<size_t> n;
  size_t t = 1, y = 0, t2 = 1, e = 2, k = 2;
  uint64_t seed = 1;
  bool json = false;
  bool csv = false;
};

Format PickFormat(bool json, bool csv) {
  if (json && csv) throw pma::ParameterError("--json and --csv are exclusive");
  if (json) return Format::kJson;
  return csv ? Format::kCsv : Format::kText;
}

std::pair<size_t, size_t> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw pma::ParameterError("range '" + text + "' is not of the form A..B");
  }
}

int DoRun(const RunFlags& f) {
  pma::harness::RunConfig c;
  if (!f.config.empty()) c = pma::harness::LoadRunConfig(f.config);
  if (!f.variant.empty()) c.variant = pma::ParseVariant(f.variant);
  if (f.m) c.parties = *f.m;
  if (f.n) c.databases = *f.n;
  if (f.t) c.collusion = *f.t;
  if (!f.y.empty()) c.eavesdrop = f.y;
  if (f.t2) c.communicating_parties = *f.t2;
  if (f.e) c.universe = *f.e;
  if (f.p) c.modulus = *f.p;
  if (f.theta) c.theta = *f.theta;
  if (f.seed) c.seed = *f.seed;
  if (!f.pk.empty()) c.probabilities = f.pk;
  if (!f.datasets.empty()) c.datasets_path = f.datasets;
  if (f.transcript) c.include_transcript = true;
  const Format format = PickFormat(f.json, f.csv);

  const auto report = pma::harness::RunConfigured(c);
  switch (format) {
    case Format::kJson:
      std::cout << report.ToJson().dump(2) << "\n";
      break;
    case Format::kCsv:
      std::cout << report.ToCsv();
      break;
    case Format::kText:
      std::cout << report.ToText();
      break;
  }
  return report.all_correct() ? kExitOk : kExitFailure;
}

int DoAudit(const AuditFlags& f, bool suite_given) {
  pma::harness::SuiteOptions o;
  o.cap = f.cap;
  o.seed = f.seed;
  if (suite_given) {
    o.selection = f.suite;
  } else if (!f.config.empty()) {
    o.selection = pma::harness::LoadRunConfig(f.config).audits;
  } else {
    o.selection = {"all"};
  }
  const auto report = pma::harness::RunAuditSuite(o);
  if (f.json) {
    std::cout << report.ToJson().dump(2) << "\n";
  } else {
    std::cout << report.ToText();
  }
  return report.all_as_expected() ? kExitOk : kExitFailure;
}

int DoCosts(const CostFlags& f) {
  pma::harness::CostSweep s;
  s.variant = pma::ParseVariant(f.variant);
  std::tie(s.m_first, s.m_last) = ParseRange(f.sweep);
  s.databases = f.n;
  s.collusion = f.t;
  s.eavesdrop = f.y;
  s.communicating_parties = f.t2;
  s.universe = f.e;
  s.contrast_k = f.k;
  s.seed = f.seed;
  const Format format = PickFormat(f.json, f.csv);
  const auto table = pma::harness::BuildCostTable(s);
  switch (format) {
    case Format::kJson:
      std::cout << table.ToJson().dump(2) << "\n";
      break;
    case Format::kCsv:
      std::cout << table.ToCsv();
      break;
    case Format::kText:
      std::cout << table.ToText();
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private membership aggregation simulator"};
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Run a scheme and check the decoded count");
  run_cmd->add_option("--config", run.config, "JSON config file");
  run_cmd->add_option("--variant", run.variant, "pma1, spma1, spma2 or pma2");
  run_cmd->add_option("--m", run.m, "Parties M");
  run_cmd->add_option("--n", run.n, "Databases per party N (default: smallest valid)");
  run_cmd->add_option("--t", run.t, "Collusion budget T");
  run_cmd->add_option("--y", run.y, "Eavesdropping budget Y, or Y_1..Y_M");
  run_cmd->add_option("--t2", run.t2, "Communicating parties T2 (type II)");
  run_cmd->add_option("--e", run.e, "Universe size E");
  run_cmd->add_option("--p", run.p, "Field prime (default: smallest valid)");
  run_cmd->add_option("--theta", run.theta, "Queried element (default: every element)");
  run_cmd->add_option("--seed", run.seed, "Random seed");
  run_cmd->add_option("--pk", run.pk, "Membership probability, one or one per element");
  run_cmd->add_option("--datasets", run.datasets, "JSON datasets file");
  run_cmd->add_flag("--json", run.json, "JSON output");
  run_cmd->add_flag("--csv", run.csv, "CSV output");
  run_cmd->add_flag("--transcript", run.transcript, "Include transcripts in JSON");

  AuditFlags audit;
  auto* audit_cmd = app.add_subcommand("audit", "Run exact privacy audits");
  auto* suite_opt = audit_cmd->add_option(
      "--suite", audit.suite, "all, lemmaK, a case name or an audit name");
  audit_cmd->add_option("--config", audit.config, "JSON config whose 'audits' selects cases");
  audit_cmd->add_option("--seed", audit.seed, "Seed for values held fixed");
  audit_cmd->add_option("--cap", audit.cap, "Enumeration cap per distribution");
  audit_cmd->add_flag("--json", audit.json, "JSON output");

  CostFlags costs;
  auto* costs_cmd = app.add_subcommand("costs", "Download cost as a function of M");
  costs_cmd->add_option("--variant", costs.variant, "pma1, spma1, spma2 or pma2");
  costs_cmd->add_option("--sweep-m", costs.sweep, "Range A..B of M");
  costs_cmd->add_option("--n", costs.n, "Databases per party");
  costs_cmd->add_option("--t", costs.t, "Collusion budget T");
  costs_cmd->add_option("--y", costs.y, "Eavesdropping budget Y");
  costs_cmd->add_option("--t2", costs.t2, "Communicating parties T2");
  costs_cmd->add_option("--e", costs.e, "Universe size E");
  costs_cmd->add_option("--k", costs.k, "K of the M^K(K-1) comparison column");
  costs_cmd->add_option("--seed", costs.seed, "Random seed");
  costs_cmd->add_flag("--json", costs.json, "JSON output");
  costs_cmd->add_flag("--csv", costs.csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParameter;
  }

  try {
    if (*run_cmd) return DoRun(run);
    if (*audit_cmd) return DoAudit(audit, suite_opt->count() > 0);
    if (*costs_cmd) return DoCosts(costs);
  } catch (const pma::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const pma::DomainError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
