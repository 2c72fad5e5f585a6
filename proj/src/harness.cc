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

#include "pma/harness.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

#include "pma/errors.h"
#include "pma/pma1.h"
#include "pma/spma1.h"
#include "pma/spma2.h"

namespace pma::harness {
namespace {

using nlohmann::json;

std::string Str(size_t v) { return std::to_string(v); }

size_t AsSize(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    throw ParameterError(std::string("config key '") + key +
                         "' must be a non-negative integer");
  }
  return v.get<size_t>();
}

std::vector<size_t> AsSizes(const json& v, const char* key) {
  std::vector<size_t> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(AsSize(x, key));
  } else {
    out.push_back(AsSize(v, key));
  }
  return out;
}

json AutoOr(const std::optional<size_t>& v, const char* word) {
  return v ? json(*v) : json(word);
}

json DatasetsJson(const std::vector<PartyDataset>& datasets,
                  const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& d : datasets) {
    json members = json::array();
    for (size_t k : d.members) {
      if (names.empty()) {
        members.push_back(k);
      } else {
        members.push_back(names[k - 1]);
      }
    }
    out.push_back(members);
  }
  return out;
}

json TranscriptJson(const Transcript& t) { return t.ToJson(); }

void Header(std::ostringstream& out, const std::vector<std::pair<std::string, int>>& cols) {
  for (const auto& [name, width] : cols) out << std::setw(width) << name;
  out << "\n";
}

}  // namespace

nlohmann::json RunConfig::ToJson() const {
  json probs = json::array();
  for (double p : probabilities) probs.push_back(p);
  json out = {
      {"variant", std::string(VariantName(variant))},
      {"M", AutoOr(parties, "auto")},
      {"N", AutoOr(databases, "auto")},
      {"T", collusion},
      {"Y", eavesdrop},
      {"T2", communicating_parties},
      {"E", AutoOr(universe, "auto")},
      {"p", modulus ? json(*modulus) : json("auto")},
      {"theta", AutoOr(theta, "sweep")},
      {"seed", seed},
      {"datasets", datasets_path},
      {"pk", probs},
      {"audits", audits},
      {"transcript", include_transcript},
  };
  return out;
}

RunConfig ParseRunConfig(const nlohmann::json& j) {
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "variant") {
      if (!v.is_string()) throw ParameterError("config key 'variant' must be a string");
      c.variant = ParseVariant(v.get<std::string>());
    } else if (key == "M") {
      if (!(v.is_string() && v == "auto")) c.parties = AsSize(v, "M");
    } else if (key == "N") {
      if (!(v.is_string() && v == "auto")) c.databases = AsSize(v, "N");
    } else if (key == "T") {
      c.collusion = AsSize(v, "T");
    } else if (key == "Y") {
      c.eavesdrop = AsSizes(v, "Y");
    } else if (key == "T2") {
      c.communicating_parties = AsSize(v, "T2");
    } else if (key == "E") {
      if (!(v.is_string() && v == "auto")) c.universe = AsSize(v, "E");
    } else if (key == "p") {
      if (!(v.is_string() && v == "auto")) c.modulus = AsSize(v, "p");
    } else if (key == "theta") {
      if (!(v.is_string() && v == "sweep")) c.theta = AsSize(v, "theta");
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw ParameterError("config key 'seed' must be unsigned");
      c.seed = v.get<uint64_t>();
    } else if (key == "datasets") {
      if (!v.is_string()) throw ParameterError("config key 'datasets' must be a path");
      c.datasets_path = v.get<std::string>();
    } else if (key == "pk") {
      c.probabilities.clear();
      for (const auto& x : v.is_array() ? v : json::array({v})) {
        if (!x.is_number()) throw ParameterError("config key 'pk' must hold numbers");
        c.probabilities.push_back(x.get<double>());
      }
    } else if (key == "audits") {
      if (!v.is_array()) throw ParameterError("config key 'audits' must be an array");
      for (const auto& x : v) c.audits.push_back(x.get<std::string>());
    } else if (key == "transcript") {
      c.include_transcript = v.get<bool>();
    } else {
      throw ParameterError("unknown config key '" + key + "'");
    }
  }
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path);
  try {
    return ParseRunConfig(json::parse(in));
  } catch (const json::exception& e) {
    throw ParameterError("config file " + path + ": " + e.what());
  }
}

nlohmann::json CostReport::ToJson() const {
  return {{"download", download},
          {"upload", upload},
          {"randomness_sharing", randomness_sharing},
          {"randomness_sharing_all_parties", randomness_sharing_all_parties},
          {"storage_distribution", storage_distribution},
          {"total", total},
          {"download_bound", download_bound},
          {"formula_total", formula_total}};
}

uint64_t FormulaTotal(const SchemeParams& params) {
  const uint64_t m = params.parties;
  const uint64_t n = params.databases;
  const uint64_t e = params.universe;
  if (IsTypeTwo(params.variant)) {
    const uint64_t d = params.StorageNoiseDegree();
    const uint64_t mu = params.QueryNoiseDegree();
    return (e + 1) * (d + mu + 1) + d + mu;
  }
  uint64_t total = (m - 1) * n + e * m * n + m * n;
  if (params.variant == Variant::kSpma1) total += n - 1;
  return total;
}

CostReport MeasureCosts(const SchemeParams& params, const Transcript& transcript) {
  CostReport c;
  c.download = transcript.Count(LinkKind::kAnswer);
  c.upload = transcript.Count(LinkKind::kQuery);
  const uint64_t masks = transcript.Count(LinkKind::kMaskDeal);
  const uint64_t party_noise = transcript.Count(LinkKind::kPartyNoise);
  const uint64_t global_noise = transcript.Count(LinkKind::kGlobalNoise);
  c.randomness_sharing = masks + party_noise / params.parties + global_noise;
  c.randomness_sharing_all_parties = masks + party_noise + global_noise;
  c.storage_distribution = transcript.Count(LinkKind::kStorageShare);
  c.total = c.download + c.upload + c.randomness_sharing;
  c.download_bound = params.DownloadBound();
  c.formula_total = FormulaTotal(params);
  return c;
}

ProtocolRun RunProtocol(const SchemeContext& ctx,
                        std::span<const IncidenceVector> incidences, size_t theta,
                        RandomSource& rng) {
  ProtocolRun out;
  switch (ctx.params.variant) {
    case Variant::kPma1: {
      auto run = pma1::Execute(ctx, incidences, theta, pma1::SampleRandomness(ctx, rng));
      out.count = run.count;
      out.transcript = std::move(run.transcript);
      break;
    }
    case Variant::kSpma1: {
      auto run = spma1::Execute(ctx, incidences, theta, spma1::SampleRandomness(ctx, rng));
      out.count = run.count;
      out.transcript = std::move(run.transcript);
      break;
    }
    case Variant::kSpma2:
    case Variant::kPma2: {
      auto run = spma2::Execute(ctx, incidences, theta, spma2::SampleRandomness(ctx, rng));
      out.count = run.count;
      out.transcript = std::move(run.transcript);
      break;
    }
  }
  out.cost = MeasureCosts(ctx.params, out.transcript);
  return out;
}

SchemeParams ResolveParams(const RunConfig& config, size_t parties, size_t universe) {
  SchemeParams raw;
  raw.variant = config.variant;
  raw.parties = parties;
  raw.collusion = config.collusion;
  raw.eavesdrop = config.eavesdrop;
  raw.communicating_parties = config.communicating_parties;
  raw.universe = universe;
  raw.modulus = config.modulus.value_or(0);
  raw.databases = config.databases ? *config.databases : AutoDatabases(raw);
  return raw;
}

bool RunReport::all_correct() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const ThetaOutcome& o) { return o.correct(); });
}

RunReport RunConfigured(const RunConfig& config) {
  RunReport report;
  report.config = config;
  size_t parties = config.parties.value_or(2);
  size_t universe = config.universe.value_or(2);
  std::optional<NamedDatasets> named;
  if (!config.datasets_path.empty()) {
    named = LoadDatasets(config.datasets_path);
    if (config.parties && *config.parties != named->parties.size()) {
      throw ParameterError("M = " + Str(*config.parties) + " but the datasets file has " +
                           Str(named->parties.size()) + " parties");
    }
    if (config.universe && *config.universe != named->universe.size()) {
      throw ParameterError("E = " + Str(*config.universe) +
                           " but the datasets file has a universe of " +
                           Str(named->universe.size()));
    }
    parties = named->parties.size();
    universe = named->universe.size();
  }
  const SchemeContext ctx =
      SchemeContext::Create(ResolveParams(config, parties, universe), &report.warnings);
  report.params = ctx.params;

  if (named) {
    report.datasets = named->parties;
    report.element_names = named->universe;
  } else {
    RandomSource rng(config.seed, 0);
    report.datasets = GenerateDatasets(ctx.params, config.probabilities, rng);
  }
  const std::vector<IncidenceVector> incidences = Incidences(report.datasets, universe);

  std::vector<size_t> thetas;
  if (config.theta) {
    if (*config.theta < 1 || *config.theta > universe) {
      throw ParameterError("theta = " + Str(*config.theta) + " outside 1.." + Str(universe));
    }
    thetas.push_back(*config.theta);
  } else {
    for (size_t t = 1; t <= universe; ++t) thetas.push_back(t);
  }
  for (size_t theta : thetas) {
    RandomSource rng(config.seed, theta);
    ProtocolRun run = RunProtocol(ctx, incidences, theta, rng);
    ThetaOutcome o;
    o.theta = theta;
    if (named) o.element = named->universe[theta - 1];
    o.count = run.count;
    o.true_count = TrueCount(theta, report.datasets);
    o.cost = run.cost;
    if (config.include_transcript) o.transcript = std::move(run.transcript);
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

nlohmann::json RunReport::ToJson() const {
  json runs = json::array();
  for (const auto& o : outcomes) {
    json r = {{"theta", o.theta},
              {"count", o.count},
              {"true_count", o.true_count},
              {"correct", o.correct()},
              {"cost", o.cost.ToJson()}};
    if (!o.element.empty()) r["element"] = o.element;
    if (o.transcript) r["transcript"] = TranscriptJson(*o.transcript);
    runs.push_back(std::move(r));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "run"},
          {"config", config.ToJson()},
          {"params", audit::ParamsJson(params)},
          {"warnings", warnings},
          {"datasets", DatasetsJson(datasets, element_names)},
          {"runs", runs},
          {"all_correct", all_correct()}};
}

std::string RunReport::ToCsv() const {
  std::ostringstream out;
  out << "schema_version,theta,element,count,true_count,correct,download,upload,"
         "randomness_sharing,storage_distribution,total,download_bound,formula_total\n";
  for (const auto& o : outcomes) {
    const auto& c = o.cost;
    out << kSchemaVersion << ',' << o.theta << ',' << o.element << ',' << o.count << ','
        << o.true_count << ',' << (o.correct() ? "true" : "false") << ',' << c.download
        << ',' << c.upload << ',' << c.randomness_sharing << ','
        << c.storage_distribution << ',' << c.total << ',' << c.download_bound << ','
        << c.formula_total << '\n';
  }
  return out.str();
}

std::string RunReport::ToText() const {
  std::ostringstream out;
  out << VariantName(params.variant) << "  M=" << params.parties
      << " N=" << params.databases << " T=" << params.collusion
      << " Y=" << params.MaxEavesdrop() << " T2=" << params.communicating_parties
      << " E=" << params.universe << " p=" << params.modulus
      << " databases used=" << params.effective_databases << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  Header(out, {{"theta", 6}, {"count", 7}, {"true", 6}, {"ok", 4}, {"down", 7},
               {"up", 7}, {"rand", 7}, {"store", 7}, {"total", 7}, {"bound", 7},
               {"formula", 9}});
  for (const auto& o : outcomes) {
    const auto& c = o.cost;
    out << std::setw(6) << o.theta << std::setw(7) << o.count << std::setw(6)
        << o.true_count << std::setw(4) << (o.correct() ? "y" : "N") << std::setw(7)
        << c.download << std::setw(7) << c.upload << std::setw(7)
        << c.randomness_sharing << std::setw(7) << c.storage_distribution
        << std::setw(7) << c.total << std::setw(7) << c.download_bound << std::setw(9)
        << c.formula_total;
    if (!o.element.empty()) out << "  " << o.element;
    out << "\n";
  }
  return out.str();
}

CostTable BuildCostTable(const CostSweep& sweep) {
  if (sweep.m_first > sweep.m_last) throw ParameterError("empty M range");
  CostTable table;
  table.sweep = sweep;
  for (size_t m = sweep.m_first; m <= sweep.m_last; ++m) {
    CostRow row;
    row.parties = m;
    uint64_t contrast = 1;
    for (size_t k = 0; k < sweep.contrast_k; ++k) contrast *= m;
    row.contrast = contrast * (sweep.contrast_k - 1);
    try {
      RunConfig config;
      config.variant = sweep.variant;
      config.databases = sweep.databases;
      config.collusion = sweep.collusion;
      config.eavesdrop = {sweep.eavesdrop};
      config.communicating_parties = sweep.communicating_parties;
      const SchemeContext ctx =
          SchemeContext::Create(ResolveParams(config, m, sweep.universe));
      RandomSource rng(sweep.seed, m);
      const std::vector<double> half{0.5};
      const auto datasets = GenerateDatasets(ctx.params, half, rng);
      const auto incidences = Incidences(datasets, sweep.universe);
      ProtocolRun run = RunProtocol(ctx, incidences, 1, rng);
      if (run.count != TrueCount(1, datasets)) {
        throw IntegrityError("decoded count differs from the true count at M = " + Str(m));
      }
      row.params = ctx.params;
      row.cost = run.cost;
      row.valid = true;
    } catch (const ParameterError& e) {
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }

  // Least squares through the origin, kept exact in integers:
  // slope = num / den, residual * den = sum |c * den - num * M|.
  int64_t num = 0;
  int64_t den = 0;
  for (const auto& r : table.rows) {
    if (!r.valid) continue;
    num += static_cast<int64_t>(r.parties * r.cost.download);
    den += static_cast<int64_t>(r.parties * r.parties);
  }
  if (den > 0) {
    int64_t scaled = 0;
    for (const auto& r : table.rows) {
      if (!r.valid) continue;
      scaled += std::llabs(static_cast<int64_t>(r.cost.download) * den -
                           num * static_cast<int64_t>(r.parties));
    }
    table.slope = static_cast<double>(num) / static_cast<double>(den);
    table.residual = static_cast<double>(scaled) / static_cast<double>(den);
    table.linear = scaled == 0;
  }
  return table;
}

nlohmann::json CostTable::ToJson() const {
  json rows_json = json::array();
  for (const auto& r : rows) {
    json row = {{"M", r.parties}, {"valid", r.valid}, {"contrast", r.contrast}};
    if (r.valid) {
      row["params"] = audit::ParamsJson(r.params);
      row["cost"] = r.cost.ToJson();
    } else {
      row["error"] = r.error;
    }
    rows_json.push_back(std::move(row));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "cost_table"},
          {"variant", std::string(VariantName(sweep.variant))},
          {"T", sweep.collusion},
          {"Y", sweep.eavesdrop},
          {"T2", sweep.communicating_parties},
          {"E", sweep.universe},
          {"N", AutoOr(sweep.databases, "auto")},
          {"contrast_k", sweep.contrast_k},
          {"rows", rows_json},
          {"fit", {{"slope", slope}, {"residual", residual}, {"linear", linear}}}};
}

std::string CostTable::ToCsv() const {
  std::ostringstream out;
  out << "schema_version,M,valid,N,p,download,upload,randomness_sharing,total,"
         "download_bound,formula_total,contrast\n";
  for (const auto& r : rows) {
    out << kSchemaVersion << ',' << r.parties << ',' << (r.valid ? "true" : "false");
    if (r.valid) {
      const auto& c = r.cost;
      out << ',' << r.params.databases << ',' << r.params.modulus << ',' << c.download
          << ',' << c.upload << ',' << c.randomness_sharing << ',' << c.total << ','
          << c.download_bound << ',' << c.formula_total;
    } else {
      out << ",,,,,,,,";
    }
    out << ',' << r.contrast << '\n';
  }
  return out.str();
}

std::string CostTable::ToText() const {
  std::ostringstream out;
  out << VariantName(sweep.variant) << " download cost, T=" << sweep.collusion
      << " Y=" << sweep.eavesdrop << " E=" << sweep.universe << "\n";
  Header(out, {{"M", 4}, {"N", 4}, {"p", 5}, {"download", 10}, {"bound", 7},
               {"total", 7}, {"formula", 9}, {"M^K(K-1)", 10}});
  for (const auto& r : rows) {
    out << std::setw(4) << r.parties;
    if (r.valid) {
      out << std::setw(4) << r.params.databases << std::setw(5) << r.params.modulus
          << std::setw(10) << r.cost.download << std::setw(7) << r.cost.download_bound
          << std::setw(7) << r.cost.total << std::setw(9) << r.cost.formula_total;
    } else {
      out << "  invalid: " << r.error;
    }
    out << std::setw(10) << r.contrast << "\n";
  }
  out << "fit download = " << slope << " * M, residual " << residual
      << (linear ? " (exactly linear)" : "") << "\n";
  return out.str();
}

namespace {

SchemeContext TypeOneContext(Variant variant) {
  SchemeParams p;
  p.variant = variant;
  p.parties = 2;
  p.databases = 2;
  p.collusion = 1;
  p.eavesdrop = {1};
  p.universe = 2;
  p.modulus = 3;
  return SchemeContext::Create(p);
}

SchemeContext TypeTwoContext() {
  SchemeParams p;
  p.variant = Variant::kSpma2;
  p.parties = 3;
  p.databases = 1;
  p.collusion = 1;
  p.eavesdrop = {1};
  p.universe = 2;
  p.modulus = 5;
  return SchemeContext::Create(p);
}

audit::AuditOptions Options(uint64_t cap, uint64_t seed) {
  audit::AuditOptions o;
  o.cap = cap;
  o.seed = seed;
  return o;
}

using audit::DatabaseRef;

}  // namespace

std::vector<SuiteCase> DefaultSuite() {
  std::vector<SuiteCase> s;
  auto add = [&](std::string name, std::string kind, int lemma, bool negative,
                 std::function<audit::AuditResult(uint64_t, uint64_t)> run) {
    s.push_back({std::move(name), std::move(kind), lemma, negative, std::move(run)});
  };
  const std::vector<DatabaseRef> first{{0, 0}};
  const std::vector<DatabaseRef> same_party{{0, 0}, {0, 1}};
  const std::vector<DatabaseRef> two_parties{{0, 0}, {1, 0}};
  const std::vector<DatabaseRef> tap{{1, 0}};
  const std::vector<DatabaseRef> two_taps{{1, 0}, {1, 1}};
  const std::vector<DatabaseRef> two_taps_type_two{{1, 0}, {2, 0}};

  add("symmetric_privacy_spma1", "symmetric_privacy", 1, false, [](uint64_t cap, uint64_t seed) {
    return audit::AuditSymmetricPrivacy(TypeOneContext(Variant::kSpma1), Options(cap, seed));
  });
  add("symmetric_privacy_spma2", "symmetric_privacy", 1, false, [](uint64_t cap, uint64_t seed) {
    auto o = Options(cap, seed);
    o.thetas = {1};
    return audit::AuditSymmetricPrivacy(TypeTwoContext(), o);
  });
  add("blind_estimation_pma1", "blind_estimation", 2, false, [](uint64_t cap, uint64_t seed) {
    return audit::AuditBlindEstimation(TypeOneContext(Variant::kPma1), Options(cap, seed));
  });
  add("blind_estimation_spma1", "blind_estimation", 2, false, [](uint64_t cap, uint64_t seed) {
    return audit::AuditBlindEstimation(TypeOneContext(Variant::kSpma1), Options(cap, seed));
  });
  add("query_privacy_spma2", "query_privacy", 3, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditQueryPrivacy(TypeTwoContext(), first, Options(cap, seed));
  });
  add("query_privacy_pma1", "query_privacy", 4, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditQueryPrivacy(TypeOneContext(Variant::kPma1), first, Options(cap, seed));
  });
  add("query_privacy_spma1", "query_privacy", 4, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditQueryPrivacy(TypeOneContext(Variant::kSpma1), first, Options(cap, seed));
  });
  add("storage_security_spma2", "storage_security", 5, false, [](uint64_t cap, uint64_t seed) {
    return audit::AuditStorageSecurity(TypeTwoContext(), 1, Options(cap, seed));
  });
  add("eavesdropper_pma1", "eavesdropper", 6, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditEavesdropper(TypeOneContext(Variant::kPma1), 0, tap, Options(cap, seed));
  });
  add("eavesdropper_spma1", "eavesdropper", 6, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditEavesdropper(TypeOneContext(Variant::kSpma1), 0, tap, Options(cap, seed));
  });
  add("eavesdropper_spma2", "eavesdropper", 7, false, [=](uint64_t cap, uint64_t seed) {
    return audit::AuditEavesdropper(TypeTwoContext(), 0, tap, Options(cap, seed));
  });

  add("symmetric_privacy_pma1", "symmetric_privacy", 1, true, [](uint64_t cap, uint64_t seed) {
    return audit::AuditSymmetricPrivacy(TypeOneContext(Variant::kPma1), Options(cap, seed));
  });
  add("symmetric_privacy_spma1_zero_zprime", "symmetric_privacy", 1, true,
      [](uint64_t cap, uint64_t seed) {
        auto o = Options(cap, seed);
        o.tamper.zero_answer_noise = true;
        return audit::AuditSymmetricPrivacy(TypeOneContext(Variant::kSpma1), o);
      });
  add("blind_estimation_pma1_zero_masks", "blind_estimation", 2, true,
      [](uint64_t cap, uint64_t seed) {
        auto o = Options(cap, seed);
        o.tamper.zero_masks = true;
        return audit::AuditBlindEstimation(TypeOneContext(Variant::kPma1), o);
      });
  add("query_privacy_spma2_over_budget", "query_privacy", 3, true,
      [=](uint64_t cap, uint64_t seed) {
        return audit::AuditQueryPrivacy(TypeTwoContext(), two_parties, Options(cap, seed));
      });
  add("query_privacy_pma1_over_budget", "query_privacy", 4, true,
      [=](uint64_t cap, uint64_t seed) {
        return audit::AuditQueryPrivacy(TypeOneContext(Variant::kPma1), same_party,
                                        Options(cap, seed));
      });
  add("storage_security_spma2_over_budget", "storage_security", 5, true,
      [](uint64_t cap, uint64_t seed) {
        return audit::AuditStorageSecurity(TypeTwoContext(), 2, Options(cap, seed));
      });
  add("storage_security_spma2_zero_noise", "storage_security", 5, true,
      [](uint64_t cap, uint64_t seed) {
        auto o = Options(cap, seed);
        o.tamper.zero_storage_noise = true;
        return audit::AuditStorageSecurity(TypeTwoContext(), 1, o);
      });
  add("eavesdropper_pma1_over_budget", "eavesdropper", 6, true,
      [=](uint64_t cap, uint64_t seed) {
        return audit::AuditEavesdropper(TypeOneContext(Variant::kPma1), 0, two_taps,
                                        Options(cap, seed));
      });
  add("eavesdropper_pma1_zero_masks", "eavesdropper", 6, true,
      [=](uint64_t cap, uint64_t seed) {
        auto o = Options(cap, seed);
        o.tamper.zero_masks = true;
        return audit::AuditEavesdropper(TypeOneContext(Variant::kPma1), 0, tap, o);
      });
  add("eavesdropper_spma2_over_budget", "eavesdropper", 7, true,
      [=](uint64_t cap, uint64_t seed) {
        return audit::AuditEavesdropper(TypeTwoContext(), 0, two_taps_type_two,
                                        Options(cap, seed));
      });
  return s;
}

bool SuiteEntry::as_expected() const {
  return result.has_value() && result->passed != negative_control;
}

bool SuiteReport::all_as_expected() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SuiteEntry& e) { return e.as_expected(); });
}

SuiteReport RunAuditSuite(const SuiteOptions& options) {
  const std::vector<SuiteCase> suite = DefaultSuite();
  std::vector<bool> chosen(suite.size(), false);
  for (const auto& sel : options.selection) {
    bool matched = false;
    for (size_t c = 0; c < suite.size(); ++c) {
      const auto& sc = suite[c];
      if (sel == "all" || sel == sc.name || sel == sc.audit ||
          sel == "lemma" + std::to_string(sc.lemma)) {
        chosen[c] = true;
        matched = true;
      }
    }
    if (!matched) throw ParameterError("no audit matches '" + sel + "'");
  }
  SuiteReport report;
  for (size_t c = 0; c < suite.size(); ++c) {
    if (!chosen[c]) continue;
    const auto& sc = suite[c];
    SuiteEntry entry{sc.name, sc.audit, sc.lemma, sc.negative_control, std::nullopt, ""};
    try {
      entry.result = sc.run(options.cap, options.seed);
    } catch (const AuditInfeasibleError& e) {
      entry.error = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

nlohmann::json SuiteReport::ToJson() const {
  json list = json::array();
  size_t expected = 0;
  for (const auto& e : entries) {
    json item = {{"name", e.name},
                 {"audit", e.audit},
                 {"lemma", e.lemma},
                 {"negative_control", e.negative_control},
                 {"expected_verdict", e.negative_control ? "fail" : "pass"},
                 {"as_expected", e.as_expected()}};
    if (e.result) {
      item["result"] = e.result->ToJson();
    } else {
      item["error"] = e.error;
    }
    expected += e.as_expected() ? 1 : 0;
    list.push_back(std::move(item));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "audit_suite"},
          {"entries", list},
          {"as_expected", expected},
          {"unexpected", entries.size() - expected},
          {"all_as_expected", all_as_expected()}};
}

std::string SuiteReport::ToText() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << std::left << std::setw(40) << e.name << std::right << " lemma " << e.lemma
        << "  expect " << (e.negative_control ? "fail" : "pass") << "  got ";
    if (e.result) {
      out << (e.result->passed ? "pass" : "fail") << "  "
          << e.result->enumerated_assignments << " assignments";
    } else {
      out << "error: " << e.error;
    }
    out << (e.as_expected() ? "" : "  UNEXPECTED") << "\n";
  }
  return out.str();
}

}  // namespace pma::harness
