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

#include "pma/model.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "pma/errors.h"

namespace pma {

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kPma1:
      return "pma1";
    case Variant::kSpma1:
      return "spma1";
    case Variant::kSpma2:
      return "spma2";
    case Variant::kPma2:
      return "pma2";
  }
  return "unknown";
}

Variant ParseVariant(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "pma1" || key == "pmai") return Variant::kPma1;
  if (key == "spma1" || key == "spmai") return Variant::kSpma1;
  if (key == "spma2" || key == "spmaii") return Variant::kSpma2;
  if (key == "pma2" || key == "pmaii") return Variant::kPma2;
  throw ParameterError("unknown variant '" + std::string(name) +
                       "' (expected pma1, spma1, spma2 or pma2)");
}

size_t SchemeParams::MaxEavesdrop() const {
  size_t y = 0;
  for (size_t v : eavesdrop) y = std::max(y, v);
  return y;
}

size_t SchemeParams::QueryNoiseDegree() const {
  if (IsTypeTwo(variant)) return std::max(collusion * databases, MaxEavesdrop());
  return std::max(collusion, MaxEavesdrop());
}

size_t SchemeParams::EvalPointCount() const {
  if (IsTypeTwo(variant)) {
    return communicating_parties * databases + QueryNoiseDegree() + 1;
  }
  return databases;
}

size_t SchemeParams::DownloadBound() const {
  if (IsTypeTwo(variant)) return EvalPointCount();
  return parties * (QueryNoiseDegree() + 1);
}

namespace {

std::string Str(size_t v) { return std::to_string(v); }

void CheckShape(const SchemeParams& p) {
  if (p.parties < 2) throw ParameterError("M >= 2 violated: M = " + Str(p.parties));
  if (p.databases < 1) throw ParameterError("N >= 1 violated: N = 0");
  if (p.universe < 1) throw ParameterError("E >= 1 violated: E = 0");
  if (p.eavesdrop.size() > 1 && p.eavesdrop.size() != p.parties) {
    throw ParameterError("eavesdropping budgets: expected 1 or M = " +
                         Str(p.parties) + " entries, got " +
                         Str(p.eavesdrop.size()));
  }
  if (IsTypeTwo(p.variant) && p.communicating_parties < 1) {
    throw ParameterError("T2 >= 1 violated: T2 = 0");
  }
}

bool ModulusFits(const SchemeParams& p, uint64_t modulus) {
  return IsPrime(modulus) && modulus > p.parties && modulus - 1 >= p.EvalPointCount();
}

}  // namespace

uint64_t AutoModulus(const SchemeParams& params) {
  uint64_t candidate = 2;
  while (!ModulusFits(params, candidate)) ++candidate;
  return candidate;
}

size_t AutoDatabases(const SchemeParams& params) {
  if (!IsTypeTwo(params.variant)) return params.QueryNoiseDegree() + 1;
  SchemeParams probe = params;
  for (size_t n = 1; n <= 4096; ++n) {
    probe.databases = n;
    if (probe.EvalPointCount() <= probe.TotalDatabases()) return n;
  }
  throw ParameterError("no N satisfies MN >= T2*N + max(TN, Y_1..Y_M) + 1 for M = " +
                       Str(params.parties) + ", T = " + Str(params.collusion));
}

SchemeParams ValidateParams(SchemeParams raw, std::vector<std::string>* warnings) {
  CheckShape(raw);
  const size_t mu = raw.QueryNoiseDegree();
  auto warn = [&](std::string w) {
    if (warnings != nullptr) warnings->push_back(std::move(w));
  };

  if (IsTypeTwo(raw.variant)) {
    const size_t needed = raw.EvalPointCount();
    if (needed > raw.TotalDatabases()) {
      throw ParameterError("MN >= T2*N + max(TN, Y_1..Y_M) + 1 violated: MN = " +
                           Str(raw.TotalDatabases()) + " < " + Str(needed));
    }
    raw.effective_databases = needed;
    if (needed < raw.TotalDatabases()) {
      warn("only " + Str(needed) + " of " + Str(raw.TotalDatabases()) +
           " databases are needed; the rest stay idle");
    }
  } else {
    if (raw.databases < mu + 1) {
      throw ParameterError("N >= max(T,Y)+1 violated: N = " + Str(raw.databases) +
                           " < " + Str(mu + 1));
    }
    raw.effective_databases = raw.databases;
    if (raw.databases > mu + 1) {
      warn("N = " + Str(raw.databases) + " exceeds max(T,Y)+1 = " + Str(mu + 1) +
           "; extra databases only add download cost");
    }
  }
  if (mu == 0) warn("no query noise (T = Y = 0): queries reveal theta");

  if (raw.modulus == 0) raw.modulus = AutoModulus(raw);
  if (!IsPrime(raw.modulus)) {
    throw ParameterError("p prime violated: p = " + std::to_string(raw.modulus));
  }
  if (raw.modulus <= raw.parties) {
    throw ParameterError("p > M violated: p = " + std::to_string(raw.modulus) +
                         ", M = " + Str(raw.parties));
  }
  if (raw.modulus - 1 < raw.EvalPointCount()) {
    throw ParameterError("p - 1 >= number of evaluation points violated: p = " +
                         std::to_string(raw.modulus) + ", points = " +
                         Str(raw.EvalPointCount()));
  }
  return raw;
}

SchemeContext SchemeContext::Create(const SchemeParams& raw,
                                    std::vector<std::string>* warnings) {
  SchemeParams params = ValidateParams(raw, warnings);
  PrimeField field(params.modulus);
  EvalPoints alphas = EvalPoints::Default(field, params.EvalPointCount());
  return SchemeContext{std::move(params), field, std::move(alphas)};
}

SchemeContext SchemeContext::Create(const SchemeParams& raw, FieldVector alphas,
                                    std::vector<std::string>* warnings) {
  SchemeParams params = ValidateParams(raw, warnings);
  PrimeField field(params.modulus);
  if (alphas.size() < params.EvalPointCount()) {
    throw ParameterError("need " + Str(params.EvalPointCount()) +
                         " evaluation points, got " + Str(alphas.size()));
  }
  EvalPoints points(field, std::move(alphas));
  return SchemeContext{std::move(params), field, std::move(points)};
}

FieldVector IncidenceVector::ToField() const {
  FieldVector v(bits.size());
  for (size_t k = 0; k < bits.size(); ++k) v[k] = FieldElement(bits[k] ? 1 : 0);
  return v;
}

IncidenceVector Incidence(const PartyDataset& dataset, size_t universe) {
  IncidenceVector out{std::vector<uint8_t>(universe, 0)};
  for (size_t member : dataset.members) {
    if (member < 1 || member > universe) {
      throw ParameterError("element index " + Str(member) + " outside 1.." +
                           Str(universe));
    }
    out.bits[member - 1] = 1;
  }
  return out;
}

PartyDataset DatasetFromIncidence(const IncidenceVector& incidence) {
  PartyDataset out;
  for (size_t k = 0; k < incidence.size(); ++k) {
    if (incidence.bits[k]) out.members.insert(k + 1);
  }
  return out;
}

std::vector<IncidenceVector> Incidences(std::span<const PartyDataset> datasets,
                                        size_t universe) {
  std::vector<IncidenceVector> out;
  out.reserve(datasets.size());
  for (const auto& d : datasets) out.push_back(Incidence(d, universe));
  return out;
}

size_t TrueCount(size_t theta, std::span<const PartyDataset> datasets) {
  return static_cast<size_t>(
      std::count_if(datasets.begin(), datasets.end(),
                    [theta](const PartyDataset& d) { return d.members.contains(theta); }));
}

std::vector<PartyDataset> GenerateDatasets(const SchemeParams& params,
                                           std::span<const double> probs,
                                           RandomSource& rng) {
  if (probs.size() != 1 && probs.size() != params.universe) {
    throw ParameterError("expected 1 or E = " + Str(params.universe) +
                         " membership probabilities, got " + Str(probs.size()));
  }
  for (double q : probs) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw ParameterError("membership probability " + std::to_string(q) +
                           " outside [0, 1]");
    }
  }
  std::vector<PartyDataset> out(params.parties);
  for (auto& party : out) {
    for (size_t k = 1; k <= params.universe; ++k) {
      const double q = probs.size() == 1 ? probs[0] : probs[k - 1];
      if (rng.Bernoulli(q)) party.members.insert(k);
    }
  }
  return out;
}

std::vector<std::vector<IncidenceVector>> AllIncidenceAssignments(size_t parties,
                                                                  size_t universe) {
  const size_t bits = parties * universe;
  if (bits >= 24) throw ParameterError("too many assignments to enumerate");
  std::vector<std::vector<IncidenceVector>> out;
  out.reserve(size_t{1} << bits);
  for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
    std::vector<IncidenceVector> assignment(
        parties, IncidenceVector{std::vector<uint8_t>(universe, 0)});
    for (size_t b = 0; b < bits; ++b) {
      // Most significant bit first: party 1, element 1.
      assignment[b / universe].bits[b % universe] =
          static_cast<uint8_t>((mask >> (bits - 1 - b)) & 1);
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

std::optional<size_t> NamedDatasets::IndexOf(std::string_view name) const {
  auto it = std::lower_bound(universe.begin(), universe.end(), name);
  if (it == universe.end() || *it != name) return std::nullopt;
  return static_cast<size_t>(it - universe.begin()) + 1;
}

NamedDatasets ParseDatasets(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("dataset file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("parties")) {
    throw ParameterError("dataset file needs \"universe\" and \"parties\" keys");
  }
  const auto& universe = doc["universe"];
  const auto& parties = doc["parties"];
  if (!universe.is_array() || !parties.is_array()) {
    throw ParameterError("\"universe\" and \"parties\" must be arrays");
  }

  NamedDatasets out;
  for (const auto& item : universe) {
    if (!item.is_string()) {
      throw ParameterError("universe element " + item.dump() + " is not a string");
    }
    out.universe.push_back(item.get<std::string>());
  }
  std::sort(out.universe.begin(), out.universe.end());
  auto dup = std::adjacent_find(out.universe.begin(), out.universe.end());
  if (dup != out.universe.end()) {
    throw ParameterError("universe element \"" + *dup + "\" is listed twice");
  }

  for (size_t i = 0; i < parties.size(); ++i) {
    const auto& party = parties[i];
    if (!party.is_array()) {
      throw ParameterError("party " + Str(i + 1) + " is not an array");
    }
    PartyDataset dataset;
    for (const auto& item : party) {
      if (!item.is_string()) {
        throw ParameterError("party " + Str(i + 1) + " element " + item.dump() +
                             " is not a string");
      }
      const auto name = item.get<std::string>();
      auto index = out.IndexOf(name);
      if (!index) {
        throw ParameterError("party " + Str(i + 1) + " holds \"" + name +
                             "\" which is not in the universe");
      }
      dataset.members.insert(*index);
    }
    out.parties.push_back(std::move(dataset));
  }
  return out;
}

NamedDatasets LoadDatasets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open dataset file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseDatasets(buffer.str());
}

}  // namespace pma
