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

#include "pma/audit.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "pma/errors.h"
#include "pma/pma1.h"
#include "pma/random_source.h"
#include "pma/spma1.h"
#include "pma/spma2.h"
#include "pma/transcript.h"

namespace pma::audit {
namespace {

// Offsets of each randomness component inside one flat vector.
struct Layout {
  size_t query_noise = 0;
  size_t query_noise_size = 0;
  size_t masks = 0;  // free masks S_1..S_{M-1}, type I
  size_t masks_size = 0;
  size_t zprime = 0;
  size_t zprime_size = 0;
  size_t storage = 0;  // X_il, type II
  size_t storage_size = 0;
  size_t total = 0;
};

Layout MakeLayout(const SchemeParams& params) {
  Layout l;
  const size_t e = params.universe;
  const size_t mu = params.QueryNoiseDegree();
  if (IsTypeTwo(params.variant)) {
    l.storage_size = params.parties * params.StorageNoiseDegree() * e;
    l.query_noise = l.storage_size;
    l.query_noise_size = mu * e;
    l.zprime = l.query_noise + l.query_noise_size;
    l.zprime_size = params.effective_databases - 1;
    l.total = l.zprime + l.zprime_size;
  } else {
    l.query_noise_size = params.parties * mu * e;
    l.masks = l.query_noise_size;
    l.masks_size = (params.parties - 1) * params.databases;
    l.zprime = l.masks + l.masks_size;
    l.zprime_size =
        params.variant == Variant::kSpma1 ? params.parties * (params.databases - 1) : 0;
    l.total = l.zprime + l.zprime_size;
  }
  return l;
}

// Plays runs from flat randomness vectors, reusing its buffers.
class FlatRunner {
 public:
  explicit FlatRunner(const SchemeContext& ctx)
      : ctx_(ctx), layout_(MakeLayout(ctx.params)) {
    if (IsTypeTwo(ctx.params.variant)) {
      type_two_ = spma2::ZeroRandomness(ctx);
    } else {
      type_one_ = spma1::ZeroRandomness(ctx);
    }
  }

  const Layout& layout() const { return layout_; }

  void Run(std::span<const FieldElement> flat,
           std::span<const IncidenceVector> incidences, size_t theta,
           Transcript& transcript) {
    const auto& params = ctx_.params;
    const size_t e = params.universe;
    if (IsTypeTwo(params.variant)) {
      size_t at = layout_.storage;
      for (auto& row : type_two_.storage_noise) {
        for (auto& v : row) {
          for (size_t k = 0; k < e; ++k) v[k] = flat[at++];
        }
      }
      at = layout_.query_noise;
      for (auto& v : type_two_.query_noise) {
        for (size_t k = 0; k < e; ++k) v[k] = flat[at++];
      }
      at = layout_.zprime;
      for (auto& z : type_two_.zprime) z = flat[at++];
      spma2::Run(ctx_, incidences, theta, type_two_, transcript);
      return;
    }
    size_t at = layout_.query_noise;
    for (auto& row : type_one_.base.query_noise) {
      for (auto& v : row) {
        for (size_t k = 0; k < e; ++k) v[k] = flat[at++];
      }
    }
    at = layout_.masks;
    for (auto& v : type_one_.base.free_masks) {
      for (auto& s : v) s = flat[at++];
    }
    if (params.variant == Variant::kSpma1) {
      at = layout_.zprime;
      for (auto& row : type_one_.noise.zprime) {
        for (auto& z : row) z = flat[at++];
      }
      spma1::Run(ctx_, incidences, theta, type_one_, transcript);
    } else {
      pma1::Run(ctx_, incidences, theta, type_one_.base, transcript);
    }
  }

 private:
  const SchemeContext& ctx_;
  Layout layout_;
  spma1::Randomness type_one_;
  spma2::Randomness type_two_;
};

// Which flat positions are enumerated; every other position keeps its value
// from `base`.
class Plan {
 public:
  explicit Plan(size_t total) : base_(total) {}

  void Enumerate(size_t offset, size_t size) {
    for (size_t k = 0; k < size; ++k) enumerated_.push_back(offset + k);
  }
  void FixRandom(size_t offset, size_t size, const PrimeField& field, RandomSource& rng) {
    for (size_t k = 0; k < size; ++k) base_[offset + k] = rng.Uniform(field);
  }

  size_t dims() const { return enumerated_.size(); }

  void Fill(std::span<const FieldElement> assignment, FieldVector& flat) const {
    flat = base_;
    for (size_t k = 0; k < enumerated_.size(); ++k) flat[enumerated_[k]] = assignment[k];
  }

 private:
  FieldVector base_;
  std::vector<size_t> enumerated_;
};

struct Config {
  size_t theta = 1;
  std::vector<IncidenceVector> incidences;
};

nlohmann::json ConfigJson(const Config& c) {
  nlohmann::json parties = nlohmann::json::array();
  for (const auto& p : c.incidences) parties.push_back(p.bits);
  return {{"theta", c.theta}, {"incidence", parties}};
}

size_t CountOf(const Config& c) {
  return static_cast<size_t>(std::count_if(
      c.incidences.begin(), c.incidences.end(),
      [&](const IncidenceVector& p) { return p.Holds(c.theta); }));
}

using Observer = std::function<void(const Transcript&, FieldVector&)>;

class Tallier {
 public:
  Tallier(const SchemeContext& ctx, const Plan& plan, uint64_t cap)
      : ctx_(ctx), plan_(plan), runner_(ctx), cap_(cap) {}

  const Layout& layout() const { return runner_.layout(); }

  DistributionMap Tally(const Config& config, const Observer& observe) {
    FieldVector flat;
    Transcript transcript;
    DistributionMap dist = EnumerateDistribution(
        ctx_.field, plan_.dims(),
        [&](std::span<const FieldElement> assignment, FieldVector& view) {
          plan_.Fill(assignment, flat);
          runner_.Run(flat, config.incidences, config.theta, transcript);
          observe(transcript, view);
        },
        cap_);
    enumerated_ += dist.total();
    return dist;
  }

  uint64_t enumerated() const { return enumerated_; }

 private:
  const SchemeContext& ctx_;
  const Plan& plan_;
  FlatRunner runner_;
  uint64_t cap_;
  uint64_t enumerated_ = 0;
};

using Classifier = std::function<std::string(const Config&, const Config&)>;

// Tallies the configs in order and compares each with the first config of
// its group, stopping at the first mismatch.
template <typename Key>
std::optional<Witness> CheckGroups(Tallier& tallier, const std::vector<Config>& configs,
                                   const std::function<Key(const Config&)>& key,
                                   const Observer& observe, const Classifier& classify) {
  std::map<Key, std::pair<size_t, DistributionMap>> firsts;
  for (size_t c = 0; c < configs.size(); ++c) {
    DistributionMap dist = tallier.Tally(configs[c], observe);
    auto [it, inserted] = firsts.try_emplace(key(configs[c]), c, DistributionMap{});
    if (inserted) {
      it->second.second = std::move(dist);
      continue;
    }
    const auto& [first, reference] = it->second;
    if (auto diff = reference.FirstDifference(dist)) {
      const Config& ca = configs[first];
      const Config& cb = configs[c];
      return Witness{classify(ca, cb), ConfigJson(ca), ConfigJson(cb), *diff,
                     reference.Probability(*diff), dist.Probability(*diff)};
    }
  }
  return std::nullopt;
}

std::vector<size_t> Thetas(const SchemeParams& params, const AuditOptions& options) {
  if (!options.thetas.empty()) {
    for (size_t t : options.thetas) {
      if (t < 1 || t > params.universe) {
        throw ParameterError("theta = " + std::to_string(t) + " outside 1.." +
                             std::to_string(params.universe));
      }
    }
    return options.thetas;
  }
  std::vector<size_t> out(params.universe);
  for (size_t t = 0; t < out.size(); ++t) out[t] = t + 1;
  return out;
}

IncidenceVector BitsToIncidence(uint64_t bits, size_t universe) {
  IncidenceVector out{std::vector<uint8_t>(universe, 0)};
  for (size_t k = 0; k < universe; ++k) out.bits[k] = static_cast<uint8_t>((bits >> k) & 1);
  return out;
}

std::vector<IncidenceVector> EmptyIncidences(const SchemeParams& params) {
  return std::vector<IncidenceVector>(
      params.parties, IncidenceVector{std::vector<uint8_t>(params.universe, 0)});
}

void AppendQuery(const Transcript& t, const DatabaseRef& db, FieldVector& view) {
  const FieldVector q = t.QueryTo(db.party, db.database);
  view.insert(view.end(), q.begin(), q.end());
}

void AppendAnswer(const Transcript& t, const DatabaseRef& db, FieldVector& view) {
  const FieldVector a = t.AnswerFrom(db.party, db.database);
  view.insert(view.end(), a.begin(), a.end());
}

void AppendAllAnswers(const Transcript& t, FieldVector& view) {
  for (const auto& e : t.events()) {
    if (e.kind == LinkKind::kAnswer) view.push_back(e.value);
  }
}

void CheckDatabase(const SchemeParams& params, const DatabaseRef& db) {
  if (db.party >= params.parties || db.database >= params.databases) {
    throw ParameterError("database (" + std::to_string(db.party + 1) + ", " +
                         std::to_string(db.database + 1) + ") does not exist");
  }
  if (IsTypeTwo(params.variant) &&
      db.party * params.databases + db.database >= params.effective_databases) {
    throw ParameterError("database (" + std::to_string(db.party + 1) + ", " +
                         std::to_string(db.database + 1) +
                         ") is idle in this configuration");
  }
}

const char* ViewKindName(ViewKind kind) {
  switch (kind) {
    case ViewKind::kColludingDatabases:
      return "colluding_databases";
    case ViewKind::kEavesdropperLinks:
      return "eavesdropper_links";
    case ViewKind::kCommunicatingDatabases:
      return "communicating_databases";
    case ViewKind::kUserTranscript:
      return "user_transcript";
  }
  return "unknown";
}

AuditResult NewResult(const SchemeContext& ctx, std::string name, int lemma,
                      AdversaryView adversary) {
  AuditResult r;
  r.audit = std::move(name);
  r.lemma = lemma;
  r.params = ctx.params;
  r.adversary = std::move(adversary);
  return r;
}

void Finish(AuditResult& result, const Tallier& tallier, std::optional<Witness> witness) {
  result.enumerated_assignments = tallier.enumerated();
  result.passed = !witness.has_value();
  result.witness = std::move(witness);
}

}  // namespace

nlohmann::json ParamsJson(const SchemeParams& params) {
  return {{"variant", VariantName(params.variant)},
          {"M", params.parties},
          {"N", params.databases},
          {"T", params.collusion},
          {"Y", params.eavesdrop},
          {"T2", params.communicating_parties},
          {"E", params.universe},
          {"p", params.modulus},
          {"effective_databases", params.effective_databases}};
}

nlohmann::json AuditResult::ToJson() const {
  nlohmann::json selection = nlohmann::json::array();
  for (const auto& db : adversary.selection) {
    selection.push_back({{"party", db.party + 1}, {"database", db.database + 1}});
  }
  nlohmann::json out = {
      {"audit", audit},
      {"lemma", lemma},
      {"params", ParamsJson(params)},
      {"adversary",
       {{"kind", ViewKindName(adversary.kind)},
        {"selection", selection},
        {"budget", adversary.budget},
        {"within_budget", adversary.within_budget}}},
      {"verdict", passed ? "pass" : "fail"},
      {"enumerated_assignments", enumerated_assignments},
  };
  if (witness) {
    std::vector<uint32_t> view;
    for (FieldElement v : witness->view) view.push_back(v.value);
    out["witness"] = {{"differs_in", witness->differs_in},
                      {"secret_a", witness->secret_a},
                      {"secret_b", witness->secret_b},
                      {"view", view},
                      {"probability_a", witness->probability_a.ToString()},
                      {"probability_b", witness->probability_b.ToString()}};
  }
  return out;
}

AuditResult AuditQueryPrivacy(const SchemeContext& ctx,
                              std::span<const DatabaseRef> colluding,
                              const AuditOptions& options) {
  const auto& params = ctx.params;
  const bool type_two = IsTypeTwo(params.variant);
  AdversaryView adversary{ViewKind::kColludingDatabases,
                          {colluding.begin(), colluding.end()},
                          type_two ? params.collusion * params.databases
                                   : params.collusion};
  std::map<size_t, size_t> per_party;
  for (const auto& db : colluding) {
    CheckDatabase(params, db);
    ++per_party[db.party];
  }
  adversary.within_budget = colluding.size() <= adversary.budget &&
                            (type_two || per_party.size() <= 1);

  AuditResult result = NewResult(ctx, "query_privacy", type_two ? 3 : 4, adversary);
  const Layout layout = MakeLayout(params);
  Plan plan(layout.total);
  plan.Enumerate(layout.query_noise, layout.query_noise_size);
  Tallier tallier(ctx, plan, options.cap);

  std::vector<Config> configs;
  for (size_t theta : Thetas(params, options)) {
    configs.push_back({theta, EmptyIncidences(params)});
  }
  const std::vector<DatabaseRef> selection(colluding.begin(), colluding.end());
  auto witness = CheckGroups<int>(
      tallier, configs, [](const Config&) { return 0; },
      [&](const Transcript& t, FieldVector& view) {
        for (const auto& db : selection) AppendQuery(t, db, view);
      },
      [](const Config&, const Config&) { return std::string("theta"); });
  Finish(result, tallier, std::move(witness));
  return result;
}

AuditResult AuditBlindEstimation(const SchemeContext& ctx, const AuditOptions& options,
                                 BlindEstimationView mode) {
  const auto& params = ctx.params;
  if (IsTypeTwo(params.variant)) {
    throw ParameterError("blind estimation audit covers the type I variants");
  }
  AuditResult result =
      NewResult(ctx, mode == BlindEstimationView::kAnswersOnly
                         ? "blind_estimation"
                         : "blind_estimation_given_queries",
                2, AdversaryView{ViewKind::kUserTranscript, {}, 0, true});

  const Layout layout = MakeLayout(params);
  Plan plan(layout.total);
  RandomSource rng(options.seed);
  if (mode == BlindEstimationView::kAnswersOnly) {
    plan.Enumerate(layout.query_noise, layout.query_noise_size);
  } else {
    plan.FixRandom(layout.query_noise, layout.query_noise_size, ctx.field, rng);
  }
  if (!options.tamper.zero_masks) plan.Enumerate(layout.masks, layout.masks_size);
  if (!options.tamper.zero_answer_noise) plan.Enumerate(layout.zprime, layout.zprime_size);
  Tallier tallier(ctx, plan, options.cap);

  // Secret: theta, the other elements' bits (gamma), and the placement of
  // theta. Groups share theta, gamma and the count.
  const size_t m = params.parties;
  const size_t e = params.universe;
  const size_t gamma_bits = m * (e - 1);
  if (gamma_bits + m >= 24) throw AuditInfeasibleError("too many dataset configurations");
  std::vector<Config> configs;
  std::vector<std::tuple<size_t, uint64_t, size_t>> keys;
  for (size_t theta : Thetas(params, options)) {
    for (uint64_t gamma = 0; gamma < (uint64_t{1} << gamma_bits); ++gamma) {
      for (uint64_t placement = 0; placement < (uint64_t{1} << m); ++placement) {
        Config c{theta, EmptyIncidences(params)};
        uint64_t rest = gamma;
        for (size_t i = 0; i < m; ++i) {
          for (size_t k = 1; k <= e; ++k) {
            if (k == theta) {
              c.incidences[i].bits[k - 1] = static_cast<uint8_t>((placement >> i) & 1);
            } else {
              c.incidences[i].bits[k - 1] = static_cast<uint8_t>(rest & 1);
              rest >>= 1;
            }
          }
        }
        keys.emplace_back(theta, gamma, static_cast<size_t>(std::popcount(placement)));
        configs.push_back(std::move(c));
      }
    }
  }
  std::map<const Config*, size_t> index;
  for (size_t c = 0; c < configs.size(); ++c) index[&configs[c]] = c;
  auto witness = CheckGroups<std::tuple<size_t, uint64_t, size_t>>(
      tallier, configs, [&](const Config& c) { return keys[index.at(&c)]; },
      [](const Transcript& t, FieldVector& view) { AppendAllAnswers(t, view); },
      [](const Config&, const Config&) { return std::string("placement"); });
  Finish(result, tallier, std::move(witness));
  return result;
}

AuditResult AuditSymmetricPrivacy(const SchemeContext& ctx, const AuditOptions& options) {
  const auto& params = ctx.params;
  AuditResult result = NewResult(ctx, "symmetric_privacy", 1,
                                 AdversaryView{ViewKind::kUserTranscript, {}, 0, true});
  const Layout layout = MakeLayout(params);
  Plan plan(layout.total);
  RandomSource rng(options.seed);
  // The user knows its queries.
  plan.FixRandom(layout.query_noise, layout.query_noise_size, ctx.field, rng);
  if (!options.tamper.zero_masks) plan.Enumerate(layout.masks, layout.masks_size);
  if (!options.tamper.zero_answer_noise) plan.Enumerate(layout.zprime, layout.zprime_size);
  if (!options.tamper.zero_storage_noise) {
    plan.Enumerate(layout.storage, layout.storage_size);
  }
  Tallier tallier(ctx, plan, options.cap);

  std::vector<Config> configs;
  for (size_t theta : Thetas(params, options)) {
    for (auto& assignment : AllIncidenceAssignments(params.parties, params.universe)) {
      configs.push_back({theta, std::move(assignment)});
    }
  }
  auto witness = CheckGroups<std::pair<size_t, std::vector<uint8_t>>>(
      tallier, configs,
      [](const Config& c) {
        std::vector<uint8_t> placement;
        for (const auto& p : c.incidences) placement.push_back(p.Holds(c.theta));
        return std::make_pair(c.theta, placement);
      },
      [](const Transcript& t, FieldVector& view) { AppendAllAnswers(t, view); },
      [](const Config&, const Config&) { return std::string("other_elements"); });
  Finish(result, tallier, std::move(witness));
  return result;
}

AuditResult AuditStorageSecurity(const SchemeContext& ctx, size_t share_count,
                                 const AuditOptions& options) {
  const auto& params = ctx.params;
  if (!IsTypeTwo(params.variant)) {
    throw ParameterError("storage security audit covers the type II variants");
  }
  const size_t n_eff = params.effective_databases;
  if (share_count > n_eff) {
    throw ParameterError("only " + std::to_string(n_eff) + " databases hold shares");
  }
  AdversaryView adversary{ViewKind::kCommunicatingDatabases, {},
                          params.StorageNoiseDegree(), true};
  adversary.within_budget = share_count <= adversary.budget;
  AuditResult result = NewResult(ctx, "storage_security", 5, adversary);

  const Layout layout = MakeLayout(params);
  const size_t per_party = params.StorageNoiseDegree() * params.universe;
  std::optional<Witness> witness;
  uint64_t enumerated = 0;
  for (size_t party = 0; party < params.parties && !witness; ++party) {
    Plan plan(layout.total);
    if (!options.tamper.zero_storage_noise) {
      plan.Enumerate(layout.storage + party * per_party, per_party);
    }
    Tallier tallier(ctx, plan, options.cap);

    std::vector<Config> configs;
    for (uint64_t bits = 0; bits < (uint64_t{1} << params.universe); ++bits) {
      Config c{1, EmptyIncidences(params)};
      c.incidences[party] = BitsToIncidence(bits, params.universe);
      configs.push_back(std::move(c));
    }
    // Every share_count-subset of the participating databases.
    std::vector<bool> chosen(n_eff, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(share_count), true);
    do {
      std::vector<DatabaseRef> subset;
      for (size_t n = 0; n < n_eff; ++n) {
        if (chosen[n]) {
          subset.push_back({spma2::OwnerParty(params, n), spma2::LocalIndex(params, n)});
        }
      }
      witness = CheckGroups<int>(
          tallier, configs, [](const Config&) { return 0; },
          [&](const Transcript& t, FieldVector& view) {
            for (const auto& db : subset) {
              const FieldVector s = t.ShareTo(party, db.party, db.database);
              view.insert(view.end(), s.begin(), s.end());
            }
          },
          [](const Config&, const Config&) { return std::string("contents"); });
      if (witness) result.adversary.selection = subset;
    } while (!witness && std::prev_permutation(chosen.begin(), chosen.end()));
    enumerated += tallier.enumerated();
  }
  result.enumerated_assignments = enumerated;
  result.passed = !witness.has_value();
  result.witness = std::move(witness);
  return result;
}

AuditResult AuditEavesdropper(const SchemeContext& ctx, size_t eavesdropper,
                              std::span<const DatabaseRef> tapped,
                              const AuditOptions& options) {
  const auto& params = ctx.params;
  const bool type_two = IsTypeTwo(params.variant);
  if (eavesdropper >= params.parties) throw ParameterError("no such eavesdropping party");

  size_t budget = params.MaxEavesdrop();
  if (type_two && params.eavesdrop.size() == params.parties) {
    budget = params.eavesdrop[eavesdropper];
  }
  AdversaryView adversary{ViewKind::kEavesdropperLinks,
                          {tapped.begin(), tapped.end()}, budget, true};
  std::map<size_t, size_t> per_party;
  for (const auto& db : tapped) {
    CheckDatabase(params, db);
    if (db.party == eavesdropper) {
      throw ParameterError("an eavesdropper taps links of other parties only");
    }
    ++per_party[db.party];
  }
  adversary.within_budget = tapped.size() <= budget && (type_two || per_party.size() <= 1);
  AuditResult result = NewResult(ctx, "eavesdropper", type_two ? 7 : 6, adversary);

  const Layout layout = MakeLayout(params);
  Plan plan(layout.total);
  plan.Enumerate(layout.query_noise, layout.query_noise_size);
  if (!options.tamper.zero_masks) plan.Enumerate(layout.masks, layout.masks_size);
  if (!options.tamper.zero_answer_noise) plan.Enumerate(layout.zprime, layout.zprime_size);
  if (type_two) {
    // The eavesdropping party knows the noise it used for its own shares.
    const size_t per_party_noise = params.StorageNoiseDegree() * params.universe;
    RandomSource rng(options.seed);
    for (size_t i = 0; i < params.parties; ++i) {
      const size_t offset = layout.storage + i * per_party_noise;
      if (i == eavesdropper) {
        plan.FixRandom(offset, per_party_noise, ctx.field, rng);
      } else if (!options.tamper.zero_storage_noise) {
        plan.Enumerate(offset, per_party_noise);
      }
    }
  }
  Tallier tallier(ctx, plan, options.cap);

  // Own dataset fixed per group; theta and every other party's dataset vary.
  const size_t e = params.universe;
  const size_t other_bits = (params.parties - 1) * e;
  if (other_bits + e >= 24) throw AuditInfeasibleError("too many dataset configurations");
  std::vector<Config> configs;
  for (uint64_t own = 0; own < (uint64_t{1} << e); ++own) {
    for (uint64_t others = 0; others < (uint64_t{1} << other_bits); ++others) {
      for (size_t theta : Thetas(params, options)) {
        Config c{theta, {}};
        uint64_t rest = others;
        for (size_t i = 0; i < params.parties; ++i) {
          if (i == eavesdropper) {
            c.incidences.push_back(BitsToIncidence(own, e));
          } else {
            c.incidences.push_back(BitsToIncidence(rest, e));
            rest >>= e;
          }
        }
        configs.push_back(std::move(c));
      }
    }
  }
  const std::vector<DatabaseRef> selection(tapped.begin(), tapped.end());
  auto witness = CheckGroups<std::vector<uint8_t>>(
      tallier, configs,
      [&](const Config& c) { return c.incidences[eavesdropper].bits; },
      [&](const Transcript& t, FieldVector& view) {
        for (const auto& db : selection) {
          AppendQuery(t, db, view);
          AppendAnswer(t, db, view);
        }
      },
      [](const Config& a, const Config& b) {
        if (a.incidences == b.incidences) return std::string("theta");
        if (a.theta == b.theta && CountOf(a) != CountOf(b)) return std::string("count");
        return std::string("contents");
      });
  Finish(result, tallier, std::move(witness));
  return result;
}

FieldVector ExpandAnswerPolynomial(const PrimeField& field,
                                   std::span<const FieldVector> storage,
                                   std::span<const FieldVector> query,
                                   std::span<const FieldElement> zprime) {
  if (storage.empty() || query.empty()) {
    throw ParameterError("polynomials need at least a constant coefficient");
  }
  size_t degree = storage.size() + query.size() - 2;
  degree = std::max(degree, zprime.size());
  FieldVector out(degree + 1);
  for (size_t a = 0; a < storage.size(); ++a) {
    for (size_t b = 0; b < query.size(); ++b) {
      out[a + b] = field.Add(out[a + b], field.Dot(storage[a], query[b]));
    }
  }
  for (size_t k = 0; k < zprime.size(); ++k) out[k + 1] = field.Add(out[k + 1], zprime[k]);
  return out;
}

}  // namespace pma::audit
