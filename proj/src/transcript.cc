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

#include "pma/transcript.h"

#include <algorithm>

namespace pma {

std::string_view LinkKindName(LinkKind kind) {
  switch (kind) {
    case LinkKind::kMaskDeal:
      return "mask_deal";
    case LinkKind::kPartyNoise:
      return "party_noise";
    case LinkKind::kStorageShare:
      return "storage_share";
    case LinkKind::kGlobalNoise:
      return "global_noise";
    case LinkKind::kQuery:
      return "query";
    case LinkKind::kAnswer:
      return "answer";
  }
  return "unknown";
}

void Transcript::Emit(Round round, LinkKind kind, Endpoint from, Endpoint to,
                      std::span<const FieldElement> message) {
  for (size_t k = 0; k < message.size(); ++k) {
    events_.push_back(
        TranscriptEvent{round, kind, from, to, static_cast<uint32_t>(k), message[k]});
  }
}

size_t Transcript::Count(LinkKind kind) const {
  return static_cast<size_t>(std::count_if(
      events_.begin(), events_.end(),
      [kind](const TranscriptEvent& e) { return e.kind == kind; }));
}

FieldVector Transcript::QueryTo(size_t party, size_t database) const {
  const Endpoint target = Endpoint::Database(party, database);
  FieldVector out;
  for (const auto& e : events_) {
    if (e.kind == LinkKind::kQuery && e.to == target) out.push_back(e.value);
  }
  return out;
}

FieldVector Transcript::AnswerFrom(size_t party, size_t database) const {
  const Endpoint source = Endpoint::Database(party, database);
  FieldVector out;
  for (const auto& e : events_) {
    if (e.kind == LinkKind::kAnswer && e.from == source) out.push_back(e.value);
  }
  return out;
}

FieldVector Transcript::ShareTo(size_t party, size_t db_party, size_t db_local) const {
  const Endpoint source = Endpoint::Party(party);
  const Endpoint target = Endpoint::Database(db_party, db_local);
  FieldVector out;
  for (const auto& e : events_) {
    if (e.kind == LinkKind::kStorageShare && e.from == source && e.to == target) {
      out.push_back(e.value);
    }
  }
  return out;
}

bool Transcript::Touches(size_t party, size_t database) const {
  const Endpoint db = Endpoint::Database(party, database);
  return std::any_of(events_.begin(), events_.end(), [&](const TranscriptEvent& e) {
    return e.from == db || e.to == db;
  });
}

namespace {

nlohmann::json EndpointJson(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::kUser:
      return "user";
    case Endpoint::Kind::kParty:
      return {{"party", e.party + 1}};
    case Endpoint::Kind::kDatabase:
      return {{"party", e.party + 1}, {"database", e.database + 1}};
    case Endpoint::Kind::kPartyDatabases:
      return {{"party", e.party + 1}, {"database", "all"}};
    case Endpoint::Kind::kAllDatabases:
      return "all_databases";
  }
  return nullptr;
}

}  // namespace

nlohmann::json Transcript::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : events_) {
    out.push_back({{"round", static_cast<int>(e.round)},
                   {"link", LinkKindName(e.kind)},
                   {"from", EndpointJson(e.from)},
                   {"to", EndpointJson(e.to)},
                   {"position", e.position},
                   {"value", e.value.value}});
  }
  return out;
}

}  // namespace pma
