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

#ifndef PMA_TRANSCRIPT_H_
#define PMA_TRANSCRIPT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pma/field.h"

namespace pma {

struct Endpoint {
  enum class Kind : uint8_t { kUser, kParty, kDatabase, kPartyDatabases, kAllDatabases };

  Kind kind = Kind::kUser;
  uint32_t party = 0;     // 0-based; unused for kUser and kAllDatabases
  uint32_t database = 0;  // 0-based within the party; kDatabase only

  static Endpoint User() { return {}; }
  static Endpoint Party(size_t i) { return {Kind::kParty, static_cast<uint32_t>(i), 0}; }
  static Endpoint Database(size_t i, size_t j) {
    return {Kind::kDatabase, static_cast<uint32_t>(i), static_cast<uint32_t>(j)};
  }
  // Every database of party i.
  static Endpoint PartyDatabases(size_t i) {
    return {Kind::kPartyDatabases, static_cast<uint32_t>(i), 0};
  }
  static Endpoint AllDatabases() { return {Kind::kAllDatabases, 0, 0}; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

enum class LinkKind : uint8_t {
  kMaskDeal,      // masking shares from the dealing party to another party
  kPartyNoise,    // Z' provisioned to the databases of one party
  kStorageShare,  // secret-shared incidence vector, party -> database
  kGlobalNoise,   // Z' agreed on by all parties
  kQuery,         // user -> database
  kAnswer,        // database -> user
};

std::string_view LinkKindName(LinkKind kind);

enum class Round : uint8_t { kSetup = 0, kQuery = 1, kAnswer = 2 };

// One field element on one link.
struct TranscriptEvent {
  Round round;
  LinkKind kind;
  Endpoint from;
  Endpoint to;
  uint32_t position;  // index of the symbol within the message on this link
  FieldElement value;
};

class Transcript {
 public:
  void Clear() { events_.clear(); }
  void Reserve(size_t n) { events_.reserve(n); }

  void Emit(Round round, LinkKind kind, Endpoint from, Endpoint to,
            std::span<const FieldElement> message);
  void Emit(Round round, LinkKind kind, Endpoint from, Endpoint to,
            FieldElement symbol) {
    Emit(round, kind, from, to, std::span<const FieldElement>(&symbol, 1));
  }

  const std::vector<TranscriptEvent>& events() const { return events_; }
  size_t Count(LinkKind kind) const;

  // Message on the query (or answer) link of database (party, database), in
  // symbol order. Empty when the link carried nothing.
  FieldVector QueryTo(size_t party, size_t database) const;
  FieldVector AnswerFrom(size_t party, size_t database) const;
  // Storage share sent by `party` to the database at (db_party, db_local).
  FieldVector ShareTo(size_t party, size_t db_party, size_t db_local) const;
  // True if any event involves the database at (party, database).
  bool Touches(size_t party, size_t database) const;

  nlohmann::json ToJson() const;

 private:
  std::vector<TranscriptEvent> events_;
};

}  // namespace pma

#endif  // PMA_TRANSCRIPT_H_
