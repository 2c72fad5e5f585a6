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

#ifndef PMA_ERRORS_H_
#define PMA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pma {

// Invalid parameters, malformed inputs, or a violated side condition.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Arithmetic outside the field's domain, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A transcript or protocol state that an honest run can never produce.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Missing shares or answers at a protocol step.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// Requested enumeration exceeds the configured cap.
class AuditInfeasibleError : public std::runtime_error {
 public:
  explicit AuditInfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pma

#endif  // PMA_ERRORS_H_
