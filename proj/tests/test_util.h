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

#ifndef PMA_TESTS_TEST_UTIL_H_
#define PMA_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pma/field.h"
#include "pma/model.h"

namespace pma::testing {

inline FieldVector Vec(std::initializer_list<uint32_t> values) {
  FieldVector out;
  for (uint32_t v : values) out.push_back(FieldElement(v));
  return out;
}

inline IncidenceVector Bits(std::initializer_list<uint8_t> bits) {
  return IncidenceVector{std::vector<uint8_t>(bits)};
}

inline SchemeParams Params(Variant v, size_t m, size_t n, size_t t, size_t y, size_t e,
                           uint64_t p = 0) {
  SchemeParams params;
  params.variant = v;
  params.parties = m;
  params.databases = n;
  params.collusion = t;
  params.eavesdrop = {y};
  params.universe = e;
  params.modulus = p;
  return params;
}

inline SchemeContext Ctx(Variant v, size_t m, size_t n, size_t t, size_t y, size_t e,
                         uint64_t p = 0) {
  return SchemeContext::Create(Params(v, m, n, t, y, e, p));
}

// The two example parties over a universe of five elements.
// As Ctx, with the smallest valid N.
inline SchemeContext AutoCtx(Variant v, size_t m, size_t t, size_t y, size_t e,
                             uint64_t p = 0) {
  SchemeParams params = Params(v, m, 1, t, y, e, p);
  params.databases = AutoDatabases(params);
  return SchemeContext::Create(params);
}

inline std::vector<IncidenceVector> ExampleParties() {
  return {Bits({1, 1, 1, 1, 1}), Bits({0, 1, 1, 1, 0})};
}

// Sum over parties of bit theta, computed directly.
inline size_t BruteCount(const std::vector<IncidenceVector>& parties, size_t theta) {
  size_t c = 0;
  for (const auto& p : parties) c += p.bits[theta - 1] ? 1 : 0;
  return c;
}

// Evaluates sum_l coeffs[l] x^l by repeated multiplication.
inline FieldElement EvalPoly(const PrimeField& f, const FieldVector& coeffs, FieldElement x) {
  FieldElement acc(0);
  FieldElement power(1);
  for (FieldElement c : coeffs) {
    acc = f.Add(acc, f.Mul(c, power));
    power = f.Mul(power, x);
  }
  return acc;
}

}  // namespace pma::testing

#endif  // PMA_TESTS_TEST_UTIL_H_
