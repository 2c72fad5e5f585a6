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

#include "pma/field.h"

#include <string>
#include <utility>

#include "pma/errors.h"

namespace pma {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

uint64_t NextPrimeAbove(uint64_t n) {
  uint64_t candidate = n + 1;
  while (!IsPrime(candidate)) ++candidate;
  return candidate;
}

PrimeField::PrimeField(uint64_t modulus) : p_(modulus) {
  if (modulus >= (uint64_t{1} << 31)) {
    throw ParameterError("field modulus " + std::to_string(modulus) +
                         " must be below 2^31");
  }
  if (!IsPrime(modulus)) {
    throw ParameterError("field modulus " + std::to_string(modulus) +
                         " is not prime");
  }
}

void PrimeField::ThrowNotResidue(FieldElement a) const {
  throw ParameterError("element " + std::to_string(a.value) +
                       " is not a residue modulo " + std::to_string(p_));
}

FieldElement PrimeField::FromInt(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return FieldElement(static_cast<uint32_t>(r));
}

FieldElement PrimeField::Pow(FieldElement a, uint64_t exponent) const {
  Check(a);
  uint64_t base = a.value;
  uint64_t result = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % p_;
    base = base * base % p_;
    exponent >>= 1;
  }
  return FieldElement(static_cast<uint32_t>(result));
}

FieldElement PrimeField::Inv(FieldElement a) const {
  Check(a);
  if (a.value == 0) throw DomainError("inverse of zero");
  // Fermat: a^(p-2) = a^-1 for prime p.
  return Pow(a, p_ - 2);
}

FieldVector PrimeField::UnitVector(size_t n, size_t index) const {
  FieldVector v(n);
  v.at(index) = FieldElement(1 % p_);
  return v;
}

void PrimeField::AddScaled(FieldVector& a, FieldElement scale,
                           std::span<const FieldElement> b) const {
  if (a.size() != b.size()) {
    throw ParameterError("vector length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
  for (size_t k = 0; k < a.size(); ++k) a[k] = Add(a[k], Mul(scale, b[k]));
}

FieldElement PrimeField::Dot(std::span<const FieldElement> a,
                             std::span<const FieldElement> b) const {
  if (a.size() != b.size()) {
    throw ParameterError("vector length mismatch: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
  FieldElement acc;
  for (size_t k = 0; k < a.size(); ++k) acc = Add(acc, Mul(a[k], b[k]));
  return acc;
}

Matrix Matrix::Identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

FieldVector Multiply(const PrimeField& field, const Matrix& m,
                     std::span<const FieldElement> x) {
  if (m.cols() != x.size()) {
    throw ParameterError("matrix has " + std::to_string(m.cols()) +
                         " columns but vector has " + std::to_string(x.size()) +
                         " entries");
  }
  FieldVector out(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) out[r] = field.Dot(m.Row(r), x);
  return out;
}

Matrix Multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ParameterError("matrix shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < b.cols(); ++c) {
      FieldElement acc;
      for (size_t k = 0; k < a.cols(); ++k) {
        acc = field.Add(acc, field.Mul(a(r, k), b(k, c)));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix Invert(const PrimeField& field, const Matrix& m) {
  if (m.rows() != m.cols()) throw IntegrityError("cannot invert a non-square matrix");
  const size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::Identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a(pivot, col).value == 0) ++pivot;
    if (pivot == n) throw IntegrityError("singular matrix");
    if (pivot != col) {
      for (size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const FieldElement scale = field.Inv(a(col, col));
    for (size_t c = 0; c < n; ++c) {
      a(col, c) = field.Mul(a(col, c), scale);
      inv(col, c) = field.Mul(inv(col, c), scale);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).value == 0) continue;
      const FieldElement factor = a(r, col);
      for (size_t c = 0; c < n; ++c) {
        a(r, c) = field.Sub(a(r, c), field.Mul(factor, a(col, c)));
        inv(r, c) = field.Sub(inv(r, c), field.Mul(factor, inv(col, c)));
      }
    }
  }
  return inv;
}

FieldVector SolveLinear(const PrimeField& field, const Matrix& m,
                        std::span<const FieldElement> rhs) {
  if (rhs.size() != m.rows()) {
    throw ParameterError("right-hand side has " + std::to_string(rhs.size()) +
                         " entries for a " + std::to_string(m.rows()) +
                         "-row system");
  }
  return Multiply(field, Invert(field, m), rhs);
}

namespace {

void ValidatePoints(const PrimeField& field, std::span<const FieldElement> alphas) {
  const FieldElement forbidden(static_cast<uint32_t>(field.modulus() - 1));
  for (size_t j = 0; j < alphas.size(); ++j) {
    if (!field.Contains(alphas[j])) {
      throw ParameterError("evaluation point " + std::to_string(alphas[j].value) +
                           " is not a residue modulo " +
                           std::to_string(field.modulus()));
    }
    if (alphas[j] == forbidden) {
      throw ParameterError("evaluation point alpha_" + std::to_string(j + 1) +
                           " equals p - 1, so 1 + alpha vanishes");
    }
    for (size_t k = 0; k < j; ++k) {
      if (alphas[k] == alphas[j]) {
        throw ParameterError("evaluation points alpha_" + std::to_string(k + 1) +
                             " and alpha_" + std::to_string(j + 1) +
                             " coincide");
      }
    }
  }
}

}  // namespace

EvalPoints::EvalPoints(const PrimeField& field, FieldVector alphas)
    : alphas_(std::move(alphas)) {
  ValidatePoints(field, alphas_);
  shifted_.reserve(alphas_.size());
  for (FieldElement a : alphas_) shifted_.push_back(field.Add(a, FieldElement(1)));
}

EvalPoints EvalPoints::Default(const PrimeField& field, size_t count) {
  if (count >= field.modulus()) {
    throw ParameterError("need " + std::to_string(count) +
                         " distinct nonzero values 1 + alpha but GF(" +
                         std::to_string(field.modulus()) + ") has only " +
                         std::to_string(field.modulus() - 1));
  }
  FieldVector alphas(count);
  for (size_t j = 0; j < count; ++j) alphas[j] = FieldElement(static_cast<uint32_t>(j));
  return EvalPoints(field, std::move(alphas));
}

Matrix BuildUpsilon(const PrimeField& field, std::span<const FieldElement> alphas,
                    size_t n) {
  if (n > alphas.size()) {
    throw ParameterError("need " + std::to_string(n) + " evaluation points, have " +
                         std::to_string(alphas.size()));
  }
  ValidatePoints(field, alphas.first(n));
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    const FieldElement x = field.Add(alphas[j], FieldElement(1));
    FieldElement power(1 % field.modulus());
    for (size_t l = 0; l < n; ++l) {
      m(j, l) = power;
      power = field.Mul(power, x);
    }
  }
  return m;
}

}  // namespace pma
