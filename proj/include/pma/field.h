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

#ifndef PMA_FIELD_H_
#define PMA_FIELD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pma {

// A residue modulo the prime carried by the surrounding PrimeField. Elements
// do not remember their modulus; every PrimeField operation checks that its
// operands are in range.
struct FieldElement {
  uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

using FieldVector = std::vector<FieldElement>;

// GF(p) for a prime p < 2^31, so products of two residues fit in 64 bits.
class PrimeField {
 public:
  // Throws ParameterError when `modulus` is not a prime in [2, 2^31).
  explicit PrimeField(uint64_t modulus);

  uint64_t modulus() const { return p_; }

  // Reduces any integer into [0, p).
  FieldElement FromInt(int64_t v) const;
  bool Contains(FieldElement a) const { return a.value < p_; }

  FieldElement Add(FieldElement a, FieldElement b) const {
    Check(a);
    Check(b);
    const uint64_t s = uint64_t{a.value} + b.value;
    return FieldElement(static_cast<uint32_t>(s >= p_ ? s - p_ : s));
  }
  FieldElement Sub(FieldElement a, FieldElement b) const { return Add(a, Neg(b)); }
  FieldElement Mul(FieldElement a, FieldElement b) const {
    Check(a);
    Check(b);
    return FieldElement(static_cast<uint32_t>(uint64_t{a.value} * b.value % p_));
  }
  FieldElement Neg(FieldElement a) const {
    Check(a);
    return FieldElement(a.value == 0 ? 0 : static_cast<uint32_t>(p_ - a.value));
  }
  FieldElement Pow(FieldElement a, uint64_t exponent) const;
  // Throws DomainError for zero.
  FieldElement Inv(FieldElement a) const;

  FieldVector Zeros(size_t n) const { return FieldVector(n); }
  FieldVector UnitVector(size_t n, size_t index) const;
  // Componentwise a + scale * b, in place.
  void AddScaled(FieldVector& a, FieldElement scale,
                 std::span<const FieldElement> b) const;
  FieldElement Dot(std::span<const FieldElement> a,
                   std::span<const FieldElement> b) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  void Check(FieldElement a) const {
    if (a.value >= p_) [[unlikely]] ThrowNotResidue(a);
  }
  [[noreturn]] void ThrowNotResidue(FieldElement a) const;

  uint64_t p_;
};

bool IsPrime(uint64_t n);

// Smallest prime strictly greater than `n`.
uint64_t NextPrimeAbove(uint64_t n);

// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix Identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElement& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(size_t r, size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const FieldElement> Row(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  FieldVector data_;
};

FieldVector Multiply(const PrimeField& field, const Matrix& m,
                     std::span<const FieldElement> x);
Matrix Multiply(const PrimeField& field, const Matrix& a, const Matrix& b);

// Gauss-Jordan inverse. Throws IntegrityError if `m` is singular or not square.
Matrix Invert(const PrimeField& field, const Matrix& m);

// Returns x with m * x == rhs, computed through the explicit inverse.
FieldVector SolveLinear(const PrimeField& field, const Matrix& m,
                        std::span<const FieldElement> rhs);

// Globally known evaluation points alpha_1..alpha_n. They are pairwise distinct
// and none equals p - 1, so the values 1 + alpha_j are distinct and nonzero.
class EvalPoints {
 public:
  // Throws ParameterError on a repeated point, a point equal to p - 1, or an
  // out-of-range residue.
  EvalPoints(const PrimeField& field, FieldVector alphas);

  // alpha_j = j - 1, i.e. 1 + alpha_j = j for j = 1..count. Needs count < p.
  static EvalPoints Default(const PrimeField& field, size_t count);

  size_t size() const { return alphas_.size(); }
  FieldElement operator[](size_t j) const { return alphas_[j]; }
  std::span<const FieldElement> values() const { return alphas_; }
  // 1 + alpha_j.
  FieldElement Shifted(size_t j) const { return shifted_[j]; }

 private:
  FieldVector alphas_;
  FieldVector shifted_;
};

// Rows j < n are [1, (1+alpha_j), (1+alpha_j)^2, ..., (1+alpha_j)^(n-1)].
// Validates the first n points the same way EvalPoints does.
Matrix BuildUpsilon(const PrimeField& field, std::span<const FieldElement> alphas,
                    size_t n);

}  // namespace pma

#endif  // PMA_FIELD_H_
