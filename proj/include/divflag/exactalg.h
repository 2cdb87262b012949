// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact linear algebra over the rationals and over prime fields.

#ifndef DIVFLAG_EXACTALG_H_
#define DIVFLAG_EXACTALG_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace divflag {

// Either the rationals or F_p. p is kept below 2^31 so that products of
// residues fit in 64 bits.
class FieldSpec {
 public:
  static FieldSpec Rationals() { return FieldSpec(0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec Prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  std::string ToString() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool IsPrime(std::uint64_t n);

// An element of a FieldSpec. Rationals are kept canonical by GMP (lowest
// terms, positive denominator); residues live in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::Rationals(), 0) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& value);
  // Rationals only.
  Scalar(const FieldSpec& field, const mpq_class& value);

  // Parses "a", "-a" or "a/b". Over F_p the fraction is reduced mod p.
  static Scalar Parse(const FieldSpec& field, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Valid only over the rationals.
  const mpq_class& rational() const;
  // Valid only over a prime field.
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order used only for canonical sorting; not the field order.
  friend bool CanonicalLess(const Scalar& a, const Scalar& b);

  std::string ToString() const;

 private:
  void CheckSameField(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

bool CanonicalLess(const Scalar& a, const Scalar& b);

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix(const FieldSpec& field, int rows, int cols);
  // All rows must have equal length and share one field.
  static Matrix FromRows(const FieldSpec& field,
                         const std::vector<Vector>& rows, int cols);
  static Matrix Identity(const FieldSpec& field, int n);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return entries_[Index(r, c)]; }
  const Scalar& at(int r, int c) const { return entries_[Index(r, c)]; }
  std::span<const Scalar> row(int r) const {
    return {entries_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  Vector RowVector(int r) const { return Vector(row(r).begin(), row(r).end()); }

  void AppendRow(std::span<const Scalar> values);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string ToString() const;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  FieldSpec field_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;
};

// Reduced row echelon form. Throws std::invalid_argument on mixed fields.
RrefResult Rref(const Matrix& m);

// Canonical kernel basis: one vector per free column of Rref(m), with a 1 in
// that free column.
std::vector<Vector> KernelBasis(const Matrix& m);

int Rank(const Matrix& m);

// Scales v so that its first nonzero entry is 1. Throws on the zero vector.
Vector NormalizeCovector(std::span<const Scalar> v);

bool IsZeroVector(std::span<const Scalar> v);
Scalar Dot(std::span<const Scalar> a, std::span<const Scalar> b);
std::string VectorToString(std::span<const Scalar> v);

// Incrementally maintained echelon basis of a row space. Used by the subset
// enumeration oracle and by membership tests.
class RowSpaceBuilder {
 public:
  RowSpaceBuilder(const FieldSpec& field, int dim);

  // Returns true if v was independent of the current span (and adds it).
  bool Add(std::span<const Scalar> v);
  // Whether v lies in the current span.
  bool Contains(std::span<const Scalar> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Vector Reduce(std::span<const Scalar> v) const;

  FieldSpec field_;
  int dim_;
  std::vector<Vector> rows_;  // each row has a leading 1 at pivots_[i]
  std::vector<int> pivots_;
};

}  // namespace divflag

#endif  // DIVFLAG_EXACTALG_H_
