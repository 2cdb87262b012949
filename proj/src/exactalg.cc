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

#include "divflag/exactalg.h"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace divflag {
namespace {

std::uint64_t ModPow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t ReduceMod(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::Prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !IsPrime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  return FieldSpec(p);
}

std::string FieldSpec::ToString() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = ReduceMod(mpz_class(value), field_.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = ReduceMod(value, field_.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field) {
  if (!field_.is_rational()) {
    throw std::invalid_argument("rational value given for " +
                                field_.ToString());
  }
  q_ = value;
  q_.canonicalize();
}

Scalar Scalar::Parse(const FieldSpec& field, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("cannot parse scalar \"" + text + "\"");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in \"" + text + "\"");
  }
  q.canonicalize();
  if (field.is_rational()) return Scalar(field, q);
  Scalar num(field, q.get_num());
  Scalar den(field, q.get_den());
  if (den.is_zero()) {
    throw std::invalid_argument("denominator of \"" + text +
                                "\" vanishes in " + field.ToString());
  }
  return num / den;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("not a residue");
  return r_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = ModPow(r_, field_.modulus() - 2, field_.modulus());
  }
  return out;
}

void Scalar::CheckSameField(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw std::invalid_argument("mixed fields: " + field_.ToString() +
                                " and " + other.field_.ToString());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  CheckSameField(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    r_ = (r_ + other.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  CheckSameField(other);
  if (field_.is_rational()) {
    q_ -= other.q_;
  } else {
    r_ = (r_ + field_.modulus() - other.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  CheckSameField(other);
  if (field_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = r_ * other.r_ % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  CheckSameField(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = (field_.modulus() - r_) % field_.modulus();
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool CanonicalLess(const Scalar& a, const Scalar& b) {
  a.CheckSameField(b);
  return a.field_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
}

std::string Scalar::ToString() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Matrix::Matrix(const FieldSpec& field, int rows, int cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Scalar(field, 0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

Matrix Matrix::FromRows(const FieldSpec& field, const std::vector<Vector>& rows,
                        int cols) {
  Matrix m(field, 0, cols);
  for (const Vector& r : rows) m.AppendRow(r);
  return m;
}

Matrix Matrix::Identity(const FieldSpec& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(field, 1);
  return m;
}

void Matrix::AppendRow(std::span<const Scalar> values) {
  if (static_cast<int>(values.size()) != cols_) {
    throw std::invalid_argument("row length " + std::to_string(values.size()) +
                                " does not match " + std::to_string(cols_) +
                                " columns");
  }
  for (const Scalar& s : values) {
    if (!(s.field() == field_)) {
      throw std::invalid_argument("mixed fields in matrix: " +
                                  s.field().ToString() + " and " +
                                  field_.ToString());
    }
  }
  entries_.insert(entries_.end(), values.begin(), values.end());
  ++rows_;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

std::string Matrix::ToString() const {
  std::ostringstream out;
  out << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out << ", ";
    out << VectorToString(row(r));
  }
  out << "]";
  return out.str();
}

RrefResult Rref(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (!(m.at(r, c).field() == m.field())) {
        throw std::invalid_argument("mixed fields in rref input");
      }
    }
  }
  Matrix a = m;
  const Scalar zero(m.field(), 0);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(row, c));
    }
    const Scalar inv = a.at(row, col).inverse();
    for (int c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const Scalar factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) {
        if (!a.at(row, c).is_zero()) a.at(r, c) -= factor * a.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(a), row, std::move(pivots)};
}

std::vector<Vector> KernelBasis(const Matrix& m) {
  const RrefResult rr = Rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(m.field(), 0));
    v[free] = Scalar(m.field(), 1);
    for (int i = 0; i < rr.rank; ++i) {
      v[rr.pivots[i]] = -rr.reduced.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int Rank(const Matrix& m) { return Rref(m).rank; }

bool IsZeroVector(std::span<const Scalar> v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector NormalizeCovector(std::span<const Scalar> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Scalar inv = v[i].inverse();
    Vector out(v.begin(), v.end());
    for (std::size_t j = i; j < out.size(); ++j) out[j] *= inv;
    return out;
  }
  throw std::invalid_argument("cannot normalize the zero covector");
}

Scalar Dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  if (a.empty()) return Scalar();
  Scalar sum(a[0].field(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

std::string VectorToString(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].ToString();
  }
  return out + ")";
}

RowSpaceBuilder::RowSpaceBuilder(const FieldSpec& field, int dim)
    : field_(field), dim_(dim) {}

Vector RowSpaceBuilder::Reduce(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("vector length does not match row space");
  }
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (int c = pivots_[i]; c < dim_; ++c) {
      if (!rows_[i][c].is_zero()) w[c] -= f * rows_[i][c];
    }
  }
  return w;
}

bool RowSpaceBuilder::Add(std::span<const Scalar> v) {
  Vector w = Reduce(v);
  for (int c = 0; c < dim_; ++c) {
    if (w[c].is_zero()) continue;
    const Scalar inv = w[c].inverse();
    for (int k = c; k < dim_; ++k) w[k] *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(c);
    return true;
  }
  return false;
}

bool RowSpaceBuilder::Contains(std::span<const Scalar> v) const {
  return IsZeroVector(Reduce(v));
}

}  // namespace divflag
