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

#ifndef DIVFLAG_POLY_H_
#define DIVFLAG_POLY_H_

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace divflag {

// Univariate polynomial over Z, coefficients lowest degree first. The zero
// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coefficients);
  IntPoly(std::initializer_list<long> coefficients);

  static IntPoly Monomial(long coefficient, int degree);
  // t - root
  static IntPoly Linear(long root);
  // prod (t - root)
  static IntPoly FromRoots(const std::vector<std::int64_t>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  // Zero past the degree.
  mpz_class coefficient(int power) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class Evaluate(const mpz_class& t) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // e.g. "t^3 - 4t^2 + 6t - 4"
  std::string ToString() const;

 private:
  void Trim();
  std::vector<mpz_class> coeffs_;
};

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

// f = q*g + r with deg r < deg g. g must be monic; throws std::invalid_argument
// otherwise (the division is not closed over Z).
DivRem DivideWithRemainder(const IntPoly& f, const IntPoly& g);

// g | f for monic g.
bool Divides(const IntPoly& g, const IntPoly& f);

// If the monic f equals prod (t - d_i) with integer d_i, the multiset {d_i}
// in ascending order; nullopt when f does not split into integer linear
// factors.
std::optional<std::vector<std::int64_t>> LinearRoots(const IntPoly& f);

// Degree of gcd(a, b) over Q; -1 when both are zero.
int GcdDegree(const IntPoly& a, const IntPoly& b);

}  // namespace divflag

#endif  // DIVFLAG_POLY_H_
