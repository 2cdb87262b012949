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

#include "divflag/poly.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace divflag {

IntPoly::IntPoly(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  Trim();
}

IntPoly IntPoly::Monomial(long coefficient, int degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = coefficient;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::Linear(long root) { return IntPoly({-root, 1}); }

IntPoly IntPoly::FromRoots(const std::vector<std::int64_t>& roots) {
  IntPoly out({1});
  for (std::int64_t r : roots) out = out * Linear(static_cast<long>(r));
  return out;
}

void IntPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

mpz_class IntPoly::Evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  Trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  Trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::ToString() const {
  if (is_zero()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const mpz_class& c = coeffs_[p];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || p == 0) out += mag.get_str();
    if (p >= 1) out += "t";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

DivRem DivideWithRemainder(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (!g.is_monic()) {
    throw std::invalid_argument("divisor " + g.ToString() + " is not monic");
  }
  std::vector<mpz_class> rem = f.coefficients();
  const int dg = g.degree();
  if (f.degree() < dg) return DivRem{IntPoly(), f};
  std::vector<mpz_class> quot(f.degree() - dg + 1, 0);
  for (int k = f.degree(); k >= dg; --k) {
    const mpz_class lead = rem[k];
    if (lead == 0) continue;
    quot[k - dg] = lead;
    for (int i = 0; i <= dg; ++i) {
      rem[k - dg + i] -= lead * g.coefficients()[i];
    }
  }
  rem.resize(dg);
  return DivRem{IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool Divides(const IntPoly& g, const IntPoly& f) {
  return DivideWithRemainder(f, g).remainder.is_zero();
}

std::optional<std::vector<std::int64_t>> LinearRoots(const IntPoly& f) {
  if (!f.is_monic()) return std::nullopt;
  std::vector<std::int64_t> roots;
  IntPoly rest = f;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    roots.push_back(0);
    rest = DivideWithRemainder(rest, IntPoly::Linear(0)).quotient;
  }
  while (rest.degree() > 0) {
    // Any integer root divides the constant term and is bounded by the
    // Cauchy bound 1 + max |a_i|.
    const mpz_class c0 = abs(rest.coefficient(0));
    mpz_class bound = 0;
    for (const mpz_class& c : rest.coefficients()) {
      if (abs(c) > bound) bound = abs(c);
    }
    bound += 1;
    if (c0 < bound) bound = c0;
    bool found = false;
    for (mpz_class d = 1; d <= bound && !found; ++d) {
      if (c0 % d != 0) continue;
      for (int sign : {1, -1}) {
        const mpz_class root = sign * d;
        if (rest.Evaluate(root) != 0) continue;
        if (!root.fits_slong_p()) return std::nullopt;
        roots.push_back(root.get_si());
        rest = DivideWithRemainder(rest, IntPoly::Linear(root.get_si())).quotient;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int GcdDegree(const IntPoly& a, const IntPoly& b) {
  auto to_q = [](const IntPoly& p) {
    std::vector<mpq_class> out;
    for (const mpz_class& c : p.coefficients()) out.emplace_back(c);
    return out;
  };
  std::vector<mpq_class> x = to_q(a);
  std::vector<mpq_class> y = to_q(b);
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(x);
  trim(y);
  while (!y.empty()) {
    // x <- x mod y
    while (x.size() >= y.size()) {
      const mpq_class factor = x.back() / y.back();
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[shift + i] -= factor * y[i];
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace divflag
