// Copyright 2026 The spectral-moore Authors
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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "smoore/rational.hpp"

namespace smoore {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. Trailing zeros are always trimmed, so the zero polynomial
/// has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;
  Surd operator()(const Surd& at) const;
  /// Compensated Horner evaluation in double precision.
  double eval(double at) const;

  Polynomial derivative() const;
  /// q(x) = p(x^2).
  Polynomial compose_square() const;
  /// q(x) = p(s*x).
  Polynomial scale_argument(const Rational& s) const;
  /// If p(x) = x^parity * q(x^2) for some q, returns q.
  std::optional<Polynomial> fold_square(int parity) const;

  bool is_integral() const;
  /// gcd of the numerators for integral polynomials (positive; 0 for zero).
  Integer content() const;
  /// Integral, primitive, positive leading coefficient; rational multiple of *this.
  Polynomial primitive_part() const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
  friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
  friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
  friend Polynomial operator*(Polynomial l, const Rational& s) { return l *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial r) { return r *= s; }
  friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.coeffs_ == r.coeffs_; }

  /// Euclidean division; throws InvalidArgument on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

  /// Renders as "c_n*x^n + ... + c_0" with coefficients printed as p/q.
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Parses "z^2 + 3*z - 1/2", "x^4-7x^2+6" and similar. Any single letter may
/// serve as the variable.
Polynomial parse_polynomial(const std::string& text);

}  // namespace smoore
