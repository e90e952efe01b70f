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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smoore {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4", "2.125" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact binary value of a finite double.
Rational rational_from_double(double v);

std::string to_string(const Rational& q);

/// Exact square root when `q` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

/// Largest power of `prime` dividing `a`; nullopt encodes ord(0) = infinity.
std::optional<unsigned> p_adic_order(const Integer& a, unsigned long prime);

/// Positive divisors of |n| in ascending order, by trial division. n != 0.
std::vector<Integer> positive_divisors(const Integer& n);

/// An element a + b*sqrt(r) of Q(sqrt(r)) with r >= 0.
///
/// Equality and sign are decided exactly, which lets boundary cases such as
/// theta = sqrt(2) be compared against polynomial roots without rounding.
class Surd {
 public:
  Surd() = default;
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit embedding of Q
  Surd(Rational a, Rational b, Rational radicand);

  /// sqrt(r) itself.
  static Surd sqrt_of(const Rational& radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return r_; }

  bool is_rational() const { return b_ == 0; }
  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd l, const Surd& r) { return l += r; }
  friend Surd operator-(Surd l, const Surd& r) { return l -= r; }
  friend Surd operator*(Surd l, const Surd& r) { return l *= r; }
  friend Surd operator/(Surd l, const Surd& r) { return l /= r; }
  friend bool operator==(const Surd& l, const Surd& r) { return (l - r).is_zero(); }
  friend bool operator<(const Surd& l, const Surd& r) { return (l - r).sign() < 0; }
  friend bool operator<=(const Surd& l, const Surd& r) { return (l - r).sign() <= 0; }

 private:
  void adopt_radicand(const Rational& r);
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Rational r_{0};
};

}  // namespace smoore
