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

#include <optional>
#include <string>

#include "smoore/rational.hpp"

namespace smoore {

/// A real value that is either known exactly as a rational or only as a double.
struct Number {
  std::optional<Rational> exact;
  double approx = 0.0;

  static Number of(const Rational& q) { return Number{q, q.get_d()}; }
  static Number inexact(double v) { return Number{std::nullopt, v}; }

  bool is_exact() const { return exact.has_value(); }
  double value() const { return approx; }
  std::string str() const;

  friend bool operator==(const Number& l, const Number& r) {
    if (l.exact || r.exact) return l.exact == r.exact;
    return l.approx == r.approx;
  }
};

/// An eigenvalue-like parameter theta. When theta lies in Q(sqrt(r)) it is
/// carried exactly, which is the case whenever theta^2 is rational.
struct Theta {
  std::optional<Surd> exact;
  double value = 0.0;

  static Theta of(const Rational& q) { return Theta{Surd(q), q.get_d()}; }
  /// +sqrt(sq) or -sqrt(sq).
  static Theta from_square(const Rational& sq, int sign = 1);
  static Theta inexact(double v) { return Theta{std::nullopt, v}; }
  static Theta from_surd(const Surd& s) { return Theta{s, s.to_double()}; }

  bool is_exact() const { return exact.has_value(); }
  /// theta^2 when it is rational.
  std::optional<Rational> square() const;
  std::string str() const;

  friend bool operator==(const Theta& l, const Theta& r) {
    if (l.exact && r.exact) return *l.exact == *r.exact;
    if (l.exact || r.exact) return false;
    return l.value == r.value;
  }
};

/// Parses "1", "3/2", "0.25" exactly, "sqrt(2)" or "sqrt(3/2)" as exact
/// square roots, and "-sqrt(...)".
Theta parse_theta(const std::string& text);

/// Default numerical tolerance, overridable with SPECTRAL_MOORE_TOL.
double default_tolerance();

}  // namespace smoore
