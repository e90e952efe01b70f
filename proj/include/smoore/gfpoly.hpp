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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smoore/polynomial.hpp"

namespace smoore {

bool is_prime(std::int64_t n);

/// Polynomial over GF(p), coefficients lowest first, trailing zeros trimmed.
class GFPoly {
 public:
  GFPoly() = default;
  GFPoly(std::int64_t p, std::vector<std::int64_t> coeffs);
  /// Reduces an integral (or p-integral) rational polynomial mod p.
  static GFPoly from_polynomial(std::int64_t p, const Polynomial& f);
  static GFPoly parse(std::int64_t p, const std::string& text);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::int64_t operator()(std::int64_t at) const;

  GFPoly monic() const;
  GFPoly derivative() const;
  GFPoly operator-() const;
  GFPoly& operator+=(const GFPoly& o);
  GFPoly& operator-=(const GFPoly& o);
  friend GFPoly operator+(GFPoly l, const GFPoly& r) { return l += r; }
  friend GFPoly operator-(GFPoly l, const GFPoly& r) { return l -= r; }
  friend GFPoly operator*(const GFPoly& l, const GFPoly& r);
  friend GFPoly operator*(std::int64_t s, const GFPoly& r);
  friend bool operator==(const GFPoly&, const GFPoly&) = default;
  /// Canonical order: by degree, then coefficients from the top down.
  friend bool operator<(const GFPoly& l, const GFPoly& r);

  static std::pair<GFPoly, GFPoly> divmod(const GFPoly& num, const GFPoly& den);
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::int64_t p_ = 2;
  std::vector<std::int64_t> c_;
};

GFPoly gcd(const GFPoly& a, const GFPoly& b);
GFPoly powmod(const GFPoly& base, std::uint64_t e, const GFPoly& mod);

struct FactorizationWitness {
  std::int64_t p = 2;
  std::int64_t unit = 1;                          // leading coefficient
  std::vector<std::pair<GFPoly, int>> factors;    // monic irreducibles, canonically sorted
  int min_irreducible_degree = 0;
  int max_irreducible_degree = 0;

  GFPoly product() const;
  /// Irreducible factors of degree d, counted with multiplicity.
  int count_degree(int d) const;

  friend bool operator==(const FactorizationWitness&, const FactorizationWitness&) = default;
};

constexpr std::uint64_t kDefaultSeed = 20260101;

FactorizationWitness gf_factor(const GFPoly& f, std::uint64_t seed = kDefaultSeed);

struct QScreenResult {
  bool splits_deg_le_2 = false;
  std::vector<Rational> rational_roots;
  std::vector<Polynomial> quadratics;  // primitive irreducible quadratic factors over Q
  Polynomial remainder;                // primitive product of the factors of degree >= 3
  std::optional<std::int64_t> prime;   // prime whose reduction exposed a factor of degree >= 3
  std::string witness;

  friend bool operator==(const QScreenResult&, const QScreenResult&) = default;
};

/// Decides whether f factors over Q into factors of degree <= 2. f must have only real roots.
/// With gf_shortcut, a reduction mod a small prime showing an irreducible factor of degree >= 3
/// ends the search early (rational_roots / quadratics are then left empty).
QScreenResult q_splitting_screen(const Polynomial& f, bool all_real = true, bool gf_shortcut = true);

}  // namespace smoore
