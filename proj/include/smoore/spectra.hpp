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

#include <vector>

#include "smoore/polynomial.hpp"
#include "smoore/rational.hpp"

namespace smoore {

enum class QuotientKind { B, T };

/// Tridiagonal t x t quotient matrix with constant row sum k.
struct QuotientMatrix {
  QuotientKind kind = QuotientKind::B;
  long k = 0;
  int t = 0;
  Rational c;
  std::vector<std::vector<Rational>> rows;

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;
};

/// Throws InvalidShape for t < 3 (or B-kind t = 3 with c != 1) and InvalidC
/// unless 0 < c <= k.
QuotientMatrix build_quotient(QuotientKind kind, long k, int t, const Rational& c);

/// (c-1) G_{t-4} + G_{t-2}.
Polynomial s_poly(long k, int t, const Rational& c);

struct FactoredCharpoly {
  Polynomial trivial;  // x^2 - k^2
  Polynomial s_part;
  Polynomial product() const { return trivial * s_part; }
};

FactoredCharpoly charpoly_B(long k, int t, const Rational& c);

struct SpectrumResult {
  std::vector<double> eigenvalues;       // descending
  std::vector<Rational> exact_squares;   // rational eigenvalue squares, descending

  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

/// Numerical spectrum after symmetrizing the off-diagonal pairs.
std::vector<double> numeric_eigenvalues(const QuotientMatrix& q);

/// Numerical spectrum plus the eigenvalues whose squares are rational.
SpectrumResult quotient_spectrum(const QuotientMatrix& q);

/// Largest zero of (c-1) G_{t-4} + G_{t-2}.
double second_eigenvalue_B(long k, int t, const Rational& c);

}  // namespace smoore
