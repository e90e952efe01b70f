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

#include <utility>
#include <vector>

#include "smoore/polynomial.hpp"
#include "smoore/rational.hpp"

namespace smoore {

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double tol = 1e-12;
};

/// Sturm chain of the squarefree part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  int sign_changes(const Rational& at) const;
  int sign_changes(const Surd& at) const;
  int sign_changes_at_pos_infinity() const;
  int sign_changes_at_neg_infinity() const;

  /// Number of distinct real roots in (a, b].
  int count_in(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }
  /// Number of distinct real roots strictly greater than `a`.
  int count_above(const Rational& a) const { return sign_changes(a) - sign_changes_at_pos_infinity(); }
  int count_above(const Surd& a) const { return sign_changes(a) - sign_changes_at_pos_infinity(); }
  int count_real() const { return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity(); }

  const Polynomial& squarefree() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Cauchy bound: every real root lies in [-B, B].
Rational root_bound(const Polynomial& p);

/// Largest zero inside the bracket, to absolute tolerance bracket.tol.
/// Throws NoSignChange when p has the same strict sign at both ends.
double largest_zero(const Polynomial& p, const RootBracket& bracket);

/// Largest real root of p. Throws NoSignChange if p has no real root.
double largest_real_root(const Polynomial& p);

/// Disjoint intervals (lo, hi], each holding exactly one distinct real root.
/// Sorted ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p);

/// Shrinks an isolating interval (lo, hi] of the squarefree polynomial `sq`
/// until hi - lo <= width.
void refine_root(const Polynomial& sq, std::pair<Rational, Rational>& interval, const Rational& width);

/// All rational roots, ascending, without multiplicity.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace smoore
