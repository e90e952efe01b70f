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

#include "smoore/number.hpp"
#include "smoore/polynomial.hpp"

namespace smoore {

struct LinearizationTable {
  long k = 0;
  int eps = 0;
  int i = 0;
  int j = 0;
  std::vector<Rational> p;  // p[l] is the coefficient of scrF(0, l)

  friend bool operator==(const LinearizationTable&, const LinearizationTable&) = default;
};

/// Coefficients of f in the basis scrF(0, 0), scrF(0, 1), ... (back-substitution).
std::vector<Rational> expand_in_scrF0(long k, const Polynomial& f);
std::vector<double> expand_in_scrF0(long k, const std::vector<double>& f);

/// x^eps scrF(eps,i) scrF(eps,j) = sum_l p_l scrF(0,l).
LinearizationTable linearize(long k, int eps, int i, int j);

struct Certificate {
  long k = 0;
  int t = 0;
  Number c;
  Theta theta;
  std::vector<Number> f;  // f_0 .. f_{t-3}; f_0, f_1 when t = 3
  bool exact = false;

  /// sum_i f_i scrF(0,i)(y)
  Number eval(const Number& y) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// S(x)^2 / (x^2 - theta^2) folded to y = x^2 and expanded in the scrF(0,.) basis,
/// with S = (c-1) G_{t-4} + G_{t-2}. For t = 3 (c = 1, theta = 0) the certificate is f(y) = y.
Certificate build_certificate(long k, int t, const Number& c, const Theta& theta, double tol = 1e-8);

struct LpResult {
  Number bound;                // 2 f(k^2) / f_0
  bool equality = false;       // f vanishes on every nontrivial tau^2
  std::vector<double> values;  // f(tau^2) for the nontrivial tau, in input order

  friend bool operator==(const LpResult&, const LpResult&) = default;
};

/// Checks the hypotheses and returns the bound. Eigenvalues with |tau| = k are trivial.
LpResult lp_bound(long k, const std::vector<Theta>& spectrum, const Certificate& cert, double tol = 1e-8);

}  // namespace smoore
