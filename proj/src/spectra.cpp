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

#include "smoore/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"

namespace smoore {

namespace {

void check_c(long k, const Rational& c) {
  if (c <= 0 || c > k) throw InvalidC("c must satisfy 0 < c <= k, got c = " + c.get_str());
}

}  // namespace

QuotientMatrix build_quotient(QuotientKind kind, long k, int t, const Rational& c) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (t < 3) throw InvalidShape("t must be at least 3, got " + std::to_string(t));
  check_c(k, c);
  if (kind == QuotientKind::B && t == 3 && c != 1) throw InvalidShape("B(k,3,c) is only defined for c = 1");

  QuotientMatrix q{kind, k, t, c, std::vector<std::vector<Rational>>(t, std::vector<Rational>(t, Rational(0)))};
  const int n = t - 1;  // off-diagonal length
  for (int i = 0; i < n; ++i) {
    Rational lower = 1;
    Rational upper = i == 0 ? Rational(k) : Rational(k - 1);
    if (kind == QuotientKind::B) {
      if (i == n - 2) lower = c;
      if (i == n - 1) {
        lower = k;
        upper = k - c;
      }
      if (n == 1) upper = k;
    } else if (i == n - 1) {
      lower = c;
    }
    q.rows[i + 1][i] = lower;
    q.rows[i][i + 1] = upper;
  }
  if (kind == QuotientKind::T) q.rows[t - 1][t - 1] = k - c;
  return q;
}

Polynomial s_poly(long k, int t, const Rational& c) {
  if (t < 3) throw InvalidShape("t must be at least 3");
  return (c - 1) * g_poly(k, t - 4) + g_poly(k, t - 2);
}

FactoredCharpoly charpoly_B(long k, int t, const Rational& c) {
  build_quotient(QuotientKind::B, k, t, c);  // validates
  Rational k2 = Rational(k) * k;
  return {Polynomial(std::vector<Rational>{-k2, 0, 1}), s_poly(k, t, c)};
}

std::vector<double> numeric_eigenvalues(const QuotientMatrix& q) {
  const int t = q.t;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t, t);
  for (int i = 0; i < t; ++i) m(i, i) = q.rows[i][i].get_d();
  for (int i = 0; i + 1 < t; ++i) {
    double prod = Rational(q.rows[i][i + 1] * q.rows[i + 1][i]).get_d();
    double off = std::sqrt(std::max(0.0, prod));
    m(i, i + 1) = off;
    m(i + 1, i) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + t);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

SpectrumResult quotient_spectrum(const QuotientMatrix& q) {
  SpectrumResult r{numeric_eigenvalues(q), {}};
  if (q.kind == QuotientKind::B) {
    Polynomial s = s_poly(q.k, q.t, q.c);
    const int parity = q.t % 2;
    r.exact_squares.push_back(Rational(q.k) * q.k);
    if (auto folded = s.fold_square(parity)) {
      auto roots = rational_roots(*folded);
      for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        if (*it >= 0) r.exact_squares.push_back(*it);
    }
    if (parity == 1) r.exact_squares.push_back(0);
  }
  return r;
}

double second_eigenvalue_B(long k, int t, const Rational& c) {
  if (t < 3) throw InvalidShape("t must be at least 3");
  check_c(k, c);
  return largest_real_root(s_poly(k, t, c));
}

}  // namespace smoore
