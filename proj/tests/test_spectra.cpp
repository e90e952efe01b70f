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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"
#include "smoore/spectra.hpp"

using namespace smoore;

namespace {

using Rows = std::vector<std::vector<Rational>>;

Rows rows_of(std::initializer_list<std::initializer_list<long>> r) {
  Rows out;
  for (auto row : r) {
    out.emplace_back();
    for (long v : row) out.back().emplace_back(v);
  }
  return out;
}

// Oracle: det(xI - A) for a tridiagonal A by the continuant recurrence.
Polynomial continuant(const Rows& a) {
  const std::size_t n = a.size();
  Polynomial prev2{1};
  Polynomial prev1 = Polynomial(std::vector<Rational>{-a[0][0], 1});
  for (std::size_t i = 1; i < n; ++i) {
    Polynomial cur = Polynomial(std::vector<Rational>{-a[i][i], 1}) * prev1 - (a[i - 1][i] * a[i][i - 1]) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

// Oracle: all real roots of p from exact isolation plus refinement.
std::vector<double> roots_desc(const Polynomial& p) {
  std::vector<double> out;
  Polynomial sq = squarefree_part(p);
  for (auto iv : isolate_real_roots(sq)) {
    refine_root(sq, iv, Rational(1, 1000000000));
    out.push_back(Rational((iv.first + iv.second) / 2).get_d());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST_CASE("build_quotient examples") {
  CHECK(build_quotient(QuotientKind::B, 3, 4, 1).rows == rows_of({{0, 3, 0, 0}, {1, 0, 2, 0}, {0, 1, 0, 2}, {0, 0, 3, 0}}));
  for (long k = 2; k <= 7; ++k)
    CHECK(build_quotient(QuotientKind::B, k, 3, 1).rows == rows_of({{0, k, 0}, {1, 0, k - 1}, {0, k, 0}}));
  CHECK(build_quotient(QuotientKind::T, 3, 3, 1).rows == rows_of({{0, 3, 0}, {1, 0, 2}, {0, 1, 2}}));
  CHECK_THROWS_AS(build_quotient(QuotientKind::B, 3, 2, 1), InvalidShape);
  CHECK_THROWS_AS(build_quotient(QuotientKind::B, 3, 3, 2), InvalidShape);
  CHECK_THROWS_AS(build_quotient(QuotientKind::B, 3, 5, 0), InvalidC);
  CHECK_THROWS_AS(build_quotient(QuotientKind::B, 3, 5, 4), InvalidC);
}

TEST_CASE("row sums and diagonals") {
  for (auto kind : {QuotientKind::B, QuotientKind::T}) {
    for (long k = 2; k <= 6; ++k) {
      for (int t = 4; t <= 9; ++t) {
        for (long c = 1; c <= k; ++c) {
          auto q = build_quotient(kind, k, t, c);
          for (int i = 0; i < t; ++i) {
            Rational s = 0;
            for (int j = 0; j < t; ++j) {
              if (std::abs(i - j) > 1) CHECK(q.rows[i][j] == 0);
              s += q.rows[i][j];
            }
            CHECK(s == k);
          }
          if (kind == QuotientKind::B) {
            CHECK(q.rows[t - 2][t - 3] == c);
            CHECK(q.rows[t - 1][t - 2] == k);
            CHECK(q.rows[t - 2][t - 1] == k - c);
          } else {
            CHECK(q.rows[t - 1][t - 2] == c);
            CHECK(q.rows[t - 1][t - 1] == k - c);
          }
        }
      }
    }
  }
}

TEST_CASE("charpoly examples") {
  auto cp = charpoly_B(3, 4, 1);
  CHECK(cp.trivial == parse_polynomial("x^2 - 9"));
  CHECK(cp.s_part == parse_polynomial("x^2 - 2"));
  CHECK(charpoly_B(3, 4, 2).s_part == parse_polynomial("x^2 - 1"));
  CHECK(charpoly_B(3, 5, 1).s_part == parse_polynomial("x^3 - 4x"));
}

TEST_CASE("factored charpoly equals the determinant") {
  for (long k = 2; k <= 6; ++k)
    for (int t = 3; t <= 8; ++t)
      for (long c = 1; c <= k; ++c) {
        if (t == 3 && c != 1) continue;
        auto q = build_quotient(QuotientKind::B, k, t, c);
        CHECK(charpoly_B(k, t, c).product() == continuant(q.rows));
      }
}

TEST_CASE("numerical spectrum matches charpoly roots") {
  for (long k = 2; k <= 6; ++k)
    for (int t = 4; t <= 8; ++t)
      for (long c = 1; c <= k; ++c) {
        auto q = build_quotient(QuotientKind::B, k, t, c);
        auto ev = numeric_eigenvalues(q);
        auto roots = roots_desc(charpoly_B(k, t, c).product());
        // nonzero eigenvalues are simple, so the distinct roots match the numeric list
        std::vector<double> distinct;
        for (double e : ev)
          if (distinct.empty() || std::abs(distinct.back() - e) > 1e-7) distinct.push_back(e);
        REQUIRE(distinct.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) CHECK(distinct[i] == doctest::Approx(roots[i]).epsilon(1e-8));
        CHECK(ev.front() == doctest::Approx(k));
        CHECK(ev.back() == doctest::Approx(-k));
        for (std::size_t i = 0; i < ev.size(); ++i) CHECK(ev[i] == doctest::Approx(-ev[ev.size() - 1 - i]).scale(1.0));
      }
}

TEST_CASE("nonzero eigenvalues are simple") {
  for (long k = 3; k <= 6; ++k)
    for (int t = 4; t <= 9; ++t)
      for (long c = 1; c <= k; ++c) {
        Polynomial s = s_poly(k, t, c);
        Polynomial g = gcd(s, s.derivative());
        // a repeated root can only sit at the origin (c = k, even t)
        if (c == k && t % 2 == 0)
          CHECK(g == Polynomial::x());
        else
          CHECK(g.degree() == 0);
      }
}

TEST_CASE("second eigenvalue examples and monotonicity") {
  CHECK(second_eigenvalue_B(3, 4, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
  CHECK(second_eigenvalue_B(3, 5, 1) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(second_eigenvalue_B(3, 4, 2) == doctest::Approx(1.0).epsilon(1e-11));
  for (long k = 3; k <= 6; ++k)
    for (int t = 4; t <= 8; ++t) {
      CHECK(second_eigenvalue_B(k, t, 1) == doctest::Approx(lambda_j(k, t - 2)).epsilon(1e-11));
      double prev = 1e9;
      for (Rational c(1, 4); c <= k; c += Rational(1, 4)) {
        double l2 = second_eigenvalue_B(k, t, c);
        CHECK(l2 < prev);
        CHECK(l2 <= 2 * std::sqrt(static_cast<double>(k - 1)) + 1e-12);
        prev = l2;
      }
    }
}

TEST_CASE("c = k puts a zero at the origin") {
  for (long k = 3; k <= 7; ++k)
    for (int t = 4; t <= 11; ++t) {
      CHECK(s_poly(k, t, k)(Rational(0)) == 0);
      // even t: the folded identity at y = 0
      const int eps = t % 2;
      const int s = (t - 2 - eps) / 2;
      if (eps == 0 && s >= 1) CHECK(Rational(k - 1) * scrG_poly(k, eps, s - 1)(Rational(0)) + scrG_poly(k, eps, s)(Rational(0)) == 0);
    }
}

TEST_CASE("exact squares of the spectrum") {
  auto sp = quotient_spectrum(build_quotient(QuotientKind::B, 3, 7, 1));
  // G_5 = x(x^2-2)(x^2-6)
  std::vector<Rational> want{9, 6, 2, 0};
  CHECK(sp.exact_squares == want);
}
