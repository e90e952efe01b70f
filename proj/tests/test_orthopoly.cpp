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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"

using namespace smoore;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Rational ipow(const Rational& b, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Oracle: G_i straight from its definition as a sum of F's.
Polynomial g_by_sum(long k, int i) {
  Polynomial s;
  for (int j = 0; 2 * j <= i; ++j) s += f_poly(k, i - 2 * j);
  return s;
}

}  // namespace

TEST_CASE("polynomial basics") {
  Polynomial p = P("x^4 - 7x^2 + 6");
  CHECK(p.degree() == 4);
  CHECK(p.to_string() == "x^4 - 7*x^2 + 6");
  CHECK(P("z^2 + 3*z - 1/2").to_string('z') == "z^2 + 3*z - 1/2");
  CHECK(P("-x").to_string() == "-x");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{}.degree() == -1);
  auto [q, r] = Polynomial::divmod(P("x^3 - 4x"), P("x - 2"));
  CHECK(q == P("x^2 + 2x"));
  CHECK(r.is_zero());
  CHECK(gcd(P("x^2 - 1"), P("x^2 + 2x + 1")) == P("x + 1"));
  CHECK(squarefree_part(P("x^3 - 2x^2 + x")) == P("x^2 - x"));
  CHECK(P("x^2 - 2")(Rational(3)) == 7);
  CHECK(P("x^2 - 2").eval(1.5) == doctest::Approx(0.25));
  CHECK(P("2x^2 + 4")(Surd::sqrt_of(2)) == Surd(8));
  CHECK(P("6x^2 + 3").primitive_part() == P("2x^2 + 1"));
  CHECK(P("x^3 + x").fold_square(1).value() == P("x + 1"));
  CHECK_FALSE(P("x^3 + 1").fold_square(1).has_value());
  CHECK_THROWS_AS(parse_polynomial("x + y"), ParseError);
  CHECK_THROWS_AS(Polynomial::divmod(P("x"), Polynomial{}), InvalidArgument);
}

TEST_CASE("surd arithmetic decides signs exactly") {
  Surd r2 = Surd::sqrt_of(2);
  CHECK((r2 * r2) == Surd(2));
  CHECK(Surd(Rational(7, 5)) < r2);
  CHECK(r2 < Surd(Rational(71, 50)));
  CHECK((Surd(3) - Surd(2) * r2).sign() == 1);  // 3 > 2.828
  CHECK((r2 / r2) == Surd(1));
  CHECK(Surd::sqrt_of(9).is_rational());
  CHECK_THROWS_AS(Surd::sqrt_of(2) + Surd::sqrt_of(3), InvalidArgument);
}

TEST_CASE("family examples") {
  CHECK(f_poly(3, 2) == P("x^2 - 3"));
  CHECK(f_poly(3, 0) == P("1"));
  CHECK(f_poly(3, 4) == P("x^4 - 7x^2 + 6"));
  CHECK(g_poly(3, 2) == P("x^2 - 2"));
  CHECK(g_poly(3, 1) == P("x"));
  CHECK(g_poly(3, 4) == P("x^4 - 6x^2 + 4"));
  CHECK(g_poly(3, -1).is_zero());
  CHECK(calg_poly(3, 2) == P("x^2 + x - 2"));
  CHECK(calg_poly(3, 0) == P("1"));
  CHECK(calg_poly(3, 1) == P("x + 1"));
  CHECK(scrF_poly(3, 0, 1) == P("x - 3"));
  CHECK(scrF_poly(3, 1, 1) == P("x - 5"));
  CHECK(scrF_poly(3, 0, 2) == P("x^2 - 7x + 6"));
  CHECK(scrG_poly(3, 0, 1) == P("x - 2"));
  CHECK(scrG_poly(3, 0, 0) == P("1"));
  CHECK(scrG_poly(3, 1, 1) == P("x - 4"));
  CHECK(p_poly(1, 0) == P("z - 1"));
  CHECK(p_poly(2, 1) == P("z - 2"));
  CHECK(p_poly(2, 0) == P("z^2 - 3z + 1"));
  CHECK(lambda_j(3, 1) == 0.0);
  CHECK(lambda_j(3, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(lambda_j(10, 2) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(f_poly(1, 2), InvalidArgument);
  CHECK_THROWS_AS(f_poly(3, -1), InvalidArgument);
  CHECK_THROWS_AS(p_poly(-1, 0), InvalidArgument);
}

TEST_CASE("largest_zero examples") {
  CHECK(largest_zero(g_poly(3, 2), {1, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(largest_zero(calg_poly(3, 2), {0, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(largest_zero(g_poly(3, 2), {2, 3}), NoSignChange);
  CHECK(largest_real_root(P("x^3 + x^2 - 4x - 2")) == doctest::Approx(1.8136065).epsilon(1e-7));
  auto iso = isolate_real_roots(P("x^3 - 4x"));
  CHECK(iso.size() == 3);
  auto rr = rational_roots(P("6x^3 - 7x^2 + 1"));  // (x-1)(2x-1)(3x+1)
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == Rational(-1, 3));
  CHECK(rr[1] == Rational(1, 2));
  CHECK(rr[2] == 1);
}

TEST_CASE("three-term recurrences and fold identities") {
  const Polynomial x = Polynomial::x();
  for (long k = 2; k <= 10; ++k) {
    const Rational km1(k - 1);
    for (int i = 2; i <= 20; ++i) {
      if (i >= 3) CHECK(f_poly(k, i) == x * f_poly(k, i - 1) - km1 * f_poly(k, i - 2));
      if (i >= 5) {
        Polynomial shift{-(2 * k - 2), 0, 1};
        CHECK(f_poly(k, i) == shift * f_poly(k, i - 2) - km1 * km1 * f_poly(k, i - 4));
      }
      CHECK(g_poly(k, i) == g_by_sum(k, i));
      CHECK(g_poly(k, i) == x * g_poly(k, i - 1) - km1 * g_poly(k, i - 2));
      CHECK(f_poly(k, i).degree() == i);
    }
    for (int i = 0; i <= 9; ++i) {
      for (int eps = 0; eps <= 1; ++eps) {
        Polynomial xe = Polynomial::monomial(1, static_cast<std::size_t>(eps));
        CHECK(xe * scrF_poly(k, eps, i).compose_square() == f_poly(k, 2 * i + eps));
        CHECK(xe * scrG_poly(k, eps, i).compose_square() == g_poly(k, 2 * i + eps));
        if (2 * i + eps != 0) {
          Rational lhs = ipow(Rational(k), eps) * scrF_poly(k, eps, i)(Rational(k * k));
          Rational rhs = ipow(km1, 2 * i - 1 + eps) + ipow(km1, 2 * i + eps);
          CHECK(lhs == rhs);
        }
        // (scrF_{i+1} - (k-1)^2 scrF_i) / (x - k^2) = scrG_i
        if (2 * i + eps == 0) continue;
        auto [q, rem] = Polynomial::divmod(scrF_poly(k, eps, i + 1) - km1 * km1 * scrF_poly(k, eps, i),
                                           Polynomial(std::vector<Rational>{-Rational(k * k), 1}));
        CHECK(rem.is_zero());
        CHECK(q == scrG_poly(k, eps, i));
      }
    }
    for (int i = 1; i <= 15; ++i) {
      Polynomial lhs = Polynomial(std::vector<Rational>{-Rational(k * k), 0, 1}) * g_poly(k, i);
      CHECK(lhs == f_poly(k, i + 2) - km1 * km1 * f_poly(k, i));
      CHECK(calg_poly(k, i) == g_poly(k, i) + g_poly(k, i - 1));
    }
  }
}

TEST_CASE("Chebyshev identity for G") {
  for (long k = 2; k <= 8; ++k) {
    const double q = std::sqrt(static_cast<double>(k - 1));
    for (int i = 0; i <= 12; ++i) {
      for (int s = 1; s < 20; ++s) {
        double u = s * std::numbers::pi / 20.0;
        double lhs = g_poly(k, i).eval(2 * q * std::cos(u)) * std::sin(u);
        double rhs = std::pow(q, i) * std::sin((i + 1) * u);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("largest zeros interlace") {
  for (long k = 3; k <= 7; ++k) {
    for (int j = 2; j <= 10; ++j) {
      double lj = lambda_j(k, j);
      CHECK(largest_real_root(g_poly(k, j)) == doctest::Approx(lj).epsilon(1e-10));
      CHECK(lj < lambda_j(k, j + 1));
      double rj = largest_real_root(calg_poly(k, j));
      CHECK(lambda_j(k, j - 1) < rj);
      CHECK(rj < lj);
    }
  }
}

TEST_CASE("P-family identities under z = u + 1/u + 2") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int d = 3; d <= 20; ++d) {
    const int eps = d % 2 == 0 ? 1 : 0;
    const int m = (d - 1 + eps) / 2;
    REQUIRE(d == 2 * m + 1 - eps);
    for (int trial = 0; trial < 6; ++trial) {
      Rational u(num(rng), den(rng));
      u.canonicalize();
      if (u == 0 || u == 1 || u == -1) continue;
      Rational z = u + 1 / u + 2;
      Rational pm = p_poly(m, eps)(z), pm1 = p_poly(m - 1, eps)(z);
      Rational up1e = ipow(u + 1, eps);
      CHECK(pm == (ipow(u, d) - 1) / (ipow(u, m - eps) * (u - 1) * up1e));
      CHECK(pm1 * ipow(u, m - 1 - eps) * (u - 1) * up1e == ipow(u, d - 2) - 1);
      CHECK(pm1 + pm == ipow(u + 1, 1 - eps) * (ipow(u, d - 1) - 1) / (ipow(u, m - eps) * (u - 1)));
      CHECK(pm - pm1 == (ipow(u, d - 1) + 1) / (ipow(u, m - eps) * up1e));
    }
  }
}
