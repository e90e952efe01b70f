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

#include "smoore/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"

namespace smoore {

namespace {

Rational power(long base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(r);
}

// theta <= largest real root of p.
bool le_largest(const Polynomial& p, const Theta& th) {
  if (th.exact) {
    SturmChain chain(p);
    return chain.count_above(*th.exact) >= 1 || p(*th.exact).is_zero();
  }
  return th.value <= largest_real_root(p);
}

bool is_zero_theta(const Theta& th) { return th.exact ? th.exact->is_zero() : th.value == 0.0; }

int sign_theta(const Theta& th) {
  if (th.exact) return th.exact->sign();
  return (th.value > 0) - (th.value < 0);
}

// theta^2 < 4(k-1), the open Alon-Boppana range.
bool below_edge(long k, const Theta& th) {
  if (th.exact) return (*th.exact * *th.exact) < Surd(Rational(4 * (k - 1)));
  return th.value * th.value < 4.0 * static_cast<double>(k - 1);
}

// Smallest j >= 2 with lambda^{(j)} at least theta, judged in doubles.
int lambda_index_guess(long k, double theta) {
  double ratio = theta / (2.0 * std::sqrt(static_cast<double>(k - 1)));
  ratio = std::clamp(ratio, 0.0, 1.0 - 1e-15);
  if (ratio <= 0.0) return 2;
  double j = std::ceil(std::numbers::pi / std::acos(ratio)) - 1.0;
  return std::max(2, static_cast<int>(j) - 1);
}

bool le_lambda(long k, int j, const Theta& th) {
  if (th.exact) return le_largest(g_poly(k, j), th);
  return th.value <= lambda_j(k, j);
}

Number ratio_at(const Polynomial& num, const Polynomial& den, const Theta& th) {
  if (th.exact) {
    Surd q = -num(*th.exact) / den(*th.exact);
    if (q.is_rational()) return Number::of(q.rational_part());
    return Number::inexact(q.to_double());
  }
  return Number::inexact(-num.eval(th.value) / den.eval(th.value));
}

void check_k(long k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
}

}  // namespace

Rational m_bound(long k, int t, const Rational& c) {
  check_k(k);
  if (t < 3) throw InvalidShape("M(k,t,c) needs t >= 3");
  if (c <= 0) throw InvalidC("c must be positive");
  Rational sum = 0;
  for (int i = 0; i <= t - 4; ++i) sum += power(k - 1, i);
  Rational v = 2 * (sum + (power(k - 1, t - 3) + power(k - 1, t - 2)) / c);
  v.canonicalize();
  return v;
}

Number m_bound(long k, int t, const Number& c) {
  if (c.exact) return Number::of(m_bound(k, t, *c.exact));
  if (c.approx <= 0) throw InvalidC("c must be positive");
  Rational body = m_bound(k, t, Rational(1)) / 2 - power(k - 1, t - 3) - power(k - 1, t - 2);
  double tail = Rational(power(k - 1, t - 3) + power(k - 1, t - 2)).get_d() / c.approx;
  return Number::inexact(2.0 * (body.get_d() + tail));
}

Rational n_bound(long k, int t, const Rational& c) {
  check_k(k);
  if (t < 2) throw InvalidShape("N(k,t,c) needs t >= 2");
  if (c <= 0) throw InvalidC("c must be positive");
  Rational sum = 1;
  for (int i = 0; i <= t - 3; ++i) sum += Rational(k) * power(k - 1, i);
  Rational v = sum + Rational(k) * power(k - 1, t - 2) / c;
  v.canonicalize();
  return v;
}

Number n_bound(long k, int t, const Number& c) {
  if (c.exact) return Number::of(n_bound(k, t, *c.exact));
  if (c.approx <= 0) throw InvalidC("c must be positive");
  Rational head = n_bound(k, t, Rational(1)) - Rational(k) * power(k - 1, t - 2);
  return Number::inexact(head.get_d() + Rational(Rational(k) * power(k - 1, t - 2)).get_d() / c.approx);
}

int locate_t(long k, const Theta& theta) {
  check_k(k);
  if (sign_theta(theta) < 0) throw OutOfRange("theta must be non-negative");
  if (!below_edge(k, theta)) throw OutOfRange("theta must be below 2 sqrt(k-1)");
  if (is_zero_theta(theta)) return 4;
  int j = lambda_index_guess(k, theta.value);
  while (!le_lambda(k, j, theta)) ++j;
  while (j > 2 && le_lambda(k, j - 1, theta)) --j;
  return j + 2;
}

Number c_from_theta(long k, int t, const Theta& theta) {
  check_k(k);
  if (t < 4) throw OutOfRange("c_from_theta needs t >= 4");
  bool zero_ok = t == 4 && is_zero_theta(theta);
  if (!zero_ok) {
    if (sign_theta(theta) <= 0 || !below_edge(k, theta)) throw OutOfRange("theta outside (0, 2 sqrt(k-1))");
    if (le_lambda(k, t - 3, theta) || !le_lambda(k, t - 2, theta))
      throw OutOfRange("theta is not in (lambda^(t-3), lambda^(t-2)] for t = " + std::to_string(t));
  }
  return ratio_at(f_poly(k, t - 2), g_poly(k, t - 4), theta);
}

BoundResult b_upper(long k, const Theta& theta) {
  BoundResult r;
  r.kind = BoundKind::M;
  r.k = k;
  r.theta = theta;
  r.t = locate_t(k, theta);
  r.c = c_from_theta(k, r.t, theta);
  r.value = m_bound(k, r.t, r.c);
  r.exact = r.c.is_exact() && r.value.is_exact();
  if (is_zero_theta(theta)) {
    r.alt_t = 3;
    r.alt_c = Number::of(1);
  } else {
    bool on_edge = theta.exact ? g_poly(k, r.t - 2)(*theta.exact).is_zero()
                               : std::abs(theta.value - lambda_j(k, r.t - 2)) <= 1e-12;
    if (on_edge) {
      r.alt_t = r.t + 1;
      r.alt_c = Number::of(k);
    }
  }
  r.attained_by = known_families(k, r.t, r.c);
  return r;
}

double r_j(long k, int j) {
  if (j < 1) throw InvalidArgument("r_j needs j >= 1");
  return largest_real_root(calg_poly(k, j));
}

double mu_j(long k, int j) {
  if (j < 1) throw InvalidArgument("mu_j needs j >= 1");
  return largest_real_root(f_poly(k, j));
}

int locate_t_v(long k, const Theta& theta) {
  check_k(k);
  bool above_minus_one = theta.exact ? Surd(Rational(-1)) < *theta.exact : theta.value > -1.0;
  if (!above_minus_one) throw OutOfRange("theta must exceed -1");
  if (sign_theta(theta) > 0 && !below_edge(k, theta)) throw OutOfRange("theta must be below 2 sqrt(k-1)");
  auto le = [&](int j) {
    if (theta.exact) return le_largest(calg_poly(k, j), theta);
    return theta.value <= r_j(k, j);
  };
  int j = theta.value <= 0 ? 2 : std::max(2, lambda_index_guess(k, theta.value) - 1);
  while (!le(j)) ++j;
  while (j > 2 && le(j - 1)) --j;
  return j + 1;
}

Number c_from_theta_v(long k, int t, const Theta& theta) {
  if (t < 3) throw OutOfRange("c_from_theta_v needs t >= 3");
  return ratio_at(f_poly(k, t - 1), calg_poly(k, t - 2), theta);
}

BoundResult v_upper(long k, const Theta& theta) {
  BoundResult r;
  r.kind = BoundKind::N;
  r.k = k;
  r.theta = theta;
  r.t = locate_t_v(k, theta);
  r.c = c_from_theta_v(k, r.t, theta);
  r.value = n_bound(k, r.t, r.c);
  r.exact = r.c.is_exact() && r.value.is_exact();
  return r;
}

Comparison compare(long k, const Theta& theta, double tol) {
  Comparison cmp{b_upper(k, theta), v_upper(k, theta)};
  if (cmp.m.value.exact && cmp.n.value.exact) {
    cmp.m_le_n = *cmp.m.value.exact <= *cmp.n.value.exact;
    cmp.equal = *cmp.m.value.exact == *cmp.n.value.exact;
  } else {
    double m = cmp.m.value.value(), n = cmp.n.value.value();
    double scale = std::max(1.0, std::abs(n));
    cmp.m_le_n = m <= n + tol * scale;
    cmp.equal = std::abs(m - n) <= tol * scale;
  }
  cmp.at_boundary = cmp.m.alt_t.has_value();
  return cmp;
}

double hj_bound_t4(long n_degree, double lambda2) {
  double n = static_cast<double>(n_degree);
  double l2 = lambda2 * lambda2;
  if (lambda2 < 0 || l2 > n - 1 + 1e-12) throw OutOfRange("needs 0 <= lambda2 <= sqrt(n-1)");
  return 1.0 + n * (n - 1) / (n - l2);
}

double hj_bound_t5(long n_degree, double lambda2) {
  double n = static_cast<double>(n_degree);
  double l2 = lambda2 * lambda2;
  if (l2 < n - 1 - 1e-12 || l2 > 2 * (n - 1) + 1e-12) throw OutOfRange("needs sqrt(n-1) <= lambda2 <= sqrt(2(n-1))");
  return n + n * (n - 1) / (2 * n - l2 - 1);
}

TyComparison ty_improved(long k, const Theta& theta) {
  check_k(k);
  auto sq = theta.square();
  double s = theta.value * theta.value;
  if (sign_theta(theta) <= 0) throw OutOfRange("theta must be positive");
  if (sq ? (*sq * *sq <= k || *sq > k - 1) : (s * s <= k || s > k - 1 + 1e-12))
    throw OutOfRange("needs k^(1/4) < theta <= sqrt(k-1)");
  TyComparison r;
  if (sq) {
    Rational q = *sq;
    Rational nb = 2 * (1 + Rational(k - 1) / (k - q) + Rational(k - 1) * (k - 1) / (k - q));
    Rational ob = 2 * (q * q + q + 1);
    nb.canonicalize();
    ob.canonicalize();
    r.new_bound = Number::of(nb);
    r.old_bound = Number::of(ob);
    r.strict = nb < ob;
  } else {
    double kd = static_cast<double>(k);
    double nb = 2 * (1 + (kd - 1) / (kd - s) + (kd - 1) * (kd - 1) / (kd - s));
    double ob = 2 * (s * s + s + 1);
    r.new_bound = Number::inexact(nb);
    r.old_bound = Number::inexact(ob);
    r.strict = nb < ob;
  }
  return r;
}

GirthThreshold girth_threshold(long k, int girth) {
  check_k(k);
  if (girth < 4 || girth % 2 != 0) throw InvalidArgument("girth must be even and at least 4");
  GirthThreshold g;
  g.l = girth / 2;
  g.theta_cos = g.l == 2 ? 0.0 : 2.0 * std::cos(std::numbers::pi / g.l);
  g.theta_quotient = lambda_j(k, g.l - 1);
  g.order = m_bound(k, g.l + 1, Rational(1));
  return g;
}

bool is_prime_power(long n) {
  if (n < 2) return false;
  long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::string> known_families(long k, int t, const Number& c) {
  std::vector<std::string> out;
  if (!c.exact) return out;
  const Rational& cq = *c.exact;
  const int d = t - 1;
  if (k == 2 && cq == 1) out.push_back("cycle C_" + std::to_string(2 * d));
  if ((t == 4 && cq == k) || (t == 3 && cq == 1)) out.push_back("complete bipartite K_{" + std::to_string(k) + "," + std::to_string(k) + "}");
  if (k < 3 || cq.get_den() != 1) return out;
  const long ci = cq.get_num().get_si();
  if (t == 4 && ci >= 1 && ci < k) {
    Rational v = m_bound(k, 4, cq) / 2;
    out.push_back("symmetric (" + v.get_str() + "," + std::to_string(k) + "," + std::to_string(ci) +
                  ")-design incidence graph, if the design exists");
  }
  if (t == 5 && ci == 1 && is_prime_power(k - 1)) out.push_back("GQ(" + std::to_string(k - 1) + "," + std::to_string(k - 1) + ")");
  if (t == 7 && ci == 1 && is_prime_power(k - 1)) out.push_back("GH(" + std::to_string(k - 1) + "," + std::to_string(k - 1) + ")");
  if (t == 5 && ci == k - 1 && is_prime_power(k)) out.push_back("AG(2," + std::to_string(k) + ") minus a parallel class");
  if (t == 5 && k == 6 && ci == 2) out.push_back("pg(6,6,2)");
  for (long r = 2; r * r - r + 1 <= k; r *= 2) {
    if (t == 5 && k == r * r - r + 1 && ci == (r - 1) * (r - 1)) {
      out.push_back("pg(" + std::to_string(k) + "," + std::to_string(k) + "," + std::to_string(ci) + ")");
    }
  }
  return out;
}

}  // namespace smoore
