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

#include "smoore/lpcert.hpp"

#include <cmath>
#include <string>

#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"

namespace smoore {

namespace {

void check_k(long k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
}

std::vector<double> to_doubles(const Polynomial& p) {
  std::vector<double> out;
  for (const auto& a : p.coeffs()) out.push_back(a.get_d());
  return out;
}

// The even polynomial p(x)^2 as a polynomial in y = x^2.
std::vector<double> square_folded(const std::vector<double>& p) {
  std::vector<double> sq(2 * p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) sq[i + j] += p[i] * p[j];
  std::vector<double> out;
  for (std::size_t i = 0; i < sq.size(); i += 2) out.push_back(sq[i]);
  while (!out.empty() && out.back() == 0.0) out.pop_back();
  return out;
}

double horner(const std::vector<double>& p, double x) {
  double r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace

std::vector<Rational> expand_in_scrF0(long k, const Polynomial& f) {
  check_k(k);
  std::vector<Rational> out(std::max(f.degree() + 1, 0));
  Polynomial rest = f;
  for (int l = f.degree(); l >= 0; --l) {
    // scrF(0,l) is monic of degree l
    Rational a = rest.coeff(static_cast<std::size_t>(l));
    out[l] = a;
    if (a != 0) rest -= a * scrF_poly(k, 0, l);
  }
  return out;
}

std::vector<double> expand_in_scrF0(long k, const std::vector<double>& f) {
  check_k(k);
  std::vector<double> rest = f, out(f.size(), 0.0);
  for (int l = static_cast<int>(f.size()) - 1; l >= 0; --l) {
    double a = rest[l];
    out[l] = a;
    auto basis = to_doubles(scrF_poly(k, 0, l));
    for (int i = 0; i <= l; ++i) rest[i] -= a * basis[i];
  }
  return out;
}

LinearizationTable linearize(long k, int eps, int i, int j) {
  check_k(k);
  if (i < 0 || j < 0) throw InvalidArgument("indices must be non-negative");
  if (eps != 0 && eps != 1) throw InvalidArgument("eps must be 0 or 1");
  Polynomial prod = scrF_poly(k, eps, i) * scrF_poly(k, eps, j);
  if (eps == 1) prod *= Polynomial::x();
  return {k, eps, i, j, expand_in_scrF0(k, prod)};
}

Number Certificate::eval(const Number& y) const {
  if (exact && y.is_exact()) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += *f[i].exact * scrF_poly(k, 0, static_cast<int>(i))(*y.exact);
    return Number::of(s);
  }
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i].value() * scrF_poly(k, 0, static_cast<int>(i)).eval(y.value());
  return Number::inexact(s);
}

Certificate build_certificate(long k, int t, const Number& c, const Theta& theta, double tol) {
  check_k(k);
  if (t < 3) throw InvalidShape("certificates need t >= 3");
  if (c.value() <= 0 || c.value() > k) throw InvalidC("c must satisfy 0 < c <= k");
  Certificate cert{k, t, c, theta, {}, false};

  if (t == 3) {
    // S = x and theta = 0: dividing S^2 by x^2 would remove the zero at theta, so keep f(y) = y.
    if (!c.is_exact() || *c.exact != 1) throw InvalidShape("t = 3 needs c = 1");
    if (theta.value != 0.0) throw NotARoot("for t = 3 the only nontrivial zero is 0");
    for (const auto& a : expand_in_scrF0(k, Polynomial::x())) cert.f.push_back(Number::of(a));
    cert.exact = true;
    return cert;
  }

  const auto sq = theta.square();
  if (c.is_exact() && theta.is_exact() && sq) {
    Polynomial s = (*c.exact - 1) * g_poly(k, t - 4) + g_poly(k, t - 2);
    if (!s(*theta.exact).is_zero()) throw NotARoot("theta = " + theta.str() + " is not a zero of S");
    Polynomial folded = *(s * s).fold_square(0);
    auto [q, r] = Polynomial::divmod(folded, Polynomial(std::vector<Rational>{-*sq, 1}));
    if (!r.is_zero()) throw NotARoot("division by y - theta^2 is not exact");
    for (const auto& a : expand_in_scrF0(k, q)) cert.f.push_back(Number::of(a));
    cert.exact = true;
    return cert;
  }

  const double cv = c.value(), x = theta.value;
  std::vector<double> s = to_doubles(g_poly(k, t - 2));
  auto low = to_doubles(g_poly(k, t - 4));
  for (std::size_t i = 0; i < low.size(); ++i) s[i] += (cv - 1) * low[i];
  double scale = 0;
  for (std::size_t i = 0; i < s.size(); ++i) scale += std::abs(s[i]) * std::pow(std::abs(x), static_cast<double>(i));
  if (std::abs(horner(s, x)) > tol * std::max(1.0, scale))
    throw NotARoot("theta = " + theta.str() + " is not a zero of S (residual " + std::to_string(horner(s, x)) + ")");
  auto a = square_folded(s);
  const double y = x * x;
  std::vector<double> q(a.size() - 1, 0.0);
  double carry = 0;
  for (std::size_t i = a.size() - 1; i >= 1; --i) {
    carry = a[i] + y * carry;
    q[i - 1] = carry;
  }
  const double rem = a[0] + y * carry;
  if (std::abs(rem) > tol * std::max(1.0, scale * scale)) throw NotARoot("division by y - theta^2 left a residual");
  for (double v : expand_in_scrF0(k, q)) cert.f.push_back(Number::inexact(v));
  return cert;
}

LpResult lp_bound(long k, const std::vector<Theta>& spectrum, const Certificate& cert, double tol) {
  check_k(k);
  if (cert.k != k) throw InvalidArgument("certificate built for a different k");
  if (cert.f.empty() || cert.f[0].value() <= 0) throw HypothesisViolated("f_0 must be positive");
  for (std::size_t j = 1; j < cert.f.size(); ++j) {
    bool neg = cert.f[j].is_exact() ? *cert.f[j].exact < 0 : cert.f[j].value() < -tol;
    if (neg) throw HypothesisViolated("f_" + std::to_string(j) + " = " + cert.f[j].str() + " is negative");
  }
  Number top = cert.eval(Number::of(Rational(k) * k));
  if (top.value() <= 0) throw HypothesisViolated("f(k^2) must be positive");

  LpResult res;
  if (cert.exact)
    res.bound = Number::of(2 * *top.exact / *cert.f[0].exact);
  else
    res.bound = Number::inexact(2 * top.value() / cert.f[0].value());

  const double scale = std::max(1.0, std::abs(top.value()));
  res.equality = true;
  for (const auto& tau : spectrum) {
    if (std::abs(std::abs(tau.value) - static_cast<double>(k)) <= 1e-8) continue;
    auto sq = tau.is_exact() ? tau.square() : std::nullopt;
    Number y = sq ? Number::of(*sq) : Number::inexact(tau.value * tau.value);
    Number v = cert.eval(y);
    res.values.push_back(v.value());
    bool positive = v.is_exact() ? *v.exact > 0 : v.value() > tol * scale;
    if (positive) throw HypothesisViolated("f(tau^2) > 0 at tau = " + tau.str());
    bool zero = v.is_exact() ? *v.exact == 0 : std::abs(v.value()) <= tol * scale;
    res.equality = res.equality && zero;
  }
  return res;
}

}  // namespace smoore
