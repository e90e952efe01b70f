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

#include "smoore/gfpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "smoore/errors.hpp"
#include "smoore/roots.hpp"

namespace smoore {

namespace {

using i64 = std::int64_t;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 reduce(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod_int(i64 b, std::uint64_t e, i64 p) {
  i64 r = 1 % p;
  b = reduce(b, p);
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

i64 inverse(i64 a, i64 p) {
  if (reduce(a, p) == 0) throw InvalidArgument("division by zero in GF(" + std::to_string(p) + ")");
  return powmod_int(a, static_cast<std::uint64_t>(p - 2), p);
}

void check_same_field(const GFPoly& a, const GFPoly& b) {
  if (a.p() != b.p()) throw InvalidArgument("polynomials over different fields");
}

GFPoly one(i64 p) { return GFPoly(p, {1}); }
GFPoly zvar(i64 p) { return GFPoly(p, {0, 1}); }

GFPoly mulmod_poly(const GFPoly& a, const GFPoly& b, const GFPoly& m) { return GFPoly::divmod(a * b, m).second; }

// f monic, returns (factor, multiplicity) pairs of squarefree monic factors.
std::vector<std::pair<GFPoly, int>> squarefree_factorization(const GFPoly& f) {
  const i64 p = f.p();
  std::vector<std::pair<GFPoly, int>> out;
  GFPoly c = gcd(f, f.derivative());
  GFPoly w = GFPoly::divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    GFPoly y = gcd(w, c);
    GFPoly fac = GFPoly::divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = GFPoly::divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in z^p; in GF(p) the p-th root of a coefficient is itself
    std::vector<i64> root;
    for (std::size_t j = 0; j < c.coeffs().size(); j += static_cast<std::size_t>(p)) root.push_back(c.coeffs()[j]);
    for (auto [g, m] : squarefree_factorization(GFPoly(p, root))) out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

// f monic squarefree; returns (product of all irreducible factors of degree d, d).
std::vector<std::pair<GFPoly, int>> distinct_degree(GFPoly f) {
  const i64 p = f.p();
  std::vector<std::pair<GFPoly, int>> out;
  GFPoly h = GFPoly::divmod(zvar(p), f).second;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, static_cast<std::uint64_t>(p), f);
    GFPoly g = gcd(h - zvar(p), f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = GFPoly::divmod(f, g).first;
      h = GFPoly::divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

GFPoly random_poly(i64 p, int below, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> d(0, p - 1);
  std::vector<i64> c(static_cast<std::size_t>(below));
  for (auto& x : c) x = d(rng);
  return GFPoly(p, c);
}

// Cantor-Zassenhaus: f monic squarefree, all irreducible factors of degree d.
void equal_degree(const GFPoly& f, int d, std::mt19937_64& rng, std::vector<GFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const i64 p = f.p();
  for (;;) {
    GFPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    GFPoly b;
    if (p == 2) {
      // trace map GF(2^d) -> GF(2)
      GFPoly cur = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        cur = mulmod_poly(cur, cur, f);
        b += cur;
      }
    } else {
      // norm map to GF(p), then the quadratic character
      GFPoly cur = a, norm = a;
      for (int i = 1; i < d; ++i) {
        cur = powmod(cur, static_cast<std::uint64_t>(p), f);
        norm = mulmod_poly(norm, cur, f);
      }
      b = powmod(norm, static_cast<std::uint64_t>((p - 1) / 2), f) - one(p);
    }
    GFPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(GFPoly::divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GFPoly::GFPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  for (auto& a : c_) a = reduce(a, p_);
  trim();
}

void GFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GFPoly GFPoly::from_polynomial(std::int64_t p, const Polynomial& f) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::vector<i64> c;
  const Integer pp(static_cast<long>(p));
  for (const auto& a : f.coeffs()) {
    Integer num = a.get_num() % pp, den = a.get_den() % pp;
    if (den == 0) throw InvalidArgument("coefficient denominator divisible by " + std::to_string(p));
    c.push_back(mulmod(reduce(num.get_si(), p), inverse(den.get_si(), p), p));
  }
  return GFPoly(p, c);
}

GFPoly GFPoly::parse(std::int64_t p, const std::string& text) { return from_polynomial(p, parse_polynomial(text)); }

std::int64_t GFPoly::operator()(std::int64_t at) const {
  i64 r = 0, x = reduce(at, p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

GFPoly GFPoly::monic() const {
  if (is_zero()) return *this;
  return inverse(leading(), p_) * *this;
}

GFPoly GFPoly::derivative() const {
  std::vector<i64> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulmod(c_[i], static_cast<i64>(i) % p_, p_));
  return GFPoly(p_, d);
}

GFPoly GFPoly::operator-() const {
  GFPoly r = *this;
  for (auto& a : r.c_) a = a == 0 ? 0 : p_ - a;
  return r;
}

GFPoly& GFPoly::operator+=(const GFPoly& o) {
  check_same_field(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

GFPoly& GFPoly::operator-=(const GFPoly& o) { return *this += -o; }

GFPoly operator*(const GFPoly& l, const GFPoly& r) {
  check_same_field(l, r);
  if (l.is_zero() || r.is_zero()) return GFPoly(l.p_, {});
  std::vector<i64> c(l.c_.size() + r.c_.size() - 1, 0);
  for (std::size_t i = 0; i < l.c_.size(); ++i)
    for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(l.c_[i], r.c_[j], l.p_)) % l.p_;
  return GFPoly(l.p_, c);
}

GFPoly operator*(std::int64_t s, const GFPoly& r) {
  GFPoly out = r;
  for (auto& a : out.c_) a = mulmod(a, reduce(s, r.p_), r.p_);
  out.trim();
  return out;
}

bool operator<(const GFPoly& l, const GFPoly& r) {
  if (l.degree() != r.degree()) return l.degree() < r.degree();
  return std::lexicographical_compare(l.c_.rbegin(), l.c_.rend(), r.c_.rbegin(), r.c_.rend());
}

std::pair<GFPoly, GFPoly> GFPoly::divmod(const GFPoly& num, const GFPoly& den) {
  check_same_field(num, den);
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  const i64 p = num.p_;
  std::vector<i64> rem = num.c_;
  const int dd = den.degree();
  if (num.degree() < dd) return {GFPoly(p, {}), num};
  std::vector<i64> q(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  const i64 inv = inverse(den.leading(), p);
  for (int i = num.degree(); i >= dd; --i) {
    i64 a = mulmod(rem[i], inv, p);
    q[i - dd] = a;
    if (a == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = reduce(rem[i - dd + j] - mulmod(a, den.c_[j], p), p);
  }
  return {GFPoly(p, q), GFPoly(p, rem)};
}

std::string GFPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    i64 a = c_[i];
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0 && a != 1) os << '*';
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

GFPoly gcd(const GFPoly& a, const GFPoly& b) {
  GFPoly x = a, y = b;
  while (!y.is_zero()) {
    GFPoly r = GFPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

GFPoly powmod(const GFPoly& base, std::uint64_t e, const GFPoly& mod) {
  GFPoly r = GFPoly::divmod(one(base.p()), mod).second;
  GFPoly b = GFPoly::divmod(base, mod).second;
  while (e) {
    if (e & 1) r = mulmod_poly(r, b, mod);
    e >>= 1;
    if (e) b = mulmod_poly(b, b, mod);
  }
  return r;
}

GFPoly FactorizationWitness::product() const {
  GFPoly r(p, {unit});
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

int FactorizationWitness::count_degree(int d) const {
  int n = 0;
  for (const auto& [g, m] : factors)
    if (g.degree() == d) n += m;
  return n;
}

FactorizationWitness gf_factor(const GFPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  FactorizationWitness w;
  w.p = f.p();
  w.unit = f.leading();
  std::mt19937_64 rng(seed);
  for (const auto& [sf, mult] : squarefree_factorization(f.monic())) {
    for (const auto& [part, d] : distinct_degree(sf)) {
      std::vector<GFPoly> irr;
      equal_degree(part, d, rng, irr);
      for (auto& g : irr) w.factors.emplace_back(g, mult);
    }
  }
  // merge equal factors (possible only across p-th power layers) and sort
  std::sort(w.factors.begin(), w.factors.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<std::pair<GFPoly, int>> merged;
  for (auto& fm : w.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  w.factors = std::move(merged);
  for (const auto& [g, m] : w.factors) {
    w.max_irreducible_degree = std::max(w.max_irreducible_degree, g.degree());
    w.min_irreducible_degree = w.min_irreducible_degree == 0 ? g.degree() : std::min(w.min_irreducible_degree, g.degree());
  }
  return w;
}

QScreenResult q_splitting_screen(const Polynomial& f, bool all_real, bool gf_shortcut) {
  if (f.is_zero()) throw InvalidArgument("zero polynomial");
  QScreenResult res;
  if (f.degree() <= 0) {
    res.splits_deg_le_2 = true;
    res.remainder = Polynomial{1};
    res.witness = "constant";
    return res;
  }
  if (!f.is_integral()) throw InvalidArgument("q_splitting_screen needs integer coefficients");
  Polynomial prim = f.primitive_part();

  if (gf_shortcut) {
    // A factorization over Z into degrees <= 2 survives reduction mod any prime not dividing
    // the leading coefficient, so one irreducible factor of degree >= 3 mod p rules it out.
    int used = 0;
    for (i64 p = 2; used < 3; ++p) {
      if (!is_prime(p)) continue;
      if (prim.leading().get_num() % p == 0) continue;
      ++used;
      auto w = gf_factor(GFPoly::from_polynomial(p, prim));
      if (w.max_irreducible_degree >= 3) {
        res.prime = p;
        res.remainder = prim;
        res.witness = "irreducible factor of degree " + std::to_string(w.max_irreducible_degree) + " mod " + std::to_string(p);
        return res;
      }
    }
  }

  Polynomial r = squarefree_part(prim).primitive_part();
  if (SturmChain(r).count_real() != r.degree()) {
    throw InvalidArgument(all_real ? "polynomial declared all-real has non-real roots"
                                   : "q_splitting_screen needs a polynomial with only real roots");
  }

  for (const auto& q : rational_roots(r)) {
    res.rational_roots.push_back(q);
    Polynomial lin(std::vector<Rational>{-Rational(q.get_num()), Rational(q.get_den())});
    r = Polynomial::divmod(r, lin).first.primitive_part();
  }

  bool found = true;
  while (found && r.degree() >= 2) {
    found = false;
    const Integer lc = abs(r.leading().get_num());
    const Rational bound = root_bound(r);
    const Rational width = Rational(Integer(1), Integer(8 * lc * (floor(bound) + 2)));
    auto ivs = isolate_real_roots(r);
    std::vector<Rational> mids;
    for (auto iv : ivs) {
      refine_root(r, iv, width);
      mids.push_back((iv.first + iv.second) / 2);
    }
    const auto divs = positive_divisors(lc);
    for (std::size_t i = 0; i < mids.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < mids.size() && !found; ++j) {
        const Rational s = mids[i] + mids[j], pr = mids[i] * mids[j];
        for (const auto& a : divs) {
          Integer b = -floor(Rational(a * s + Rational(1, 2)));
          Integer c = floor(Rational(a * pr + Rational(1, 2)));
          Polynomial quad(std::vector<Rational>{Rational(c), Rational(b), Rational(a)});
          auto [qq, rem] = Polynomial::divmod(r, quad);
          if (rem.is_zero()) {
            res.quadratics.push_back(quad.primitive_part());
            r = qq.primitive_part();
            found = true;
            break;
          }
        }
      }
    }
  }
  res.remainder = r.degree() <= 0 ? Polynomial{1} : r;
  res.splits_deg_le_2 = r.degree() <= 0;
  std::ostringstream os;
  os << res.rational_roots.size() << " rational roots, " << res.quadratics.size() << " quadratic factors";
  if (!res.splits_deg_le_2) os << ", residual factor of degree " << r.degree();
  res.witness = os.str();
  return res;
}

}  // namespace smoore
