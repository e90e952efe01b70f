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

#include "smoore/roots.hpp"

#include <algorithm>

#include "smoore/errors.hpp"

namespace smoore {

namespace {

template <typename T>
int changes_at(const std::vector<Polynomial>& chain, const T& at) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s;
    if constexpr (std::is_same_v<T, Rational>) {
      s = sgn(q(at));
    } else {
      s = q(at).sign();
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational dyadic_mid(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

// Largest root of the chain's polynomial in (a, b], assuming at least one.
std::pair<Rational, Rational> largest_in(const SturmChain& chain, Rational a, Rational b, const Rational& tol) {
  while (b - a > tol) {
    Rational mid = dyadic_mid(a, b);
    if (chain.count_in(mid, b) >= 1)
      a = mid;
    else
      b = mid;
  }
  return {a, b};
}

constexpr int kMaxRefine = 20000;

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidArgument("Sturm chain of a constant polynomial");
  Polynomial p0 = squarefree_part(p);
  chain_.push_back(p0 * (1 / abs(p0.leading())));
  Polynomial p1 = p0.derivative();
  chain_.push_back(p1 * (1 / abs(p1.leading())));
  while (chain_.back().degree() > 0) {
    Polynomial r = -Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(r * (1 / abs(r.leading())));
  }
}

int SturmChain::sign_changes(const Rational& at) const { return changes_at(chain_, at); }
int SturmChain::sign_changes(const Surd& at) const { return changes_at(chain_, at); }

int SturmChain::sign_changes_at_pos_infinity() const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.leading());
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::sign_changes_at_neg_infinity() const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1);
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  Rational m = 0;
  const Rational& lc = p.leading();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / lc)));
  return m + 1;
}

double largest_zero(const Polynomial& p, const RootBracket& bracket) {
  if (p.degree() < 1) throw NoSignChange("constant polynomial has no sign change");
  if (!(bracket.lo < bracket.hi)) throw NoSignChange("empty bracket");
  Rational lo = rational_from_double(bracket.lo);
  Rational hi = rational_from_double(bracket.hi);
  int slo = sgn(p(lo));
  int shi = sgn(p(hi));
  if (slo * shi > 0) throw NoSignChange("no sign change on [" + std::to_string(bracket.lo) + ", " +
                                        std::to_string(bracket.hi) + "]");
  if (shi == 0) return bracket.hi;
  SturmChain chain(p);
  // The root at lo itself is outside (lo, hi]; step just left of it.
  if (slo == 0 && chain.count_in(lo, hi) == 0) return bracket.lo;
  auto [a, b] = largest_in(chain, lo, hi, rational_from_double(bracket.tol));
  return dyadic_mid(a, b).get_d();
}

double largest_real_root(const Polynomial& p) {
  if (p.degree() < 1) throw NoSignChange("constant polynomial has no real root");
  SturmChain chain(p);
  Rational b = root_bound(p);
  Rational a = -b - 1;
  if (chain.count_in(a, b) == 0) throw NoSignChange("polynomial has no real root");
  auto [lo, hi] = largest_in(chain, a, b, Rational(Integer(1), Integer("1099511627776")));
  return dyadic_mid(lo, hi).get_d();
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  Rational b = root_bound(p);
  std::vector<std::pair<Rational, Rational>> stack{{-b - 1, b}};
  int guard = 0;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = chain.count_in(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    if (++guard > kMaxRefine) throw PrecisionExhausted("root isolation did not converge");
    Rational mid = dyadic_mid(lo, hi);
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

void refine_root(const Polynomial& sq, std::pair<Rational, Rational>& interval, const Rational& width) {
  auto& [lo, hi] = interval;
  int s_hi = sgn(sq(hi));
  for (int iter = 0; hi - lo > width; ++iter) {
    if (iter > kMaxRefine) throw PrecisionExhausted("root refinement did not converge");
    if (s_hi == 0) {
      // The root is hi itself.
      lo = std::max(lo, Rational(hi - width / 2));
      return;
    }
    Rational mid = dyadic_mid(lo, hi);
    int s = sgn(sq(mid));
    if (s == 0) {
      hi = mid;
      s_hi = 0;
    } else if (s != s_hi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  Polynomial sq = squarefree_part(p).primitive_part();
  Integer lc = abs(sq.leading().get_num());
  std::vector<Integer> dens = positive_divisors(lc);
  Rational width(1, 2 * lc * lc + 2);
  for (auto iv : isolate_real_roots(sq)) {
    refine_root(sq, iv, width);
    Rational mid = dyadic_mid(iv.first, iv.second);
    for (const auto& b : dens) {
      Integer a = floor(Rational(mid * b + Rational(1, 2)));
      Rational cand(a, b);
      cand.canonicalize();
      // a nearby root from another interval can also round to a root; keep our own
      if (cand > iv.first && cand <= iv.second && sq(cand) == 0) {
        out.push_back(cand);
        break;
      }
    }
  }
  return out;
}

}  // namespace smoore
