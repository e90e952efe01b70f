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

#include "smoore/orthopoly.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "smoore/errors.hpp"

namespace smoore {

namespace {

enum class Family { F, G, CalG, ScrF, ScrG, P };

using Key = std::tuple<long, Family, int>;

class FamilyCache {
 public:
  // Extends the sequence for `key` up to index i with `next(seq, i)`.
  Polynomial get(const Key& key, int i, const std::function<Polynomial(const std::vector<Polynomial>&, int)>& next) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& seq = store_[key];
    while (static_cast<int>(seq.size()) <= i) seq.push_back(next(seq, static_cast<int>(seq.size())));
    return seq[static_cast<std::size_t>(i)];
  }

 private:
  std::recursive_mutex mu_;
  std::map<Key, std::vector<Polynomial>> store_;
};

FamilyCache& cache() {
  static FamilyCache c;
  return c;
}

void check_k(long k) {
  if (k < 2) throw InvalidArgument("k must be at least 2, got " + std::to_string(k));
}

void check_index(int i) {
  if (i < 0) throw InvalidArgument("index must be non-negative, got " + std::to_string(i));
}

void check_eps(int eps) {
  if (eps != 0 && eps != 1) throw InvalidArgument("epsilon must be 0 or 1");
}

}  // namespace

Polynomial f_poly(long k, int i) {
  check_k(k);
  check_index(i);
  const Polynomial x = Polynomial::x();
  return cache().get({k, Family::F, 0}, i, [k, &x](const std::vector<Polynomial>& s, int n) {
    switch (n) {
      case 0: return Polynomial{1};
      case 1: return x;
      case 2: return Polynomial{-k, 0, 1};
      default: return x * s[n - 1] - Rational(k - 1) * s[n - 2];
    }
  });
}

Polynomial g_poly(long k, int i) {
  check_k(k);
  if (i == -1) return {};
  check_index(i);
  const Polynomial x = Polynomial::x();
  return cache().get({k, Family::G, 0}, i, [k, &x](const std::vector<Polynomial>& s, int n) {
    if (n == 0) return Polynomial{1};
    if (n == 1) return x;
    return x * s[n - 1] - Rational(k - 1) * s[n - 2];
  });
}

Polynomial calg_poly(long k, int j) {
  check_k(k);
  check_index(j);
  return cache().get({k, Family::CalG, 0}, j, [k](const std::vector<Polynomial>& s, int n) {
    return n == 0 ? f_poly(k, 0) : s[n - 1] + f_poly(k, n);
  });
}

Polynomial scrF_poly(long k, int eps, int i) {
  check_k(k);
  check_eps(eps);
  check_index(i);
  return cache().get({k, Family::ScrF, eps}, i, [k, eps](const std::vector<Polynomial>& s, int n) {
    if (n == 0) return Polynomial{1};
    if (n == 1) return eps == 0 ? Polynomial{-k, 1} : Polynomial{-(2 * k - 1), 1};
    if (n == 2 && eps == 0) return Polynomial{k * (k - 1), -(3 * k - 2), 1};
    Polynomial shift{-(2 * k - 2), 1};
    Rational q2 = Rational(k - 1) * (k - 1);
    return shift * s[n - 1] - q2 * s[n - 2];
  });
}

Polynomial scrG_poly(long k, int eps, int i) {
  check_k(k);
  check_eps(eps);
  check_index(i);
  return cache().get({k, Family::ScrG, eps}, i, [k, eps](const std::vector<Polynomial>& s, int n) {
    return n == 0 ? scrF_poly(k, eps, 0) : s[n - 1] + scrF_poly(k, eps, n);
  });
}

Polynomial p_poly(int i, int eps) {
  check_eps(eps);
  check_index(i);
  return cache().get({0, Family::P, eps}, i, [eps](const std::vector<Polynomial>& s, int n) {
    if (n == 0) return Polynomial::constant(1 - eps);
    if (n == 1) return eps == 1 ? Polynomial{1} : Polynomial{-1, 1};
    return Polynomial{-2, 1} * s[n - 1] - s[n - 2];
  });
}

double lambda_j(long k, int j) {
  check_k(k);
  if (j < 1) throw InvalidArgument("lambda_j needs j >= 1");
  if (j == 1) return 0.0;
  return 2.0 * std::sqrt(static_cast<double>(k - 1)) * std::cos(std::numbers::pi / (j + 1));
}

}  // namespace smoore
