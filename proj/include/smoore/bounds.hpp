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

#include <optional>
#include <string>
#include <vector>

#include "smoore/number.hpp"

namespace smoore {

/// 2 (sum_{i=0}^{t-4} (k-1)^i + ((k-1)^{t-3} + (k-1)^{t-2}) / c), t >= 3.
Number m_bound(long k, int t, const Number& c);
Rational m_bound(long k, int t, const Rational& c);

/// 1 + sum_{i=0}^{t-3} k (k-1)^i + k (k-1)^{t-2} / c, t >= 2.
Number n_bound(long k, int t, const Number& c);
Rational n_bound(long k, int t, const Rational& c);

/// Smallest t >= 4 with theta <= lambda^{(t-2)}; theta = 0 gives 4.
/// Throws OutOfRange unless 0 <= theta < 2 sqrt(k-1).
int locate_t(long k, const Theta& theta);

/// -F_{t-2}(theta) / G_{t-4}(theta). Exact whenever the quotient is rational.
Number c_from_theta(long k, int t, const Theta& theta);

enum class BoundKind { M, N };

struct BoundResult {
  BoundKind kind = BoundKind::M;
  long k = 0;
  Theta theta;
  int t = 0;
  Number c;
  Number value;
  bool exact = false;
  // Set when theta sits on lambda^{(t-2)}: the same value is reached by (t+1, c=k).
  std::optional<int> alt_t;
  std::optional<Number> alt_c;
  std::vector<std::string> attained_by;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

BoundResult b_upper(long k, const Theta& theta);

/// Largest zero of F_0 + ... + F_j.
double r_j(long k, int j);

/// Largest zero of F_j.
double mu_j(long k, int j);

/// t >= 3 with r^{(t-2)} < theta <= r^{(t-1)}; needs -1 < theta < 2 sqrt(k-1).
int locate_t_v(long k, const Theta& theta);

/// -F_{t-1}(theta) / (F_0 + ... + F_{t-2})(theta).
Number c_from_theta_v(long k, int t, const Theta& theta);

BoundResult v_upper(long k, const Theta& theta);

struct Comparison {
  BoundResult m;
  BoundResult n;
  bool m_le_n = false;
  bool equal = false;
  bool at_boundary = false;  // theta = lambda^{(t-2)} for the M-side t

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

Comparison compare(long k, const Theta& theta, double tol = 1e-9);

/// Half-order bounds for lambda2 <= sqrt(n-1) and sqrt(n-1) <= lambda2 <= sqrt(2(n-1)).
double hj_bound_t4(long n_degree, double lambda2);
double hj_bound_t5(long n_degree, double lambda2);

struct TyComparison {
  Number new_bound;
  Number old_bound;
  bool strict = false;
};

/// 2(1 + (k-1)/(k-theta^2) + (k-1)^2/(k-theta^2)) against 2(theta^4 + theta^2 + 1)
/// for k^{1/4} < theta <= sqrt(k-1).
TyComparison ty_improved(long k, const Theta& theta);

struct GirthThreshold {
  int l = 0;
  double theta_cos = 0.0;       // 2 cos(pi/l)
  double theta_quotient = 0.0;  // 2 sqrt(k-1) cos(pi/l), second eigenvalue of B(k,l+1,1)
  Rational order;               // M(k, l+1, 1)
};

GirthThreshold girth_threshold(long k, int girth);

/// Known extremal families whose parameters match (k, t, c).
std::vector<std::string> known_families(long k, int t, const Number& c);

bool is_prime_power(long n);

}  // namespace smoore
