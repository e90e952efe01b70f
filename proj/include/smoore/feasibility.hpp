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

#include "smoore/gfpoly.hpp"
#include "smoore/polynomial.hpp"
#include "smoore/rational.hpp"

namespace smoore {

/// A putative bipartite distance-regular graph with quotient matrix B(k, d+1, c).
struct DRGCandidate {
  long k = 0;
  int d = 0;
  long c = 0;
  int eps = 0;      // 1 if d is even
  int m = 0;        // d = 2m + 1 - eps
  Rational n;       // M(k, d+1, c)
  int d_prime = 0;  // number of positive nontrivial eigenvalues

  static DRGCandidate make(long k, int d, long c);
  friend bool operator==(const DRGCandidate&, const DRGCandidate&) = default;
};

struct MultiplicityRecord {
  double theta = 0;
  double phi = 0;  // theta^2 / (k-1)
  double m_theta = 0;
  bool is_integral = false;

  friend bool operator==(const MultiplicityRecord&, const MultiplicityRecord&) = default;
};

/// The polynomial (c-1) G_{d-3} + G_{d-1}, whose zeros are the nontrivial eigenvalues.
Polynomial scrS_poly(long k, int d, long c);

/// Nontrivial eigenvalues in decreasing order (the trivial ones are +-k).
std::vector<MultiplicityRecord> drg_spectrum(const DRGCandidate& cand);

double multiplicity(const DRGCandidate& cand, double theta);

struct MultiplicityCheck {
  bool integral = false;
  bool unimodal = false;
  bool total_ok = false;
  double total = 0;
  std::vector<MultiplicityRecord> spectrum;

  friend bool operator==(const MultiplicityCheck&, const MultiplicityCheck&) = default;
};

MultiplicityCheck check_multiplicities(const DRGCandidate& cand, double tol = 1e-6);

/// 3 sqrt(3) (d-1)/4 (1-2/k)^2 (1 + cos 2v) sin^2 2w, for pi/4 < v < w <= pi/2.
double L_value(long k, int d, double v, double w);

struct IrrationalBound {
  std::optional<int> j;  // at most j positive eigenvalues with irrational square
  double L = 0;          // L at the qualifying j (or at the last j tried)

  friend bool operator==(const IrrationalBound&, const IrrationalBound&) = default;
};

IrrationalBound max_irrational_count(long k, int d);

struct ModCaseReport {
  char case2 = 'A';  // A, B, C
  char case3 = 'a';  // a, b, c, d
  std::string d_form2;
  std::string d_form3;
  std::vector<int> table7_row;

  /// Whether d meets both congruence-type constraints.
  bool admits(int d) const;

  friend bool operator==(const ModCaseReport&, const ModCaseReport&) = default;
};

char mod_case_letter(long c, long k, int p);

struct Table7Row {
  char case2 = 'A';
  std::vector<char> case3;
  std::vector<int> d;

  friend bool operator==(const Table7Row&, const Table7Row&) = default;
};

std::string default_table7_path();
std::vector<Table7Row> load_table7(const std::string& path = default_table7_path());

ModCaseReport mod_case(long c, long k, const std::vector<Table7Row>& table7);

/// Whether d matches the congruence-type form of a case letter.
bool d_form_admits(char letter, int d);

/// c' P_{m-1,eps} + k' P_{m,eps} with its content removed, in z = x^2/(k-1).
Polynomial hhat(const DRGCandidate& cand);
GFPoly hhat_mod_p(const DRGCandidate& cand, std::int64_t p);

/// a P_{m-1,eps} + b P_{m,eps} for the diameter d (coefficients taken mod p by the caller).
Polynomial h_form(int d, const Integer& a, const Integer& b);

struct PairWitness {
  int c_prime = 0;
  int k_prime = 0;
  int min_degree = 0;
  int max_degree = 0;
  int quadratics = 0;  // irreducible quadratic factors, with multiplicity
  bool blocked = false;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct ScreenResult {
  int d = 0;
  std::int64_t p = 0;
  std::optional<int> quadratic_budget;  // blocked also when quadratics > budget
  bool all_pairs_blocked = false;
  std::vector<PairWitness> witnesses;

  friend bool operator==(const ScreenResult&, const ScreenResult&) = default;
};

/// Factors c' P_{m-1,eps} + k' P_{m,eps} mod p for every nonzero (c', k') in GF(p)^2.
/// A pair is blocked by an irreducible factor of degree >= 3, or (with a budget j)
/// by more than j irreducible quadratic factors.
ScreenResult gf_factor_screen(int d, std::int64_t p, std::optional<int> quadratic_budget = std::nullopt,
                              int threads = 1);

struct QCheck {
  long k = 0;
  long c = 0;
  bool has_factor_deg_ge_3 = false;
  std::string witness;

  friend bool operator==(const QCheck&, const QCheck&) = default;
};

enum class Verdict { Eliminated, Open };

struct NonexistenceReport {
  int d = 0;
  Verdict verdict = Verdict::Open;
  std::string mechanism;
  std::vector<std::string> evidence;
  std::vector<std::string> rows;  // table rows listing d, e.g. "C/b"
  std::optional<ScreenResult> screen;
  std::optional<long> bound_k;    // irrational-count bound used from this k on
  std::optional<int> bound_j;
  std::optional<double> bound_L;
  std::vector<QCheck> q_checks;

  friend bool operator==(const NonexistenceReport&, const NonexistenceReport&) = default;
};

NonexistenceReport nonexistence_report(int d, const std::vector<Table7Row>& table7, int threads = 1);

std::vector<NonexistenceReport> sweep_nonexistence(int d_max, const std::vector<Table7Row>& table7, int threads = 1);

}  // namespace smoore
