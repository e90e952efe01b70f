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

#include "smoore/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <thread>

#include "json.hpp"
#include "smoore/bounds.hpp"
#include "smoore/errors.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"
#include "smoore/spectra.hpp"

namespace smoore {

namespace {

constexpr double kPi = std::numbers::pi;

// Runs body(i) for i in [0, n) on up to `threads` threads.
template <typename F>
void parallel_for(std::size_t n, int threads, F body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

DRGCandidate DRGCandidate::make(long k, int d, long c) {
  if (k < 3) throw InvalidArgument("k must be at least 3");
  if (d < 3) throw InvalidArgument("d must be at least 3");
  if (c < 1 || c > k - 1) throw InvalidC("c must satisfy 1 <= c <= k-1");
  DRGCandidate cand;
  cand.k = k;
  cand.d = d;
  cand.c = c;
  cand.eps = d % 2 == 0 ? 1 : 0;
  cand.m = (d - 1 + cand.eps) / 2;
  cand.n = m_bound(k, d + 1, Rational(c));
  cand.d_prime = (d - 1) / 2;
  return cand;
}

Polynomial scrS_poly(long k, int d, long c) { return s_poly(k, d + 1, Rational(c)); }

double multiplicity(const DRGCandidate& cand, double theta) {
  const double k = static_cast<double>(cand.k), c = static_cast<double>(cand.c), d = cand.d;
  if (cand.k == 2 && cand.c == 1) throw DegenerateParameters("(k, c) = (2, 1) gives no quadratic in phi");
  const double phi = theta * theta / (k - 1);
  const double x = (c - 1) * (k - 1) * phi + (k - c) * (k - c);
  const double num = cand.n.get_d() * k * (k - 1) * (phi - 4) * x;
  const double den = 2 * ((k - 1) * phi - k * k) * ((d - 1) * (c - 1) * (k - 1) * phi + d * (k - c) * (k - c) + 2 * (c - 1) * (k - c));
  return num / den;
}

std::vector<MultiplicityRecord> drg_spectrum(const DRGCandidate& cand) {
  const Polynomial s = scrS_poly(cand.k, cand.d, cand.c);
  const double q = std::sqrt(static_cast<double>(cand.k - 1));
  const int d = cand.d;
  std::vector<double> pos;
  for (int i = 1; i <= cand.d_prime; ++i) {
    double lo = 2 * q * std::cos(i * kPi / (d - 1));
    double hi = 2 * q * std::cos(i * kPi / d);
    const double delta = 1e-9 * (1 + std::abs(hi));
    try {
      pos.push_back(largest_zero(s, {lo - delta, hi + delta, 1e-13}));
    } catch (const NoSignChange&) {
      throw BracketFailure("no zero of S_d in bracket " + std::to_string(i));
    }
  }
  std::vector<double> thetas = pos;
  if (cand.eps == 1) thetas.push_back(0.0);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) thetas.push_back(-*it);

  std::vector<MultiplicityRecord> out;
  for (double th : thetas) {
    MultiplicityRecord r;
    r.theta = th;
    r.phi = th * th / static_cast<double>(cand.k - 1);
    r.m_theta = multiplicity(cand, th);
    r.is_integral = std::abs(r.m_theta - std::round(r.m_theta)) <= 1e-6;
    out.push_back(r);
  }
  return out;
}

MultiplicityCheck check_multiplicities(const DRGCandidate& cand, double tol) {
  MultiplicityCheck res;
  res.spectrum = drg_spectrum(cand);
  res.integral = cand.n.get_den() == 1;
  res.total = 2;
  std::vector<double> pos;
  for (const auto& r : res.spectrum) {
    res.integral = res.integral && std::abs(r.m_theta - std::round(r.m_theta)) <= tol;
    res.total += r.m_theta;
    if (r.theta > 0) pos.push_back(r.m_theta);
  }
  res.total_ok = std::abs(res.total - cand.n.get_d()) <= tol * std::max(1.0, cand.n.get_d());
  // m_1 < ... < m_i >= m_{i+1} > ... > m_{d'}
  const double eps = 1e-9 * std::max(1.0, cand.n.get_d());
  std::size_t i = 0;
  while (i + 1 < pos.size() && pos[i + 1] - pos[i] > eps) ++i;
  if (i + 1 < pos.size()) ++i;  // the one non-strict step at the peak
  bool ok = true;
  for (; i + 1 < pos.size(); ++i) ok = ok && pos[i] - pos[i + 1] > eps;
  res.unimodal = ok;
  return res;
}

double L_value(long k, int d, double v, double w) {
  const double slack = 1e-12;
  if (!(kPi / 4 < v && v < w && w <= kPi / 2 + slack))
    throw AngleOrder("L needs pi/4 < v < w <= pi/2");
  const double a = 1 - 2.0 / static_cast<double>(k);
  const double s = std::sin(2 * w);
  return 3 * std::sqrt(3.0) * (d - 1) / 4 * a * a * (1 + std::cos(2 * v)) * s * s;
}

IrrationalBound max_irrational_count(long k, int d) {
  if (k < 3 || d < 3) throw InvalidArgument("needs k >= 3 and d >= 3");
  const int dp = (d - 1) / 2;
  const double limit = dp - (d + 3) / 4.0;
  IrrationalBound res;
  for (int j = 0; j < limit; ++j) {
    const double v = (dp - j - 1) * kPi / (d - 1);
    const double w = (dp - j) * kPi / (d - 1);
    res.L = L_value(k, d, v, w);
    if (res.L >= 1) {
      res.j = j;
      return res;
    }
  }
  return res;
}

char mod_case_letter(long c, long k, int p) {
  if (p != 2 && p != 3) throw InvalidArgument("mod_case needs p in {2, 3}");
  if (k < 2 || c < 1 || c > k - 1) throw InvalidC("needs 1 <= c <= k-1");
  const Integer cp(c - 1), kp(k - 1);
  auto oc = p_adic_order(cp, static_cast<unsigned long>(p));
  auto ok = *p_adic_order(kp, static_cast<unsigned long>(p));
  const bool greater = !oc || *oc > ok;
  if (p == 2) return greater ? 'A' : (*oc < ok ? 'B' : 'C');
  if (greater) return 'a';
  if (*oc < ok) return 'b';
  Integer scale = 1;
  for (unsigned i = 0; i < ok; ++i) scale *= 3;
  Integer c2 = cp / scale, k2 = kp / scale;
  Integer diff = c2 - k2;
  return diff % 3 == 0 ? 'c' : 'd';
}

bool d_form_admits(char letter, int d) {
  long v;
  switch (std::tolower(static_cast<unsigned char>(letter))) {
    case 'a':
      v = d;
      break;
    case 'b':
      v = d - 2;
      break;
    case 'c':
      v = d - 1;
      break;
    case 'd':
      if (std::isupper(static_cast<unsigned char>(letter))) throw InvalidArgument("no case D modulo 2");
      v = 2L * d - 2;
      break;
    default:
      throw InvalidArgument(std::string("unknown case letter ") + letter);
  }
  if (v <= 0) return false;
  const bool mod2 = std::isupper(static_cast<unsigned char>(letter));
  const long base = mod2 ? 2 : 3;
  while (v % base == 0) v /= base;
  if (mod2) return v == 1 || v == 3 || v == 5;
  return v == 1 || v == 2 || v == 4 || v == 5 || v == 8 || v == 10;
}

bool ModCaseReport::admits(int d) const { return d_form_admits(case2, d) && d_form_admits(case3, d); }

std::string default_table7_path() { return std::string(SMOORE_DATA_DIR) + "/table7.json"; }

std::vector<Table7Row> load_table7(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  std::vector<Table7Row> rows;
  try {
    for (const auto& r : j.at("rows")) {
      Table7Row row;
      row.case2 = r.at("case2").get<std::string>().at(0);
      for (const auto& c : r.at("case3")) row.case3.push_back(c.get<std::string>().at(0));
      row.d = r.at("d").get<std::vector<int>>();
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return rows;
}

ModCaseReport mod_case(long c, long k, const std::vector<Table7Row>& table7) {
  ModCaseReport r;
  r.case2 = mod_case_letter(c, k, 2);
  r.case3 = mod_case_letter(c, k, 3);
  static const std::map<char, std::string> forms = {
      {'A', "d = 2^r*w, w in {1,3,5}"},         {'B', "d - 2 = 2^r*w, w in {1,3,5}"},
      {'C', "d - 1 = 2^r*w, w in {1,3,5}"},     {'a', "d = 3^r*w, w in {1,2,4,5,8,10}"},
      {'b', "d - 2 = 3^r*w, w in {1,2,4,5,8,10}"}, {'c', "d - 1 = 3^r*w, w in {1,2,4,5,8,10}"},
      {'d', "2d - 2 = 3^r*w, w in {1,2,4,5,8,10}"}};
  r.d_form2 = forms.at(r.case2);
  r.d_form3 = forms.at(r.case3);
  for (const auto& row : table7)
    if (row.case2 == r.case2 && std::find(row.case3.begin(), row.case3.end(), r.case3) != row.case3.end())
      r.table7_row = row.d;
  return r;
}

Polynomial h_form(int d, const Integer& a, const Integer& b) {
  if (d < 3) throw InvalidArgument("d must be at least 3");
  const int eps = d % 2 == 0 ? 1 : 0;
  const int m = (d - 1 + eps) / 2;
  return Rational(a) * p_poly(m - 1, eps) + Rational(b) * p_poly(m, eps);
}

Polynomial hhat(const DRGCandidate& cand) {
  return h_form(cand.d, Integer(cand.c - 1), Integer(cand.k - 1)).primitive_part();
}

GFPoly hhat_mod_p(const DRGCandidate& cand, std::int64_t p) { return GFPoly::from_polynomial(p, hhat(cand)); }

ScreenResult gf_factor_screen(int d, std::int64_t p, std::optional<int> quadratic_budget, int threads) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (d < 3) throw InvalidArgument("d must be at least 3");
  ScreenResult res;
  res.d = d;
  res.p = p;
  res.quadratic_budget = quadratic_budget;
  for (std::int64_t cp = 0; cp < p; ++cp)
    for (std::int64_t kp = 0; kp < p; ++kp)
      if (cp != 0 || kp != 0) res.witnesses.push_back({static_cast<int>(cp), static_cast<int>(kp), 0, 0, 0, false});
  parallel_for(res.witnesses.size(), threads, [&](std::size_t i) {
    auto& w = res.witnesses[i];
    GFPoly f = GFPoly::from_polynomial(p, h_form(d, Integer(w.c_prime), Integer(w.k_prime)));
    if (f.degree() < 1) return;
    auto fac = gf_factor(f);
    w.min_degree = fac.min_irreducible_degree;
    w.max_degree = fac.max_irreducible_degree;
    w.quadratics = fac.count_degree(2);
    w.blocked = w.max_degree >= 3 || (quadratic_budget && w.quadratics > *quadratic_budget);
  });
  res.all_pairs_blocked = std::all_of(res.witnesses.begin(), res.witnesses.end(), [](const auto& w) { return w.blocked; });
  return res;
}

namespace {

std::string row_name(const Table7Row& r) {
  std::string s(1, r.case2);
  s += '/';
  for (std::size_t i = 0; i < r.case3.size(); ++i) s += (i ? "," : "") + std::string(1, r.case3[i]);
  return s;
}

struct ScreenPlan {
  std::int64_t p;
};

struct QuadPlan {
  long k0;  // irrational-count bound used from k0 on
  std::int64_t p;
};

const std::map<int, ScreenPlan>& gf_plans() {
  static const std::map<int, ScreenPlan> plans = {{17, {43}}, {18, {5}}, {20, {7}}, {32, {7}},
                                                  {81, {5}},  {82, {5}}, {162, {5}}};
  return plans;
}

const std::map<int, QuadPlan>& quad_plans() {
  static const std::map<int, QuadPlan> plans = {{11, {5, 2}}, {16, {3, 3}}, {24, {4, 3}}, {25, {6, 3}}, {26, {4, 3}}};
  return plans;
}

}  // namespace

NonexistenceReport nonexistence_report(int d, const std::vector<Table7Row>& table7, int threads) {
  if (d < 3) throw InvalidArgument("d must be at least 3");
  NonexistenceReport rep;
  rep.d = d;
  for (const auto& row : table7)
    if (std::find(row.d.begin(), row.d.end(), d) != row.d.end()) rep.rows.push_back(row_name(row));

  if (rep.rows.empty()) {
    rep.verdict = Verdict::Eliminated;
    bool any_form = false;
    for (char c2 : {'A', 'B', 'C'})
      for (char c3 : {'a', 'b', 'c', 'd'}) any_form = any_form || (d_form_admits(c2, d) && d_form_admits(c3, d));
    rep.mechanism = any_form ? "table of admissible d" : "d-form constraints";
    rep.evidence.push_back("d = " + std::to_string(d) + " appears in no row of the table of admissible d");
    if (!any_form) rep.evidence.push_back("no (mod 2, mod 3) case admits d by its congruence form");
    return rep;
  }

  if (auto it = gf_plans().find(d); it != gf_plans().end()) {
    rep.screen = gf_factor_screen(d, it->second.p, std::nullopt, threads);
    const auto& s = *rep.screen;
    if (s.all_pairs_blocked) {
      rep.verdict = Verdict::Eliminated;
      rep.mechanism = "GF(" + std::to_string(s.p) + ") factor screen";
      rep.evidence.push_back("every one of " + std::to_string(s.witnesses.size()) + " nonzero pairs (c', k') mod " +
                             std::to_string(s.p) + " has an irreducible factor of degree >= 3");
    } else {
      rep.verdict = Verdict::Open;
      rep.mechanism = "GF(" + std::to_string(s.p) + ") factor screen failed";
      for (const auto& w : s.witnesses)
        if (!w.blocked)
          rep.evidence.push_back("pair (" + std::to_string(w.c_prime) + ", " + std::to_string(w.k_prime) + ") is not blocked");
    }
    return rep;
  }

  if (auto it = quad_plans().find(d); it != quad_plans().end()) {
    const auto plan = it->second;
    auto bound = max_irrational_count(plan.k0, d);
    rep.bound_k = plan.k0;
    rep.bound_j = bound.j;
    rep.bound_L = bound.L;
    bool ok = bound.j.has_value();
    if (ok) {
      rep.evidence.push_back("for k >= " + std::to_string(plan.k0) + " at most " + std::to_string(*bound.j) +
                             " positive eigenvalues have irrational square (L = " + std::to_string(bound.L) +
                             " at k = " + std::to_string(plan.k0) + ", and L increases with k)");
    } else {
      rep.evidence.push_back("irrational-count bound failed at k = " + std::to_string(plan.k0));
    }
    for (long k = 3; k < plan.k0; ++k) {
      for (long c = 1; c <= k - 1; ++c) {
        auto cand = DRGCandidate::make(k, d, c);
        auto q = q_splitting_screen(hhat(cand));
        rep.q_checks.push_back({k, c, !q.splits_deg_le_2, q.witness});
        if (q.splits_deg_le_2) {
          ok = false;
          rep.evidence.push_back("k = " + std::to_string(k) + ", c = " + std::to_string(c) + " splits over Q");
        }
      }
    }
    if (!rep.q_checks.empty() && ok)
      rep.evidence.push_back("for 3 <= k < " + std::to_string(plan.k0) +
                             " every admissible c leaves an irreducible factor of degree >= 3 over Q");
    if (bound.j) {
      rep.screen = gf_factor_screen(d, plan.p, *bound.j, threads);
      if (rep.screen->all_pairs_blocked) {
        rep.evidence.push_back("every nonzero pair (c', k') mod " + std::to_string(plan.p) +
                               " has an irreducible factor of degree >= 3 or more than " + std::to_string(*bound.j) +
                               " irreducible quadratic factors");
      } else {
        ok = false;
        for (const auto& w : rep.screen->witnesses)
          if (!w.blocked)
            rep.evidence.push_back("pair (" + std::to_string(w.c_prime) + ", " + std::to_string(w.k_prime) +
                                   ") mod " + std::to_string(plan.p) + " is not blocked");
      }
    }
    rep.verdict = ok ? Verdict::Eliminated : Verdict::Open;
    rep.mechanism = ok ? "irrational-count bound, Q screen and GF(" + std::to_string(plan.p) + ") screen"
                       : "irrational-count screen incomplete";
    return rep;
  }

  rep.verdict = Verdict::Open;
  rep.mechanism = "admissible; not eliminated by these screens";
  std::string rows;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) rows += (i ? " " : "") + rep.rows[i];
  rep.evidence.push_back("listed in rows " + rows);
  return rep;
}

std::vector<NonexistenceReport> sweep_nonexistence(int d_max, const std::vector<Table7Row>& table7, int threads) {
  if (d_max < 3) throw InvalidArgument("d_max must be at least 3");
  std::vector<NonexistenceReport> out(static_cast<std::size_t>(d_max - 2));
  parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = nonexistence_report(static_cast<int>(i) + 3, table7, 1); });
  return out;
}

}  // namespace smoore
