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

#include "cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "smoore/errors.hpp"
#include "smoore/json_io.hpp"
#include "smoore/orthopoly.hpp"
#include "smoore/roots.hpp"

namespace smoore::cli {

namespace {

// Raised when a verdict or hypothesis check fails; maps to exit code 2.
struct CheckFailed {
  std::string message;
};

std::string approx_str(double v) {
  std::ostringstream os;
  if (std::abs(v) < 1e-12) v = 0.0;  // eigensolver noise
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fmt(const Number& v) { return v.is_exact() ? v.exact->get_str() + " (exact)" : approx_str(v.value()) + " (approx)"; }
std::string fmt(const Theta& v) { return v.is_exact() ? v.str() + " (exact)" : approx_str(v.value) + " (approx)"; }
std::string yes(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
  out << '\n';
}

std::string number_cell(const Number& v) { return v.is_exact() ? v.exact->get_str() : approx_str(v.value()); }

struct Flags {
  bool json = false;
  bool csv = false;
};

void add_format(CLI::App* sub, Flags& f, RunConfig& c) {
  sub->add_flag("--json", f.json, "JSON output");
  sub->add_flag("--csv", f.csv, "CSV output");
  sub->add_option("--tol", c.tol, "numerical tolerance (default from SPECTRAL_MOORE_TOL, else 1e-9)")
      ->check(CLI::PositiveNumber);
}

void add_threads(CLI::App* sub, RunConfig& c) {
  sub->add_option("--threads", c.threads, "worker threads for screens and sweeps")->check(CLI::Range(1, 256));
}

void add_table7(CLI::App* sub, RunConfig& c) { sub->add_option("--table7", c.table7, "path to table7.json"); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Theta theta_arg(const std::string& theta, const std::string& theta_sq) {
  if (!theta_sq.empty()) return Theta::from_square(parse_rational(theta_sq));
  if (theta.empty()) throw InvalidArgument("give --theta or --exact-theta-sq");
  return parse_theta(theta);
}

// ---- bound / vbound ----

void print_bound(std::ostream& out, const BoundResult& r) {
  const char* name = r.kind == BoundKind::M ? "M" : "N";
  out << "k=" << r.k << " theta=" << fmt(r.theta) << '\n';
  out << "t=" << r.t << '\n';
  out << "c=" << fmt(r.c) << '\n';
  out << name << "=" << fmt(r.value) << '\n';
  if (r.alt_t) out << "also reached as t=" << *r.alt_t << ", c=" << fmt(*r.alt_c) << '\n';
  for (const auto& f : r.attained_by) out << "attained by: " << f << '\n';
}

// ---- compare ----

std::vector<std::string> compare_cells(const Comparison& cmp) {
  return {std::to_string(cmp.m.k),       cmp.m.theta.str(),         std::to_string(cmp.m.t), number_cell(cmp.m.c),
          number_cell(cmp.m.value),     std::to_string(cmp.n.t),   number_cell(cmp.n.c),    number_cell(cmp.n.value),
          yes(cmp.m_le_n),              yes(cmp.equal),            yes(cmp.at_boundary)};
}

const std::vector<std::string> kCompareHeader = {"k", "theta", "t_M", "c_M", "M", "t_N", "c_N", "N", "m_le_n", "equal",
                                                 "at_boundary"};

// ---- certify ----

Theta top_zero(long k, int t, const Rational& c) {
  Polynomial s = s_poly(k, t, c);
  double top = largest_real_root(s);
  if (auto folded = s.fold_square(t % 2))
    for (const auto& r : rational_roots(*folded))
      if (r >= 0 && std::abs(std::sqrt(r.get_d()) - top) < 1e-9) return Theta::from_square(r);
  return Theta::inexact(top);
}

// ---- table1 ----

struct FamilyRow {
  std::string family;
  long k;
  Theta theta;
  long c;
  int d;
  std::optional<Table1Entry> graph;  // constructible representative
};

std::vector<FamilyRow> family_rows() {
  std::vector<FamilyRow> rows;
  for (const auto& e : table1_entries()) {
    std::string fam;
    if (e.name == "cycle") fam = "cycle C_" + std::to_string(e.params[0]);
    else if (e.name == "complete_bipartite") fam = "K_{" + std::to_string(e.k) + "," + std::to_string(e.k) + "}";
    else if (e.name == "cube") fam = "(4,3,2)-design: Q3";
    else if (e.name == "heawood") fam = "(7,3,1)-design: Heawood";
    else if (e.name == "biplane") fam = "(11,5,2)-design: biplane";
    else if (e.name == "design_incidence") fam = "(13,4,1)-design: PG(2,3)";
    else if (e.name == "pappus") fam = "AG(2,3) minus a parallel class: Pappus";
    else if (e.name == "affine_minus_class") fam = "AG(2," + std::to_string(e.params[0]) + ") minus a parallel class";
    else if (e.name == "tutte_coxeter") fam = "GQ(2,2): Tutte-Coxeter";
    else fam = e.name;
    rows.push_back({fam, e.k, e.theta, e.c, e.d, e});
  }
  rows.push_back({"GQ(3,3)", 4, Theta::from_square(6), 1, 4, std::nullopt});
  rows.push_back({"GH(2,2)", 3, Theta::from_square(6), 1, 6, std::nullopt});
  rows.push_back({"GH(3,3)", 4, Theta::from_square(9), 1, 6, std::nullopt});
  rows.push_back({"pg(6,6,2)", 6, Theta::of(3), 2, 4, std::nullopt});
  return rows;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Moore bounds for bipartite regular graphs and feasibility of bipartite distance-regular graphs",
               "spectral-moore"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.tol = default_tolerance();
  cfg.seed = kDefaultSeed;
  Flags flags;
  std::map<CLI::App*, std::function<int()>> run;

  long k = 0;
  int t = 0, d = 0, d_max = 0;
  std::int64_t p = 0;
  std::string theta, theta_sq, c_text = "1", kind = "B", grid, poly, name;
  bool all = false, show_poly = false, edges = false;
  std::optional<std::int64_t> p_opt;

  // bound
  auto* bound = app.add_subcommand("bound", "upper bound M(k,t,c) on bipartite graphs with lambda2 <= theta");
  bound->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);
  bound->add_option("--theta", theta, "theta: 1, 3/2, 0.25, sqrt(2)");
  bound->add_option("--exact-theta-sq", theta_sq, "theta given by its exact square");
  add_format(bound, flags, cfg);
  run[bound] = [&] {
    auto r = b_upper(k, theta_arg(theta, theta_sq));
    if ((cfg.format == Format::Json)) emit(out, Json(r));
    else print_bound(out, r);
    return 0;
  };

  auto* vbound = app.add_subcommand("vbound", "upper bound N(k,t,c) on all regular graphs with lambda2 <= theta");
  vbound->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);
  vbound->add_option("--theta", theta, "theta");
  vbound->add_option("--exact-theta-sq", theta_sq, "theta given by its exact square");
  add_format(vbound, flags, cfg);
  run[vbound] = [&] {
    auto r = v_upper(k, theta_arg(theta, theta_sq));
    if ((cfg.format == Format::Json)) emit(out, Json(r));
    else print_bound(out, r);
    return 0;
  };

  auto* cmp = app.add_subcommand("compare", "M(k,t,c) against N(k,t',c') at one theta or over a grid");
  cmp->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);
  cmp->add_option("--theta", theta, "single theta");
  cmp->add_option("--theta-grid", grid, "start:stop:step, exact decimals");
  add_format(cmp, flags, cfg);
  run[cmp] = [&] {
    if (grid.empty()) {
      auto r = compare(k, theta_arg(theta, theta_sq), cfg.tol);
      if ((cfg.format == Format::Json)) {
        emit(out, Json(r));
      } else if ((cfg.format == Format::Csv)) {
        csv_row(out, kCompareHeader);
        csv_row(out, compare_cells(r));
      } else {
        print_bound(out, r.m);
        print_bound(out, r.n);
        out << "M <= N: " << yes(r.m_le_n) << ", equal: " << yes(r.equal) << ", boundary: " << yes(r.at_boundary) << '\n';
      }
      if (!r.m_le_n) throw CheckFailed{"M > N"};
      return 0;
    }
    std::vector<std::string> parts;
    std::stringstream ss(grid);
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.size() != 3) throw InvalidArgument("--theta-grid expects start:stop:step");
    Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]), step = parse_rational(parts[2]);
    if (step <= 0 || hi < lo) throw InvalidArgument("--theta-grid needs step > 0 and start <= stop");
    Integer count = floor(Rational((hi - lo) / step)) + 1;
    if (count > 100000) throw InvalidArgument("--theta-grid has too many points");
    bool ok = true;
    Json rows = Json::array();
    if (!(cfg.format == Format::Json)) csv_row(out, kCompareHeader);
    for (long i = 0; i < count.get_si(); ++i) {
      Rational th = lo + i * step;
      try {
        auto r = compare(k, Theta::of(th), cfg.tol);
        ok = ok && r.m_le_n;
        if ((cfg.format == Format::Json)) rows.push_back(r);
        else csv_row(out, compare_cells(r));
      } catch (const OutOfRange& e) {
        err << "skipped theta = " << th.get_str() << ": " << e.what() << '\n';
      }
    }
    if ((cfg.format == Format::Json)) emit(out, rows);
    if (!ok) throw CheckFailed{"M > N somewhere on the grid"};
    return 0;
  };

  auto* quot = app.add_subcommand("quotient", "quotient matrix B(k,t,c) or T(k,t,c) and its spectrum");
  quot->add_option("--kind", kind, "B or T")->check(CLI::IsMember({"B", "T"}));
  quot->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);
  quot->add_option("--t", t, "size")->required();
  quot->add_option("--c", c_text, "c, exact rational");
  quot->add_flag("--show-poly", show_poly, "print the characteristic polynomial expanded");
  add_format(quot, flags, cfg);
  run[quot] = [&] {
    auto q = build_quotient(kind == "B" ? QuotientKind::B : QuotientKind::T, k, t, parse_rational(c_text));
    auto sp = quotient_spectrum(q);
    std::optional<FactoredCharpoly> cp;
    if (q.kind == QuotientKind::B) cp = charpoly_B(k, t, q.c);
    if ((cfg.format == Format::Json)) {
      Json j{{"matrix", q}, {"spectrum", sp}};
      if (cp) j["charpoly"] = Json{{"trivial", cp->trivial}, {"s_part", cp->s_part}, {"product", cp->product()}};
      emit(out, j);
      return 0;
    }
    out << kind << "(" << k << "," << t << "," << q.c.get_str() << "):\n";
    for (const auto& row : q.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "  ") << std::setw(4) << row[i].get_str();
      out << '\n';
    }
    if (cp) {
      out << "charpoly = (" << cp->trivial.to_string() << ")(" << cp->s_part.to_string() << ")\n";
      if (show_poly) out << "         = " << cp->product().to_string() << '\n';
    }
    out << "eigenvalues (approx):";
    for (double e : sp.eigenvalues) out << ' ' << approx_str(e);
    out << '\n';
    if (!sp.exact_squares.empty()) {
      out << "rational eigenvalue squares (exact):";
      for (const auto& s : sp.exact_squares) out << ' ' << s.get_str();
      out << '\n';
    }
    return 0;
  };

  auto* cert = app.add_subcommand("certify", "linear-programming certificate for (k,t,c)");
  cert->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);
  cert->add_option("--t", t, "t")->required();
  cert->add_option("--c", c_text, "c, exact rational");
  cert->add_option("--theta", theta, "zero of S to use (default: the largest)");
  add_format(cert, flags, cfg);
  run[cert] = [&] {
    const Rational c = parse_rational(c_text);
    build_quotient(QuotientKind::B, k, t, c);  // validates
    Theta th = theta.empty() ? top_zero(k, t, c) : parse_theta(theta);
    Certificate cf = build_certificate(k, t, Number::of(c), th, std::max(cfg.tol, 1e-8));
    std::vector<Theta> taus;
    for (double e : numeric_eigenvalues(build_quotient(QuotientKind::B, k, t, c))) taus.push_back(Theta::inexact(e));
    LpResult lp;
    std::string failure;
    try {
      lp = lp_bound(k, taus, cf, std::max(cfg.tol, 1e-8));
    } catch (const HypothesisViolated& e) {
      failure = e.what();
    }
    const Number m = Number::of(m_bound(k, t, c));
    if ((cfg.format == Format::Json)) {
      Json j{{"f", cf.f}, {"bound", failure.empty() ? Json(lp.bound) : Json(nullptr)},
             {"equality_conditions", Json{{"f_vanishes_on_spectrum", lp.equality}, {"values", lp.values}}},
             {"certificate", cf}, {"M", m}};
      if (!failure.empty()) j["hypothesis_violated"] = failure;
      emit(out, j);
    } else {
      out << "k=" << k << " t=" << t << " c=" << c.get_str() << " theta=" << fmt(th) << '\n';
      for (std::size_t i = 0; i < cf.f.size(); ++i) out << "f_" << i << " = " << fmt(cf.f[i]) << '\n';
      if (failure.empty()) {
        out << "hypotheses: f_0 > 0, f_j >= 0, f(k^2) > 0, f(tau^2) <= 0 on the nontrivial spectrum: ok\n";
        out << "equality (f vanishes on the nontrivial spectrum): " << yes(lp.equality) << '\n';
        out << "bound 2 f(k^2)/f_0 = " << fmt(lp.bound) << '\n';
      }
      out << "M(k,t,c) = " << fmt(m) << '\n';
    }
    if (!failure.empty()) throw CheckFailed{"hypothesis violated: " + failure};
    return 0;
  };

  long c_int = 0;
  auto* feas = app.add_subcommand("feasible", "feasibility of a bipartite distance-regular graph with quotient B(k,d+1,c)");
  feas->add_option("--k", k, "degree")->required();
  feas->add_option("--d", d, "diameter")->required();
  feas->add_option("--c", c_int, "c")->required();
  add_format(feas, flags, cfg);
  add_table7(feas, cfg);
  run[feas] = [&] {
    auto cand = DRGCandidate::make(k, d, c_int);
    auto mc = check_multiplicities(cand, std::max(cfg.tol, 1e-6));
    auto t7 = load_table7(cfg.table7.empty() ? default_table7_path() : cfg.table7);
    auto mod = mod_case(c_int, k, t7);
    const bool admits = mod.admits(d);
    const bool listed = std::find(mod.table7_row.begin(), mod.table7_row.end(), d) != mod.table7_row.end();
    const bool feasible = mc.integral && mc.unimodal && mc.total_ok && admits && listed;
    Polynomial h = hhat(cand);
    if ((cfg.format == Format::Json)) {
      emit(out, Json{{"candidate", cand}, {"multiplicities", mc}, {"mod_case", mod}, {"d_form_admits", admits},
                     {"in_table7_row", listed}, {"hhat", h.to_string('z')}, {"feasible", feasible}});
    } else {
      out << "k=" << k << " d=" << d << " c=" << c_int << ": n = M(k,d+1,c) = " << cand.n.get_str() << " (exact)\n";
      out << "  theta (approx)      phi (approx)        multiplicity (approx)\n";
      for (const auto& r : mc.spectrum)
        out << "  " << std::left << std::setw(20) << approx_str(r.theta) << std::setw(20) << approx_str(r.phi)
            << approx_str(r.m_theta) << std::right << '\n';
      out << "multiplicities integral: " << yes(mc.integral) << ", unimodal: " << yes(mc.unimodal)
          << ", sum " << approx_str(mc.total) << " = n: " << yes(mc.total_ok) << '\n';
      out << "mod 2: case " << mod.case2 << ", " << mod.d_form2 << '\n';
      out << "mod 3: case " << mod.case3 << ", " << mod.d_form3 << '\n';
      out << "d-forms admit d: " << yes(admits) << ", d in table row: " << yes(listed) << '\n';
      out << "hhat = " << h.to_string('z') << '\n';
      out << (feasible ? "FEASIBLE" : "INFEASIBLE") << '\n';
    }
    if (!feasible) throw CheckFailed{"candidate fails the feasibility conditions"};
    return 0;
  };

  auto* nonex = app.add_subcommand("nonexist", "nonexistence verdict for diameter d");
  nonex->add_option("--d", d, "diameter")->required()->check(CLI::Range(3, 100000));
  nonex->add_option("--p", p_opt, "also run the GF(p) screen for this prime");
  add_format(nonex, flags, cfg);
  add_threads(nonex, cfg);
  add_table7(nonex, cfg);
  run[nonex] = [&] {
    auto t7 = load_table7(cfg.table7.empty() ? default_table7_path() : cfg.table7);
    auto rep = nonexistence_report(d, t7, cfg.threads);
    std::optional<ScreenResult> extra;
    if (p_opt && !(rep.screen && rep.screen->p == *p_opt)) extra = gf_factor_screen(d, *p_opt, std::nullopt, cfg.threads);
    if ((cfg.format == Format::Json)) {
      Json j = rep;
      if (extra) j["requested_screen"] = *extra;
      emit(out, j);
      return 0;
    }
    out << "d = " << d << ": " << verdict_name(rep.verdict) << '\n';
    out << "mechanism: " << rep.mechanism << '\n';
    if (!rep.rows.empty()) {
      out << "table rows listing d:";
      for (const auto& r : rep.rows) out << ' ' << r;
      out << '\n';
    }
    for (const auto& e : rep.evidence) out << "  - " << e << '\n';
    if (rep.bound_j) out << "irrational-count bound: j = " << *rep.bound_j << " from k = " << *rep.bound_k << ", L = " << approx_str(*rep.bound_L) << " (approx)\n";
    for (const auto& q : rep.q_checks)
      out << "  Q-screen k=" << q.k << " c=" << q.c << ": factor of degree >= 3: " << yes(q.has_factor_deg_ge_3) << " (" << q.witness << ")\n";
    for (const auto* s : {rep.screen ? &*rep.screen : nullptr, extra ? &*extra : nullptr}) {
      if (!s) continue;
      out << "screen over GF(" << s->p << "): " << s->witnesses.size() << " pairs, all blocked: " << yes(s->all_pairs_blocked);
      if (s->quadratic_budget) out << " (quadratic budget " << *s->quadratic_budget << ")";
      out << "\n  c' k' min max quadratics blocked\n";
      for (const auto& w : s->witnesses)
        out << "  " << std::setw(2) << w.c_prime << ' ' << std::setw(2) << w.k_prime << ' ' << std::setw(3) << w.min_degree << ' '
            << std::setw(3) << w.max_degree << ' ' << std::setw(10) << w.quadratics << ' ' << yes(w.blocked) << '\n';
    }
    return 0;
  };

  auto* gff = app.add_subcommand("gf-factor", "factor a polynomial over GF(p)");
  gff->add_option("--p", p, "prime")->required();
  gff->add_option("--poly", poly, "polynomial in one variable, integer or p-integral coefficients")->required();
  gff->add_option("--seed", cfg.seed, "seed for equal-degree splitting");
  add_format(gff, flags, cfg);
  run[gff] = [&] {
    GFPoly f = GFPoly::parse(p, poly);
    if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
    auto w = gf_factor(f, cfg.seed);
    if ((cfg.format == Format::Json)) {
      emit(out, Json{{"input", f}, {"factorization", w}});
      return 0;
    }
    out << "f = " << f.to_string() << " over GF(" << p << ")\n";
    out << "unit: " << w.unit << '\n';
    for (const auto& [g, e] : w.factors) out << "  (" << g.to_string() << ")" << (e > 1 ? "^" + std::to_string(e) : "") << "  degree " << g.degree() << '\n';
    out << "irreducible degrees: min " << w.min_irreducible_degree << ", max " << w.max_irreducible_degree << '\n';
    return 0;
  };

  auto* vk = app.add_subcommand("verify-known", "build the known extremal graphs and check them against the bound");
  vk->add_option("--name", name, "graph name, e.g. heawood");
  vk->add_flag("--all", all, "every constructible row");
  vk->add_flag("--edges", edges, "print the edge list of --name instead");
  add_format(vk, flags, cfg);
  run[vk] = [&] {
    if (edges) {
      if (name.empty()) throw InvalidArgument("--edges needs --name");
      out << edge_list(build_known(name));
      return 0;
    }
    if (!all && name.empty()) throw InvalidArgument("give --name or --all");
    std::vector<GraphReport> reports;
    for (const auto& e : table1_entries())
      if (all || e.name == name) reports.push_back(verify_table1(e, std::max(cfg.tol, 1e-8)));
    if (reports.empty()) throw UnknownName("no table row named '" + name + "'");
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.matches_bound;
    const std::vector<std::string> header = {"name", "k", "n", "lambda2", "theta", "girth", "diameter", "c", "d", "M", "lp", "matches"};
    auto cells = [&](const GraphReport& r) {
      return std::vector<std::string>{r.name, std::to_string(r.k), std::to_string(r.n), approx_str(r.lambda2), r.theta.str(),
                                      std::to_string(r.girth), std::to_string(r.diameter), std::to_string(r.c),
                                      std::to_string(r.d), r.order_bound.get_str(), number_cell(r.lp), yes(r.matches_bound)};
    };
    if ((cfg.format == Format::Json)) {
      emit(out, Json(reports));
    } else if ((cfg.format == Format::Csv)) {
      csv_row(out, header);
      for (const auto& r : reports) csv_row(out, cells(r));
    } else {
      out << std::left << std::setw(24) << "name" << std::setw(4) << "k" << std::setw(5) << "n" << std::setw(16) << "lambda2"
          << std::setw(10) << "theta" << std::setw(7) << "girth" << std::setw(5) << "d" << std::setw(6) << "M"
          << std::setw(6) << "LP" << "matches\n";
      for (const auto& r : reports)
        out << std::setw(24) << r.name << std::setw(4) << r.k << std::setw(5) << r.n << std::setw(16) << approx_str(r.lambda2)
            << std::setw(10) << r.theta.str() << std::setw(7) << r.girth << std::setw(5) << r.diameter << std::setw(6)
            << r.order_bound.get_str() << std::setw(6) << number_cell(r.lp) << yes(r.matches_bound) << '\n';
      out << std::right << "lambda2 in floating point; M and LP exact\n";
    }
    if (!ok) throw CheckFailed{"some graph does not meet its bound"};
    return 0;
  };

  auto* sweep = app.add_subcommand("sweep-nonexistence", "nonexistence verdicts for d = 3..d-max");
  sweep->add_option("--d-max", d_max, "largest diameter")->required()->check(CLI::Range(3, 100000));
  add_format(sweep, flags, cfg);
  add_threads(sweep, cfg);
  add_table7(sweep, cfg);
  run[sweep] = [&] {
    auto t7 = load_table7(cfg.table7.empty() ? default_table7_path() : cfg.table7);
    auto reps = sweep_nonexistence(d_max, t7, cfg.threads);
    if ((cfg.format == Format::Json)) {
      emit(out, Json(reps));
      return 0;
    }
    csv_row(out, {"d", "verdict", "mechanism", "rows"});
    for (const auto& r : reps) {
      std::string rows;
      for (const auto& s : r.rows) rows += (rows.empty() ? "" : ";") + s;
      csv_row(out, {std::to_string(r.d), verdict_name(r.verdict), r.mechanism, rows});
    }
    return 0;
  };

  auto* t1 = app.add_subcommand("table1", "known bipartite graphs meeting M(k,d+1,c)");
  add_format(t1, flags, cfg);
  run[t1] = [&] {
    const std::vector<std::string> header = {"family", "k", "theta", "c", "d", "M", "lambda2_of_B", "checked_by", "ok"};
    Json rows = Json::array();
    bool all_ok = true;
    if ((cfg.format == Format::Csv)) csv_row(out, header);
    else if (!(cfg.format == Format::Json))
      out << std::left << std::setw(42) << "family" << std::setw(4) << "k" << std::setw(10) << "theta" << std::setw(4) << "c"
          << std::setw(4) << "d" << std::setw(6) << "M" << std::setw(22) << "checked by" << "ok\n";
    for (const auto& row : family_rows()) {
      Rational m = m_bound(row.k, row.d + 1, Rational(row.c));
      double l2 = second_eigenvalue_B(row.k, row.d + 1, Rational(row.c));
      bool ok = std::abs(l2 - row.theta.value) < 1e-9;
      std::string how;
      if (row.graph) {
        ok = ok && verify_table1(*row.graph, std::max(cfg.tol, 1e-8)).matches_bound;
        how = "graph";
      } else {
        auto mc = check_multiplicities(DRGCandidate::make(row.k, row.d, row.c));
        ok = ok && mc.integral && mc.unimodal && mc.total_ok;
        how = "multiplicities";
      }
      all_ok = all_ok && ok;
      if ((cfg.format == Format::Json)) {
        rows.push_back(Json{{"family", row.family}, {"k", row.k}, {"theta", row.theta}, {"c", row.c}, {"d", row.d},
                            {"M", m}, {"lambda2_of_B", l2}, {"checked_by", how}, {"ok", ok}});
      } else if ((cfg.format == Format::Csv)) {
        csv_row(out, {row.family, std::to_string(row.k), row.theta.str(), std::to_string(row.c), std::to_string(row.d),
                      m.get_str(), approx_str(l2), how, yes(ok)});
      } else {
        out << std::setw(42) << row.family << std::setw(4) << row.k << std::setw(10) << row.theta.str() << std::setw(4)
            << row.c << std::setw(4) << row.d << std::setw(6) << m.get_str() << std::setw(22) << how << yes(ok) << '\n';
      }
    }
    if ((cfg.format == Format::Json)) emit(out, rows);
    else if (!(cfg.format == Format::Csv)) out << std::right << "M exact; theta exact\n";
    if (!all_ok) throw CheckFailed{"a table row failed its check"};
    return 0;
  };

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (flags.json && flags.csv) {
    err << "error: --json and --csv are exclusive\n";
    return 1;
  }
  cfg.format = flags.json ? Format::Json : flags.csv ? Format::Csv : Format::Text;
  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    try {
      return run.at(sub)();
    } catch (const CheckFailed& e) {
      err << "check failed: " << e.message << '\n';
      return 2;
    } catch (const NotARoot& e) {
      err << "check failed: " << e.what() << '\n';
      return 2;
    } catch (const HypothesisViolated& e) {
      err << "check failed: " << e.what() << '\n';
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const nlohmann::json::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}

}  // namespace smoore::cli
