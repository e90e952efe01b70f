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

#include "smoore/json_io.hpp"

#include "smoore/errors.hpp"

void nlohmann::adl_serializer<mpq_class>::to_json(nlohmann::ordered_json& j, const mpq_class& q) {
  auto part = [](const mpz_class& z) -> nlohmann::ordered_json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  j = nlohmann::ordered_json{{"num", part(q.get_num())}, {"den", part(q.get_den())}};
}

void nlohmann::adl_serializer<mpq_class>::from_json(const nlohmann::ordered_json& j, mpq_class& q) {
  auto part = [](const nlohmann::ordered_json& v) {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    if (v.is_number_integer()) return mpz_class(v.get<long>());
    throw smoore::ParseError("rational parts must be integers or decimal strings");
  };
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw smoore::ParseError("expected {num, den}");
  mpz_class den = part(j.at("den"));
  if (den == 0) throw smoore::ParseError("zero denominator");
  q = mpq_class(part(j.at("num")), den);
  q.canonicalize();
}

namespace smoore {

namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? Json(*v) : Json(nullptr);
}

template <class T>
void get(const Json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null())
    v.reset();
  else
    v = j.at(key).get<T>();
}

std::string letter(char c) { return std::string(1, c); }

char letter_of(const Json& j) {
  auto s = j.get<std::string>();
  if (s.size() != 1) throw ParseError("expected a single letter");
  return s[0];
}

}  // namespace

std::string verdict_name(Verdict v) { return v == Verdict::Eliminated ? "ELIMINATED" : "OPEN"; }

void to_json(Json& j, const Number& v) {
  if (v.exact)
    j = *v.exact;
  else
    j = v.approx;
}

void from_json(const Json& j, Number& v) {
  if (j.is_object())
    v = Number::of(j.get<Rational>());
  else if (j.is_number())
    v = Number::inexact(j.get<double>());
  else
    throw ParseError("expected a number or {num, den}");
}

void to_json(Json& j, const Theta& v) {
  if (!v.exact) {
    j = v.value;
    return;
  }
  j = Json{{"a", v.exact->rational_part()}, {"b", v.exact->surd_part()}, {"r", v.exact->radicand()},
           {"value", v.value}, {"text", v.str()}};
}

void from_json(const Json& j, Theta& v) {
  if (j.is_number()) {
    v = Theta::inexact(j.get<double>());
    return;
  }
  Surd s(j.at("a").get<Rational>(), j.at("b").get<Rational>(), j.at("r").get<Rational>());
  v = Theta{s, j.at("value").get<double>()};
}

void to_json(Json& j, const Polynomial& v) { j = v.to_string(); }
void from_json(const Json& j, Polynomial& v) { v = parse_polynomial(j.get<std::string>()); }

void to_json(Json& j, const GFPoly& v) { j = Json{{"p", v.p()}, {"coeffs", v.coeffs()}, {"text", v.to_string()}}; }
void from_json(const Json& j, GFPoly& v) {
  v = GFPoly(j.at("p").get<std::int64_t>(), j.at("coeffs").get<std::vector<std::int64_t>>());
}

void to_json(Json& j, const BoundResult& v) {
  j = Json{{"kind", v.kind == BoundKind::M ? "M" : "N"}, {"k", v.k}, {"theta", v.theta}, {"t", v.t}, {"c", v.c},
           {v.kind == BoundKind::M ? "M" : "N", v.value}, {"exact", v.exact}};
  put(j, "alt_t", v.alt_t);
  put(j, "alt_c", v.alt_c);
  j["attained_by"] = v.attained_by;
}

void from_json(const Json& j, BoundResult& v) {
  auto kind = j.at("kind").get<std::string>();
  if (kind != "M" && kind != "N") throw ParseError("bound kind must be M or N");
  v.kind = kind == "M" ? BoundKind::M : BoundKind::N;
  j.at("k").get_to(v.k);
  j.at("theta").get_to(v.theta);
  j.at("t").get_to(v.t);
  j.at("c").get_to(v.c);
  j.at(kind).get_to(v.value);
  j.at("exact").get_to(v.exact);
  get(j, "alt_t", v.alt_t);
  get(j, "alt_c", v.alt_c);
  j.at("attained_by").get_to(v.attained_by);
}

void to_json(Json& j, const Comparison& v) {
  j = Json{{"m", v.m}, {"n", v.n}, {"m_le_n", v.m_le_n}, {"equal", v.equal}, {"at_boundary", v.at_boundary}};
}

void from_json(const Json& j, Comparison& v) {
  j.at("m").get_to(v.m);
  j.at("n").get_to(v.n);
  j.at("m_le_n").get_to(v.m_le_n);
  j.at("equal").get_to(v.equal);
  j.at("at_boundary").get_to(v.at_boundary);
}

void to_json(Json& j, const QuotientMatrix& v) {
  j = Json{{"kind", v.kind == QuotientKind::B ? "B" : "T"}, {"k", v.k}, {"t", v.t}, {"c", v.c}, {"rows", v.rows}};
}

void from_json(const Json& j, QuotientMatrix& v) {
  auto kind = j.at("kind").get<std::string>();
  if (kind != "B" && kind != "T") throw ParseError("quotient kind must be B or T");
  v.kind = kind == "B" ? QuotientKind::B : QuotientKind::T;
  j.at("k").get_to(v.k);
  j.at("t").get_to(v.t);
  j.at("c").get_to(v.c);
  j.at("rows").get_to(v.rows);
}

void to_json(Json& j, const SpectrumResult& v) {
  j = Json{{"eigenvalues", v.eigenvalues}, {"exact_squares", v.exact_squares}};
}

void from_json(const Json& j, SpectrumResult& v) {
  j.at("eigenvalues").get_to(v.eigenvalues);
  j.at("exact_squares").get_to(v.exact_squares);
}

void to_json(Json& j, const LinearizationTable& v) {
  j = Json{{"k", v.k}, {"eps", v.eps}, {"i", v.i}, {"j", v.j}, {"p", v.p}};
}

void from_json(const Json& j, LinearizationTable& v) {
  j.at("k").get_to(v.k);
  j.at("eps").get_to(v.eps);
  j.at("i").get_to(v.i);
  j.at("j").get_to(v.j);
  j.at("p").get_to(v.p);
}

void to_json(Json& j, const Certificate& v) {
  j = Json{{"k", v.k}, {"t", v.t}, {"c", v.c}, {"theta", v.theta}, {"f", v.f}, {"exact", v.exact}};
}

void from_json(const Json& j, Certificate& v) {
  j.at("k").get_to(v.k);
  j.at("t").get_to(v.t);
  j.at("c").get_to(v.c);
  j.at("theta").get_to(v.theta);
  j.at("f").get_to(v.f);
  j.at("exact").get_to(v.exact);
}

void to_json(Json& j, const LpResult& v) {
  j = Json{{"bound", v.bound}, {"equality", v.equality}, {"values", v.values}};
}

void from_json(const Json& j, LpResult& v) {
  j.at("bound").get_to(v.bound);
  j.at("equality").get_to(v.equality);
  j.at("values").get_to(v.values);
}

void to_json(Json& j, const DRGCandidate& v) {
  j = Json{{"k", v.k}, {"d", v.d}, {"c", v.c}, {"eps", v.eps}, {"m", v.m}, {"n", v.n}, {"d_prime", v.d_prime}};
}

void from_json(const Json& j, DRGCandidate& v) {
  j.at("k").get_to(v.k);
  j.at("d").get_to(v.d);
  j.at("c").get_to(v.c);
  j.at("eps").get_to(v.eps);
  j.at("m").get_to(v.m);
  j.at("n").get_to(v.n);
  j.at("d_prime").get_to(v.d_prime);
}

void to_json(Json& j, const MultiplicityRecord& v) {
  j = Json{{"theta", v.theta}, {"phi", v.phi}, {"m_theta", v.m_theta}, {"is_integral", v.is_integral}};
}

void from_json(const Json& j, MultiplicityRecord& v) {
  j.at("theta").get_to(v.theta);
  j.at("phi").get_to(v.phi);
  j.at("m_theta").get_to(v.m_theta);
  j.at("is_integral").get_to(v.is_integral);
}

void to_json(Json& j, const MultiplicityCheck& v) {
  j = Json{{"integral", v.integral}, {"unimodal", v.unimodal}, {"total_ok", v.total_ok}, {"total", v.total},
           {"spectrum", v.spectrum}};
}

void from_json(const Json& j, MultiplicityCheck& v) {
  j.at("integral").get_to(v.integral);
  j.at("unimodal").get_to(v.unimodal);
  j.at("total_ok").get_to(v.total_ok);
  j.at("total").get_to(v.total);
  j.at("spectrum").get_to(v.spectrum);
}

void to_json(Json& j, const IrrationalBound& v) {
  j = Json::object();
  put(j, "j", v.j);
  j["L"] = v.L;
}

void from_json(const Json& j, IrrationalBound& v) {
  get(j, "j", v.j);
  j.at("L").get_to(v.L);
}

void to_json(Json& j, const ModCaseReport& v) {
  j = Json{{"case2", letter(v.case2)}, {"case3", letter(v.case3)}, {"d_form2", v.d_form2}, {"d_form3", v.d_form3},
           {"table7_row", v.table7_row}};
}

void from_json(const Json& j, ModCaseReport& v) {
  v.case2 = letter_of(j.at("case2"));
  v.case3 = letter_of(j.at("case3"));
  j.at("d_form2").get_to(v.d_form2);
  j.at("d_form3").get_to(v.d_form3);
  j.at("table7_row").get_to(v.table7_row);
}

void to_json(Json& j, const Table7Row& v) {
  Json c3 = Json::array();
  for (char c : v.case3) c3.push_back(letter(c));
  j = Json{{"case2", letter(v.case2)}, {"case3", c3}, {"d", v.d}};
}

void from_json(const Json& j, Table7Row& v) {
  v.case2 = letter_of(j.at("case2"));
  v.case3.clear();
  for (const auto& c : j.at("case3")) v.case3.push_back(letter_of(c));
  j.at("d").get_to(v.d);
}

void to_json(Json& j, const PairWitness& v) {
  j = Json{{"c_prime", v.c_prime}, {"k_prime", v.k_prime},       {"min_degree", v.min_degree},
           {"max_degree", v.max_degree}, {"quadratics", v.quadratics}, {"blocked", v.blocked}};
}

void from_json(const Json& j, PairWitness& v) {
  j.at("c_prime").get_to(v.c_prime);
  j.at("k_prime").get_to(v.k_prime);
  j.at("min_degree").get_to(v.min_degree);
  j.at("max_degree").get_to(v.max_degree);
  j.at("quadratics").get_to(v.quadratics);
  j.at("blocked").get_to(v.blocked);
}

void to_json(Json& j, const ScreenResult& v) {
  j = Json{{"d", v.d}, {"p", v.p}};
  put(j, "quadratic_budget", v.quadratic_budget);
  j["all_pairs_blocked"] = v.all_pairs_blocked;
  j["witnesses"] = v.witnesses;
}

void from_json(const Json& j, ScreenResult& v) {
  j.at("d").get_to(v.d);
  j.at("p").get_to(v.p);
  get(j, "quadratic_budget", v.quadratic_budget);
  j.at("all_pairs_blocked").get_to(v.all_pairs_blocked);
  j.at("witnesses").get_to(v.witnesses);
}

void to_json(Json& j, const QCheck& v) {
  j = Json{{"k", v.k}, {"c", v.c}, {"has_factor_deg_ge_3", v.has_factor_deg_ge_3}, {"witness", v.witness}};
}

void from_json(const Json& j, QCheck& v) {
  j.at("k").get_to(v.k);
  j.at("c").get_to(v.c);
  j.at("has_factor_deg_ge_3").get_to(v.has_factor_deg_ge_3);
  j.at("witness").get_to(v.witness);
}

void to_json(Json& j, const NonexistenceReport& v) {
  j = Json{{"d", v.d}, {"verdict", verdict_name(v.verdict)}, {"mechanism", v.mechanism}, {"evidence", v.evidence},
           {"rows", v.rows}};
  put(j, "screen", v.screen);
  put(j, "bound_k", v.bound_k);
  put(j, "bound_j", v.bound_j);
  put(j, "bound_L", v.bound_L);
  j["q_checks"] = v.q_checks;
}

void from_json(const Json& j, NonexistenceReport& v) {
  j.at("d").get_to(v.d);
  auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "ELIMINATED" && verdict != "OPEN") throw ParseError("unknown verdict " + verdict);
  v.verdict = verdict == "ELIMINATED" ? Verdict::Eliminated : Verdict::Open;
  j.at("mechanism").get_to(v.mechanism);
  j.at("evidence").get_to(v.evidence);
  j.at("rows").get_to(v.rows);
  get(j, "screen", v.screen);
  get(j, "bound_k", v.bound_k);
  get(j, "bound_j", v.bound_j);
  get(j, "bound_L", v.bound_L);
  j.at("q_checks").get_to(v.q_checks);
}

void to_json(Json& j, const FactorizationWitness& v) {
  Json fs = Json::array();
  for (const auto& [f, e] : v.factors) fs.push_back(Json{{"factor", f}, {"multiplicity", e}});
  j = Json{{"p", v.p},
           {"unit", v.unit},
           {"factors", fs},
           {"min_irreducible_degree", v.min_irreducible_degree},
           {"max_irreducible_degree", v.max_irreducible_degree}};
}

void from_json(const Json& j, FactorizationWitness& v) {
  j.at("p").get_to(v.p);
  j.at("unit").get_to(v.unit);
  v.factors.clear();
  for (const auto& f : j.at("factors")) v.factors.emplace_back(f.at("factor").get<GFPoly>(), f.at("multiplicity").get<int>());
  j.at("min_irreducible_degree").get_to(v.min_irreducible_degree);
  j.at("max_irreducible_degree").get_to(v.max_irreducible_degree);
}

void to_json(Json& j, const QScreenResult& v) {
  j = Json{{"splits_deg_le_2", v.splits_deg_le_2}, {"rational_roots", v.rational_roots},
           {"quadratics", v.quadratics},           {"remainder", v.remainder}};
  put(j, "prime", v.prime);
  j["witness"] = v.witness;
}

void from_json(const Json& j, QScreenResult& v) {
  j.at("splits_deg_le_2").get_to(v.splits_deg_le_2);
  j.at("rational_roots").get_to(v.rational_roots);
  j.at("quadratics").get_to(v.quadratics);
  j.at("remainder").get_to(v.remainder);
  get(j, "prime", v.prime);
  j.at("witness").get_to(v.witness);
}

void to_json(Json& j, const Table1Entry& v) {
  j = Json{{"name", v.name}, {"params", v.params}, {"k", v.k}, {"theta", v.theta}, {"c", v.c}, {"d", v.d}};
}

void from_json(const Json& j, Table1Entry& v) {
  j.at("name").get_to(v.name);
  j.at("params").get_to(v.params);
  j.at("k").get_to(v.k);
  j.at("theta").get_to(v.theta);
  j.at("c").get_to(v.c);
  j.at("d").get_to(v.d);
}

void to_json(Json& j, const GraphReport& v) {
  j = Json{{"name", v.name},
           {"k", v.k},
           {"n", v.n},
           {"lambda2", v.lambda2},
           {"girth", v.girth},
           {"diameter", v.diameter},
           {"theta", v.theta},
           {"c", v.c},
           {"d", v.d},
           {"order_bound", v.order_bound},
           {"order_ok", v.order_ok},
           {"lambda_ok", v.lambda_ok},
           {"girth_ok", v.girth_ok},
           {"diameter_ok", v.diameter_ok},
           {"lp", v.lp},
           {"lp_tight", v.lp_tight},
           {"matches_bound", v.matches_bound}};
}

void from_json(const Json& j, GraphReport& v) {
  j.at("name").get_to(v.name);
  j.at("k").get_to(v.k);
  j.at("n").get_to(v.n);
  j.at("lambda2").get_to(v.lambda2);
  j.at("girth").get_to(v.girth);
  j.at("diameter").get_to(v.diameter);
  j.at("theta").get_to(v.theta);
  j.at("c").get_to(v.c);
  j.at("d").get_to(v.d);
  j.at("order_bound").get_to(v.order_bound);
  j.at("order_ok").get_to(v.order_ok);
  j.at("lambda_ok").get_to(v.lambda_ok);
  j.at("girth_ok").get_to(v.girth_ok);
  j.at("diameter_ok").get_to(v.diameter_ok);
  j.at("lp").get_to(v.lp);
  j.at("lp_tight").get_to(v.lp_tight);
  j.at("matches_bound").get_to(v.matches_bound);
}

}  // namespace smoore
