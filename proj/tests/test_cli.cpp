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

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "smoore/errors.hpp"
#include "smoore/json_io.hpp"

using namespace smoore;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

template <class T>
void round_trip(const T& v) {
  Json j = v;
  T back = Json::parse(j.dump()).get<T>();
  CHECK(back == v);
  CHECK(Json(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("json round trips") {
  round_trip(Rational(-7, 3));
  round_trip(Rational(Integer("123456789012345678901234567891"), Integer(7)));
  round_trip(Number::of(Rational(5, 2)));
  round_trip(Number::inexact(0.1));
  round_trip(Theta::from_square(2, -1));
  round_trip(Theta::inexact(1.2345678901234567));
  round_trip(parse_polynomial("x^3 - 1/2*x + 7"));
  round_trip(GFPoly(5, {1, 0, 3}));
  round_trip(b_upper(3, Theta::of(1)));
  round_trip(b_upper(3, Theta::of(2)));  // carries the alternate (t, c)
  round_trip(v_upper(3, Theta::inexact(1.7)));
  round_trip(compare(3, Theta::from_square(2)));
  round_trip(build_quotient(QuotientKind::T, 4, 6, Rational(3, 2)));
  round_trip(quotient_spectrum(build_quotient(QuotientKind::B, 3, 7, 1)));
  round_trip(linearize(3, 1, 2, 1));
  auto cert = build_certificate(3, 5, Number::of(1), Theta::of(2));
  round_trip(cert);
  round_trip(build_certificate(3, 6, Number::inexact(1.5), Theta::inexact(second_eigenvalue_B(3, 6, Rational(3, 2)))));
  round_trip(lp_bound(3, {Theta::of(3), Theta::of(2), Theta::of(0)}, cert));
  round_trip(DRGCandidate::make(6, 4, 2));
  round_trip(check_multiplicities(DRGCandidate::make(3, 6, 1)));
  round_trip(max_irrational_count(5, 11));
  round_trip(max_irrational_count(3, 11));
  auto t7 = load_table7();
  round_trip(mod_case(2, 6, t7));
  for (const auto& row : t7) round_trip(row);
  round_trip(gf_factor_screen(18, 5));
  round_trip(nonexistence_report(11, t7));
  round_trip(nonexistence_report(6, t7));
  round_trip(gf_factor(GFPoly(3, {2, 0, 1, 1, 0, 1})));
  round_trip(q_splitting_screen(parse_polynomial("x^4 - 5x^2 + 6"), true, false));
  for (const auto& e : table1_entries()) {
    round_trip(e);
    round_trip(verify_table1(e));
  }
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(Json::parse(R"({"num": 1, "den": 0})").get<Rational>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"({"num": 1.5, "den": 2})").get<Rational>(), ParseError);
  CHECK_THROWS_AS(Json::parse(R"("x")").get<Number>(), ParseError);
}

TEST_CASE("cli examples") {
  auto r = run({"bound", "--k", "3", "--theta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("t=4\n") != std::string::npos);
  CHECK(r.out.find("c=2 (exact)") != std::string::npos);
  CHECK(r.out.find("M=8 (exact)") != std::string::npos);

  r = run({"vbound", "--k", "3", "--theta", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N=10 (exact)") != std::string::npos);

  r = run({"bound", "--k", "3", "--exact-theta-sq", "2", "--json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["M"].get<Rational>() == 14);
  CHECK(j["t"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j.contains("attained_by"));

  r = run({"nonexist", "--d", "18"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ELIMINATED") != std::string::npos);
  CHECK(r.out.find("GF(5)") != std::string::npos);

  r = run({"nonexist", "--d", "12", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["verdict"] == "OPEN");

  r = run({"verify-known", "--all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Tutte-Coxeter") != std::string::npos);
  CHECK(r.out.find(" no\n") == std::string::npos);

  r = run({"verify-known", "--all", "--json"});
  auto reports = Json::parse(r.out).get<std::vector<GraphReport>>();
  CHECK(reports.size() == table1_entries().size());
  for (const auto& g : reports) CHECK(g.matches_bound);

  r = run({"certify", "--k", "3", "--t", "4", "--c", "1", "--json"});
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["f"].get<std::vector<Number>>() == std::vector<Number>{Number::of(1), Number::of(1)});
  CHECK(j["bound"].get<Number>() == Number::of(14));
  CHECK(j["equality_conditions"]["f_vanishes_on_spectrum"] == true);

  r = run({"gf-factor", "--p", "5", "--poly", "z^2 - 3z + 2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(z + 3)") < r.out.find("(z + 4)"));

  r = run({"feasible", "--k", "3", "--d", "3", "--c", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FEASIBLE") != std::string::npos);

  r = run({"sweep-nonexistence", "--d-max", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("d,verdict,mechanism,rows\n", 0) == 0);
  CHECK(r.out.find("\n17,ELIMINATED,") != std::string::npos);
  CHECK(r.out.find("\n12,OPEN,") != std::string::npos);

  r = run({"compare", "--k", "3", "--theta-grid", "0:2.8:0.05", "--csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 58);

  r = run({"quotient", "--kind", "B", "--k", "3", "--t", "5", "--c", "1", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["charpoly"]["s_part"] == "x^3 - 4*x");

  r = run({"table1", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"GH(2,2)\",3,sqrt(6),1,6,126") != std::string::npos);
  CHECK(r.out.find("\"pg(6,6,2)\",6,3,2,4,162") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"bound", "--k", "3"}).code == 1);
  CHECK(run({"bound", "--k", "3", "--theta", "5"}).code == 1);  // beyond 2 sqrt(k-1)
  CHECK(run({"bound", "--k", "x", "--theta", "1"}).code == 1);
  CHECK(run({"gf-factor", "--p", "6", "--poly", "z"}).code == 1);
  CHECK(run({"verify-known", "--name", "petersen"}).code == 1);
  CHECK(run({"bound", "--k", "3", "--theta", "1", "--json", "--csv"}).code == 1);
  CHECK(run({"bound", "--help"}).code == 0);
  // check failures
  auto r = run({"certify", "--k", "3", "--t", "4", "--c", "1", "--theta", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("check failed") != std::string::npos);
  CHECK(run({"feasible", "--k", "3", "--d", "5", "--c", "2"}).code == 2);
}

TEST_CASE("identical invocations are byte-identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"nonexist", "--d", "17", "--json", "--threads", "4"},
           {"gf-factor", "--p", "7", "--poly", "z^12 + 3z^5 + 1", "--json"},
           {"sweep-nonexistence", "--d-max", "40", "--threads", "3"},
           {"verify-known", "--all", "--json"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // thread count does not change the result
  CHECK(run({"nonexist", "--d", "20", "--json", "--threads", "1"}).out ==
        run({"nonexist", "--d", "20", "--json", "--threads", "5"}).out);
}

TEST_CASE("tolerance from the environment") {
  setenv("SPECTRAL_MOORE_TOL", "1e-6", 1);
  CHECK(default_tolerance() == 1e-6);
  setenv("SPECTRAL_MOORE_TOL", "-3", 1);
  CHECK(default_tolerance() == 1e-9);
  unsetenv("SPECTRAL_MOORE_TOL");
  CHECK(default_tolerance() == 1e-9);
}
