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

#include "smoore/number.hpp"

#include <cstdlib>
#include <sstream>

#include "smoore/errors.hpp"

namespace smoore {

std::string Number::str() const {
  if (exact) return exact->get_str();
  std::ostringstream os;
  os.precision(17);
  os << approx;
  return os.str();
}

Theta Theta::from_square(const Rational& sq, int sign) {
  if (sq < 0) throw InvalidArgument("theta^2 must be non-negative");
  Surd s = Surd::sqrt_of(sq);
  if (sign < 0) s = -s;
  return from_surd(s);
}

std::optional<Rational> Theta::square() const {
  if (!exact) return std::nullopt;
  Surd sq = *exact * *exact;
  if (!sq.is_rational()) return std::nullopt;
  return sq.rational_part();
}

std::string Theta::str() const {
  if (!exact) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
  }
  const Surd& s = *exact;
  if (s.is_rational()) return s.rational_part().get_str();
  std::string root = "sqrt(" + s.radicand().get_str() + ")";
  std::string out;
  if (s.rational_part() != 0) out = s.rational_part().get_str() + (s.surd_part() < 0 ? " - " : " + ");
  else if (s.surd_part() < 0) out = "-";
  Rational b = abs(s.surd_part());
  if (b != 1) out += b.get_str() + "*";
  return out + root;
}

Theta parse_theta(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  int sign = 1;
  std::string body = t;
  if (!body.empty() && body.front() == '-') {
    sign = -1;
    body = body.substr(1);
  }
  if (body.rfind("sqrt(", 0) == 0 && body.back() == ')') {
    Rational sq = parse_rational(body.substr(5, body.size() - 6));
    return Theta::from_square(sq, sign);
  }
  return Theta::of(parse_rational(t));
}

double default_tolerance() {
  if (const char* env = std::getenv("SPECTRAL_MOORE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e-9;
}

}  // namespace smoore
