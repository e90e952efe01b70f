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

#include "smoore/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "smoore/errors.hpp"

namespace smoore {

namespace {

// Error-free transformations for compensated Horner.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double z = s - a;
  e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Surd Polynomial::operator()(const Surd& at) const {
  Surd acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += Surd(*it);
  }
  return acc;
}

double Polynomial::eval(double at) const {
  if (coeffs_.empty()) return 0.0;
  double s = coeffs_.back().get_d();
  double c = 0.0;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    double p, pi, sigma;
    two_prod(s, at, p, pi);
    two_sum(p, coeffs_[i].get_d(), s, sigma);
    c = c * at + (pi + sigma);
  }
  return s + c;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_square() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  Rational power = 1;
  for (auto& c : v) {
    c *= power;
    power *= s;
  }
  return Polynomial(std::move(v));
}

std::optional<Polynomial> Polynomial::fold_square(int parity) const {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (static_cast<int>(i % 2) == parity) {
      v.push_back(coeffs_[i]);
    } else if (coeffs_[i] != 0) {
      return std::nullopt;
    }
  }
  return Polynomial(std::move(v));
}

bool Polynomial::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c.get_num());
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
  Polynomial scaled = *this * Rational(den_lcm);
  Integer g = scaled.content();
  if (scaled.leading() < 0) g = -g;
  Rational inv(Integer(1), g);
  inv.canonicalize();
  return scaled * inv;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial{}, num};
  std::vector<Rational> rem = num.coeffs_;
  const std::size_t dd = den.coeffs_.size() - 1;
  std::vector<Rational> quo(rem.size() - dd, Rational(0));
  const Rational lead_inv = 1 / den.leading();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * lead_inv;
    quo[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first;
}

namespace {

// expr := ['+'|'-'] term (('+'|'-') term)*, term := power ('*'? power)*,
// power := atom ('^' n)?, atom := number | variable | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    if (s_.empty()) throw ParseError("empty polynomial");
  }

  Polynomial run() {
    Polynomial p = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }
  bool more() const { return pos_ < s_.size(); }
  char peek() const { return more() ? s_[pos_] : '\0'; }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    while (first || peek() == '+' || peek() == '-') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Polynomial t = term();
      acc += sign < 0 ? -t : t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc *= power();
      } else if (digit(peek()) || peek() == '.' || letter(peek()) || peek() == '(') {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    std::size_t start = pos_;
    while (digit(peek())) ++pos_;
    if (start == pos_) fail("expected an exponent");
    unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    Polynomial r{1};
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (digit(c) || c == '.') return Polynomial::constant(number());
    if (letter(c)) {
      if (var_ == 0) var_ = c;
      if (c != var_) fail("mixed variables");
      ++pos_;
      return Polynomial::x();
    }
    if (!more()) fail("unexpected end");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (digit(peek()) || peek() == '.') ++pos_;
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < s_.size()) {
      std::size_t q = pos_ + 1;
      if (s_[q] == '+' || s_[q] == '-') ++q;
      if (q < s_.size() && digit(s_[q])) {
        pos_ = q;
        while (digit(peek())) ++pos_;
      }
    }
    if (peek() == '/' && pos_ + 1 < s_.size() && digit(s_[pos_ + 1])) {
      ++pos_;
      while (digit(peek())) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  std::string text_;
  std::string s_;
  std::size_t pos_ = 0;
  char var_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).run(); }

}  // namespace smoore
