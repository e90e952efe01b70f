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

#include "smoore/rational.hpp"

#include <cctype>
#include <cmath>

#include "smoore/errors.hpp"

namespace smoore {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string owned(s.front() == '+' ? s.substr(1) : s);
  return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent, parsed exactly.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = parse_integer(text.substr(e + 1)).get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw ParseError("malformed number '" + std::string(text) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw ParseError("malformed number '" + std::string(text) + "'");
  Rational q{Integer(digits, 10)};
  long shift = exponent - frac_digits;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    q *= ten_pow;
  else
    q /= ten_pow;
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::optional<unsigned> p_adic_order(const Integer& a, unsigned long prime) {
  if (a == 0) return std::nullopt;
  Integer rest = abs(a);
  unsigned order = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), prime)) {
    rest /= prime;
    ++order;
  }
  return order;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  if (n == 0) throw InvalidArgument("divisors of zero");
  Integer m = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// ---------------------------------------------------------------------------
// Surd

Surd::Surd(Rational a, Rational b, Rational radicand) : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
  if (r_ < 0) throw InvalidArgument("negative radicand");
  normalize();
}

Surd Surd::sqrt_of(const Rational& radicand) { return Surd(0, 1, radicand); }

void Surd::normalize() {
  if (b_ == 0 || r_ == 0) {
    b_ = 0;
    r_ = 0;
    return;
  }
  if (auto root = rational_sqrt(r_)) {
    a_ += b_ * *root;
    b_ = 0;
    r_ = 0;
  }
}

void Surd::adopt_radicand(const Rational& r) {
  if (r == 0 || r == r_) return;
  if (b_ == 0) {
    r_ = r;
    return;
  }
  throw InvalidArgument("mixing square roots of different radicands");
}

int Surd::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 r.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * r_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double Surd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(r_.get_d());
}

Surd Surd::operator-() const {
  Surd s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Surd& Surd::operator+=(const Surd& o) {
  adopt_radicand(o.b_ == 0 ? Rational(0) : o.r_);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd& Surd::operator*=(const Surd& o) {
  adopt_radicand(o.b_ == 0 ? Rational(0) : o.r_);
  const Rational& r = b_ != 0 ? r_ : o.r_;
  Rational a = a_ * o.a_ + b_ * o.b_ * r;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  r_ = b_ == 0 ? Rational(0) : r;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Surd& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  Surd conj = o;
  conj.b_ = -conj.b_;
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.r_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  return *this;
}

}  // namespace smoore
