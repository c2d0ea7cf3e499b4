// Copyright 2026 The Authors.
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

#include "gammaforge/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>

#include "gammaforge/errors.hpp"

namespace gammaforge {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
  return m;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial m(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    assert(m.exps_[i] >= exps_[i]);
    m.exps_[i] -= exps_[i];
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(m.exps_[i], other.exps_[i]);
  return m;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  return from_term(Monomial::variable(nvars, index), 1);
}

Poly Poly::from_term(Monomial m, const Rational& c) {
  Poly p(m.size());
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Poly p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().mono.is_one()) return terms_.front().coeff;
  return std::nullopt;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Poly::degree_in(std::span<const std::size_t> vars) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) {
    std::uint32_t s = 0;
    for (auto v : vars) s += t.mono[v];
    d = std::max(d, s);
  }
  return d;
}

std::vector<bool> Poly::support() const {
  std::vector<bool> s(nvars_, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) s[i] = true;
  return s;
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono < a[i].mono) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  assert(o.nvars_ == nvars_ || o.is_zero() || is_zero());
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  assert(o.nvars_ == nvars_ || o.is_zero() || is_zero());
  if (is_zero()) nvars_ = std::max(nvars_, o.nvars_);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(std::max(a.nvars_, b.nvars_), std::move(prod));
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly p(nvars_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves exponent-lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Poly Poly::remap(std::size_t nvars, std::span<const std::size_t> index_map) const {
  assert(index_map.size() == nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) m[index_map[i]] += t.mono[i];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(nvars, std::move(out));
}

Poly Poly::specialize(const std::vector<std::optional<Rational>>& values) const {
  assert(values.size() == nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(nvars_);
    Rational c = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono[i]) continue;
      if (values[i]) {
        Rational f;
        mpz_pow_ui(f.get_num_mpz_t(), values[i]->get_num_mpz_t(), t.mono[i]);
        mpz_pow_ui(f.get_den_mpz_t(), values[i]->get_den_mpz_t(), t.mono[i]);
        f.canonicalize();
        c *= f;
      } else {
        m[i] = t.mono[i];
      }
    }
    out.push_back({std::move(m), std::move(c)});
  }
  return from_terms(nvars_, std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  std::vector<std::optional<Rational>> values(point.begin(), point.end());
  return *specialize(values).constant_value();
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (!t.mono[var]) continue;
    Monomial m = t.mono;
    m[var] -= 1;
    out.push_back({std::move(m), t.coeff * t.mono[var]});
  }
  return from_terms(nvars_, std::move(out));
}

Poly Poly::scaled_to_integers() const {
  if (terms_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& t : terms_) l = lcm(l, Integer(t.coeff.get_den()));
  for (const auto& t : terms_) g = gcd(g, Integer(t.coeff.get_num() * (l / t.coeff.get_den())));
  Poly p(*this);
  p *= Rational(l, g);
  return p;
}

namespace {

// Recursive-descent parser:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts ASCII '-' and U+2212 MINUS SIGN.
  bool eat_minus() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat_minus())
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  Poly unary() {
    if (eat_minus()) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer literal");
      const auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(vars_.size(), Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  Poly p = PolyParser(text, vars).parse();
  if (p.nvars() != vars.size()) p = Poly(vars.size()) + p;
  return p;
}

}  // namespace gammaforge
