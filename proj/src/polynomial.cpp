#include "stabforge/polynomial.hpp"

#include <cctype>

namespace stabforge {

Polynomial Polynomial::constant(int vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Monomial::one(vars), c);
  return p;
}

Polynomial Polynomial::variable(int vars, int i) {
  if (i < 0 || i >= vars) throw DomainError("variable index out of range");
  Monomial m = Monomial::one(vars);
  m.exponents[i] = 1;
  return term(vars, m, Rational(1));
}

Polynomial Polynomial::term(int vars, Monomial m, const Rational& c) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

bool Polynomial::is_monic(const MonomialOrder& ord) const {
  return !is_zero() && leading_term(ord).second == 1;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.vars() != vars_) throw RingMismatchError("term from a different ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  if (ord.kind == OrderKind::grevlex) return *terms_.begin();
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (compare(it->first, best->first, ord) > 0) best = it;
  return *best;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& ord) const {
  return leading_term(ord).first;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) throw RingMismatchError("polynomial addition across rings");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) throw RingMismatchError("polynomial subtraction across rings");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw RingMismatchError("polynomial multiplication across rings");
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::mono_scaled(const Monomial& m, const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mono_mul(mm, m), k * c);
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= vars_) throw DomainError("derivative variable out of range");
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponents[var];
    if (e == 0) continue;
    Monomial mm = m;
    mm.exponents[var] -= 1;
    r.add_term(mm, c * e);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != vars_)
    throw RingMismatchError("evaluation point has wrong length");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < m.exponents[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute_linear(const std::vector<std::vector<Rational>>& a) const {
  if (static_cast<int>(a.size()) != vars_) throw RingMismatchError("substitution matrix shape");
  std::vector<Polynomial> images;
  images.reserve(vars_);
  for (int i = 0; i < vars_; ++i) {
    if (static_cast<int>(a[i].size()) != vars_) throw RingMismatchError("substitution matrix shape");
    Polynomial row(vars_);
    for (int j = 0; j < vars_; ++j) {
      Monomial m = Monomial::one(vars_);
      m.exponents[j] = 1;
      row.add_term(m, a[i][j]);
    }
    images.push_back(std::move(row));
  }
  Polynomial result(vars_);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(vars_, c);
    for (int i = 0; i < vars_; ++i)
      for (int e = 0; e < m.exponents[i]; ++e) t = t * images[i];
    result += t;
  }
  return result;
}

Polynomial Polynomial::restrict_variables(const std::vector<int>& keep) const {
  Polynomial r(static_cast<int>(keep.size()));
  std::vector<char> kept(vars_, 0);
  for (int k : keep) {
    if (k < 0 || k >= vars_) throw DomainError("restriction index out of range");
    kept[k] = 1;
  }
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < vars_; ++i)
      if (!kept[i] && m.exponents[i] != 0)
        throw DomainError("polynomial involves a dropped variable");
    Monomial mm = Monomial::one(r.vars());
    for (std::size_t j = 0; j < keep.size(); ++j) mm.exponents[j] = m.exponents[keep[j]];
    r.add_term(mm, c);
  }
  return r;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

namespace {

// Recursive-descent parser over the documented grammar.
class Parser {
public:
  Parser(std::string_view text, int vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

private:
  std::string_view text_;
  int vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(';
  }

  long parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits.push_back(text_[pos_++]);
    if (digits.empty()) throw ParseError(start, "expected a number");
    if (digits.size() > 9) throw ParseError(start, "integer literal too large");
    return std::stol(digits);
  }

  Polynomial parse_expr() {
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++pos_;
    }
    Polynomial acc = parse_term().scaled(Rational(sign));
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = parse_term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_factor();
      } else if (starts_factor()) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (peek() == '^') {
      ++pos_;
      long e = parse_nat();
      if (e > 64) throw ParseError(pos_, "exponent too large");
      Polynomial pow = Polynomial::constant(vars_, Rational(1));
      for (long i = 0; i < e; ++i) pow = pow * base;
      return pow;
    }
    return base;
  }

  Polynomial parse_base() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_expr();
      if (peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_nat();
      if (peek() == '/') {
        ++pos_;
        long den = parse_nat();
        if (den == 0) throw ParseError(pos_, "zero denominator");
        return Polynomial::constant(vars_, make_rational(num, den));
      }
      return Polynomial::constant(vars_, Rational(num));
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(pos_, "expected variable index after 'x'");
      long idx = parse_nat();
      if (idx >= vars_)
        throw ParseError(at, "variable x" + std::to_string(idx) + " out of range for ring with " +
                                 std::to_string(vars_) + " variables");
      return Polynomial::variable(vars_, static_cast<int>(idx));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        name.push_back(text_[pos_++]);
      throw ParseError(at, "unknown variable '" + name + "' (variables are x0..x" +
                               std::to_string(vars_ - 1) + ")");
    }
    throw ParseError(pos_, "expected a coefficient, a variable, or '('");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int vars) {
  if (vars <= 0) throw DomainError("ring needs at least one variable");
  return Parser(text, vars).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += to_string(a);
    } else if (a == 1) {
      out += to_string(m);
    } else {
      out += to_string(a) + "*" + to_string(m);
    }
  }
  return out;
}

}  // namespace stabforge
