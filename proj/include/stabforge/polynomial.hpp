#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabforge/monomial.hpp"
#include "stabforge/rational.hpp"

namespace stabforge {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored grevlex-descending; no zero coefficient is ever kept,
// so printing is canonical and equality is structural.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(int vars) : vars_(vars) {}
  static Polynomial zero(int vars) { return Polynomial(vars); }
  static Polynomial constant(int vars, const Rational& c);
  static Polynomial variable(int vars, int i);
  static Polynomial term(int vars, Monomial m, const Rational& c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  long degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_monic(const MonomialOrder& ord) const;

  void add_term(const Monomial& m, const Rational& c);

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial mono_scaled(const Monomial& m, const Rational& c) const;  // c * x^m * this

  Polynomial derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // f(A x): columns of A give the image of each variable.
  Polynomial substitute_linear(const std::vector<std::vector<Rational>>& a) const;

  // Re-index into the ring on keep.size() variables; every dropped
  // variable must have exponent zero in every term.
  Polynomial restrict_variables(const std::vector<int>& keep) const;

  std::vector<Monomial> support() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  int vars_;
  TermMap terms_;
};

// Grammar (documented in docs/polynomial-grammar.md):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' nat)?
//   base   := nat ('/' nat)? | 'x' nat | '(' expr ')'
Polynomial parse_polynomial(std::string_view text, int vars);

std::string to_string(const Polynomial& p);

}  // namespace stabforge
