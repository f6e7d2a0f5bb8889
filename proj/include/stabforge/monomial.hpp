#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "stabforge/errors.hpp"
#include "stabforge/rational.hpp"

namespace stabforge {

// Exponent vector over the projective coordinates x0..x{N}. Dense: the
// target problems have at most a handful of variables.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

  int vars() const { return static_cast<int>(exponents.size()); }
  long degree() const;
  bool is_one() const { return degree() == 0; }
  int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m);  // "x0*x2", "x1^2", "1"

// Diagonalized one-parameter subgroup diag(t^{m_0}, ..., t^{m_N}).
struct OnePSG {
  std::vector<long> weights;

  OnePSG() = default;
  explicit OnePSG(std::vector<long> w) : weights(std::move(w)) {}
  static OnePSG zero(int vars) { return OnePSG(std::vector<long>(vars, 0)); }

  int vars() const { return static_cast<int>(weights.size()); }
  long trace() const;
  bool traceless() const { return trace() == 0; }
  bool is_zero() const;

  friend bool operator==(const OnePSG&, const OnePSG&) = default;
};

// <w, exponents(m)>
long monomial_weight(const Monomial& m, const OnePSG& w);

enum class OrderKind {
  grevlex,
  lex,
  weight_refined,  // by <w,a> descending, ties broken by grevlex
  elim_block,      // eliminated block grevlex-first, then kept block grevlex
};

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  OnePSG weight;                // weight_refined only
  std::vector<char> eliminate;  // elim_block only; 1 = variable to eliminate

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, {}, {}}; }
  static MonomialOrder weighted(OnePSG w) { return {OrderKind::weight_refined, std::move(w), {}}; }
  static MonomialOrder elimination(std::vector<char> mask) {
    return {OrderKind::elim_block, {}, std::move(mask)};
  }
};

// Total order on monomials of equal degree (and a term order on all
// monomials for grevlex/lex). Returns <0, 0, >0 for a < b, a == b, a > b.
int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

// Fixed grevlex-descending comparator used for canonical term storage.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace stabforge
