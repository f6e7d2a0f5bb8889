#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stabforge/groebner.hpp"

namespace stabforge {

// Rational-coefficient polynomial in m, constant term first, known to take
// integer values at every integer >= claimed_from.
struct NumericalPolynomial {
  std::vector<Rational> coefficients;  // trimmed: no trailing zeros
  long claimed_from = 0;

  int degree() const;  // -1 for the zero polynomial
  Rational lead() const;
  Rational coefficient(int k) const;  // 0 beyond the stored degree
  Rational eval(long m) const;
  bool is_zero() const { return coefficients.empty(); }

  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;
};

std::string to_string(const NumericalPolynomial& p);  // e.g. "3*m + 1"

// Hilbert polynomial P with the extracted geometric data:
// n = deg P, d = n! * lead(P), mP(m) = b_top m^{n+1} + b_sub m^n + ...,
// mu = 2 n! b_sub / d (the average scalar curvature).
struct HilbertData {
  NumericalPolynomial P;
  int n = 0;
  Integer d;
  Rational b_top;
  Rational b_sub;
  Rational mu;
};

// Weight polynomial W(m) = w_lambda(Hilb_m) with its two top coefficients
// a_top = a_{n+1}, a_sub = a_n.
struct WeightPolynomial {
  NumericalPolynomial W;
  int n = 0;
  Rational a_top;
  Rational a_sub;
};

// Degree-m standard-monomial counting for a monomial staircase, by direct
// enumeration with divisibility pruning.
class Staircase {
public:
  Staircase(int vars, std::vector<Monomial> minimal_generators);

  // Leading monomials of a reduced GB of the ideal under `ord`.
  static Staircase of_ideal(const Ideal& ideal, const MonomialOrder& ord, const Budget& budget);

  int vars() const { return vars_; }
  bool contains(const Monomial& m) const;
  std::int64_t count_standard(long m) const;
  Integer weight_sum_standard(long m, const OnePSG& w) const;

private:
  int vars_;
  std::vector<Monomial> gens_;

  template <typename Visit>
  void walk_standard(long m, Visit&& visit) const;
};

// dim_Q of the degree-m piece of S/I (standard monomials of the grevlex
// initial ideal).
std::int64_t hilbert_function(const Ideal& ideal, long m, const Budget& budget = {});

// Interpolates hilbert_function with stabilization detection.
HilbertData hilbert_polynomial(const Ideal& ideal, long m_cap = 40, const Budget& budget = {});

// Total lambda-weight of the degree-m standard monomials of the initial
// ideal of in_w(I) under the weight-refined order.
Integer weight_function(const Ideal& ideal, const OnePSG& w, long m, const Budget& budget = {});

WeightPolynomial weight_polynomial(const Ideal& ideal, const OnePSG& w, long m_cap = 40,
                                   const Budget& budget = {});

// Donaldson's generalized Futaki invariant F1 = (n!/2d)(2 a_n - mu a_{n+1}).
Rational donaldson_futaki(const Ideal& ideal, const OnePSG& w, long m_cap = 40,
                          const Budget& budget = {});

// Hilbert-Mumford slope of a vector with the given support:
// Max{-m_i | v_i != 0}.
long hm_slope(const std::vector<long>& weights, const std::vector<char>& support);

// Chow-point slope of X under lambda in this library's normalization:
// -(n+1)! a_{n+1}. Calibrated so hypersurfaces reproduce mu(lambda, f).
Rational chow_slope_via_hilbert(const WeightPolynomial& wp, int n);

// Right-hand side of the reduced-limit weight identity:
// w(L_CM^{-1}) = nu1 * w(Chow) - (n+1) * w(f_D).
Rational cm_weight(int n, const Rational& nu1, const Rational& chow_w, const Rational& fD_w);

// Dimension of the projective zero set: deg of the Hilbert polynomial of
// S/I, or -1 when the zero set is empty.
int projective_dimension(const Ideal& ideal, long m_cap = 40, const Budget& budget = {});

// Shared stabilization-fitting loop: fits values of `f` at consecutive
// integers to a polynomial of degree <= degree_bound, accepting once three
// further values are predicted exactly. Throws RegularityError past m_cap.
NumericalPolynomial fit_numerical_polynomial(const std::function<Rational(long)>& f,
                                             int degree_bound, long m_cap);

}  // namespace stabforge
