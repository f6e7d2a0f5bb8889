#pragma once

#include <vector>

#include "stabforge/ideal.hpp"

namespace stabforge {

// Resource caps for Groebner computations. Hitting a cap raises
// BudgetExhaustedError; the engine never degrades to a wrong answer.
struct Budget {
  long max_pairs = 20000;   // S-pairs processed
  long max_terms = 200000;  // terms of any intermediate polynomial
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // monic, sorted by leading monomial descending
  MonomialOrder order;
  bool reduced = false;
};

// Reduced Groebner basis via Buchberger with the product and chain
// pair-elimination criteria. Requires homogeneous generators; the
// weight-refined and block orders are term orders degree by degree,
// which homogeneity makes sufficient.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const Budget& budget = {});

// Full normal form (every term reduced) against the given polynomials.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, const Budget& budget = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Direct certificate: every S-polynomial of basis pairs reduces to zero.
bool verify_buchberger_certificate(const GroebnerBasis& gb, const Budget& budget = {});

// Sum of the terms of maximal <w, alpha>; the flat limit of lambda(t)X as
// t -> 0 is cut out by these.
Polynomial initial_form(const Polynomial& f, const OnePSG& w);

// in_w(I), generated by initial forms of a Groebner basis under the
// weight-refined order. w-homogeneous; non-monomial when weights tie.
Ideal initial_ideal(const Ideal& ideal, const OnePSG& w, const Budget& budget = {});

// I intersected with the subring on the kept variables (block-order GB).
// The result lives in the same ring; generators involve kept variables only.
Ideal eliminate(const Ideal& ideal, const std::vector<char>& keep, const Budget& budget = {});

// Equality as ideals, decided by comparing reduced grevlex bases.
bool ideal_equals(const Ideal& a, const Ideal& b, const Budget& budget = {});

// Sylvester resultant of f and g with respect to variable `var`.
Polynomial resultant(const Polynomial& f, const Polynomial& g, int var);

// True iff in_w(f) is squarefree, decided by the projective dimension of
// the Jacobian scheme of in_w(f): a reduced hypersurface has singular
// locus of dimension <= n-1, a repeated factor forces dimension n.
// (Defined in multiplicity.cpp; leans on the Hilbert machinery.)
bool is_multiplicity_free(const Polynomial& f, const OnePSG& w, const Budget& budget = {},
                          long m_cap = 40);

}  // namespace stabforge
