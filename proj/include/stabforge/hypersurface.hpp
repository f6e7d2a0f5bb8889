#pragma once

#include <vector>

#include "stabforge/groebner.hpp"
#include "stabforge/hilbert.hpp"

namespace stabforge {

// Concave piecewise-linear function on [0, inf): finitely many pieces with
// strictly decreasing integer slopes, continuous, last piece unbounded.
class PLFunction {
public:
  struct Piece {
    Rational start;
    long slope;
    Rational value_at_start;
  };

  explicit PLFunction(std::vector<Piece> pieces);

  // Lower envelope min_j (intercept_j + slope_j * r), restricted to [0, inf).
  static PLFunction lower_envelope(const std::vector<std::pair<Rational, long>>& lines);

  const std::vector<Piece>& pieces() const { return pieces_; }
  long eventual_slope() const { return pieces_.back().slope; }
  Rational eval(const Rational& r) const;

  // Exact integral over [0, inf) of psi'(psi' - 1); finite iff the eventual
  // slope is 0 or 1, otherwise DivergentIntegralError.
  Rational slope_defect_integral() const;

private:
  std::vector<Piece> pieces_;
};

// A hypersurface {f = 0} of degree d in P^{n+1} together with a traceless
// one-parameter subgroup.
struct HypersurfaceProblem {
  Polynomial f;
  OnePSG w;
  long d = 0;
  int n = 0;

  HypersurfaceProblem(Polynomial f_, OnePSG w_);
};

// mu(lambda, f) = Max(m_0 i_0 + ... + m_{n+1} i_{n+1} : A_{i} != 0).
long hypersurface_slope(const HypersurfaceProblem& p);

// psi_i(r): lower envelope over the support of f of the affine functions
// r |-> -<w, alpha> + alpha_i * r.
PLFunction psi_profile(const HypersurfaceProblem& p, int i);

Rational lu_integral(const PLFunction& psi);

// (2/d) (mu(lambda, f) (n+2)(d-1)/(n+1) - sum_i int psi_i'(psi_i'-1) dr).
Rational lu_slope(const HypersurfaceProblem& p);

// (2/d) ((2d + mu_X/(n+1) - (n+2)) slope_RX - slope_fD).
Rational refined_futaki(long d, int n, const Rational& mu_X, const Rational& slope_RX,
                        const Rational& slope_fD);

// 2d + n(n+2-d)/(n+1) - (n+2) == (n+2)(d-1)/(n+1), exactly.
bool coefficient_identity_check(long d, int n);

// Coefficient of log t in the Mabuchi energy asymptotics: the negated
// refined Futaki invariant. Requires a multiplicity-free degeneration.
Rational mabuchi_coefficient(const HypersurfaceProblem& p, const Rational& slope_fD,
                             long m_cap = 40, const Budget& budget = {});

}  // namespace stabforge
