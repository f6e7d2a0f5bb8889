#include "stabforge/hypersurface.hpp"

#include <algorithm>
#include <map>

namespace stabforge {

PLFunction::PLFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("piecewise-linear function needs at least one piece");
  if (pieces_.front().start != 0) throw DomainError("domain must start at 0");
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const Piece& a = pieces_[i - 1];
    const Piece& b = pieces_[i];
    if (b.start <= a.start) throw DomainError("piece starts must increase");
    if (b.slope >= a.slope) throw DomainError("slopes must strictly decrease (concavity)");
    Rational expected = a.value_at_start + Rational(a.slope) * (b.start - a.start);
    if (expected != b.value_at_start) throw DomainError("pieces must join continuously");
  }
}

PLFunction PLFunction::lower_envelope(const std::vector<std::pair<Rational, long>>& lines) {
  if (lines.empty()) throw DomainError("envelope of an empty line family");
  // Per slope only the lowest intercept can appear in a min-envelope.
  std::map<long, Rational> best;
  for (const auto& [c, s] : lines) {
    auto it = best.find(s);
    if (it == best.end() || c < it->second) best[s] = c;
  }
  struct Active {
    Rational c;
    long s;
    Rational start;  // where this line becomes the envelope
  };
  std::vector<Active> env;
  // Highest slope is minimal near -inf; scan slopes descending.
  for (auto it = best.rbegin(); it != best.rend(); ++it) {
    Rational c = it->second;
    long s = it->first;
    while (!env.empty()) {
      const Active& top = env.back();
      // top.s > s, so the new line overtakes at the crossing point.
      Rational cross = (c - top.c) / Rational(top.s - s);
      if (cross <= top.start) {
        env.pop_back();
        continue;
      }
      env.push_back({c, s, cross});
      break;
    }
    if (env.empty()) env.push_back({c, s, Rational(0)});  // placeholder start
  }
  // Clip to [0, inf).
  std::size_t first = 0;
  for (std::size_t i = env.size(); i-- > 0;) {
    if (env[i].start <= 0) {
      first = i;
      break;
    }
  }
  std::vector<Piece> pieces;
  for (std::size_t i = first; i < env.size(); ++i) {
    Rational start = i == first ? Rational(0) : env[i].start;
    Rational value = env[i].c + Rational(env[i].s) * start;
    pieces.push_back({start, env[i].s, value});
  }
  return PLFunction(std::move(pieces));
}

Rational PLFunction::eval(const Rational& r) const {
  if (r < 0) throw DomainError("evaluation outside [0, inf)");
  std::size_t i = pieces_.size() - 1;
  while (i > 0 && pieces_[i].start > r) --i;
  return pieces_[i].value_at_start + Rational(pieces_[i].slope) * (r - pieces_[i].start);
}

Rational PLFunction::slope_defect_integral() const {
  long s_inf = eventual_slope();
  if (s_inf != 0 && s_inf != 1)
    throw DivergentIntegralError(
        "divergent: initial data non-reduced along coordinate hyperplane (eventual slope " +
        std::to_string(s_inf) + ")");
  Rational total(0);
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    Rational len = pieces_[i + 1].start - pieces_[i].start;
    long s = pieces_[i].slope;
    total += Rational(s) * Rational(s - 1) * len;
  }
  return total;
}

HypersurfaceProblem::HypersurfaceProblem(Polynomial f_, OnePSG w_)
    : f(std::move(f_)), w(std::move(w_)) {
  if (f.is_zero()) throw DomainError("hypersurface needs a nonzero polynomial");
  if (!f.is_homogeneous()) throw DomainError("hypersurface needs a homogeneous polynomial");
  if (f.vars() != w.vars()) throw RingMismatchError("weight vector length does not match ring");
  if (f.vars() < 2) throw DomainError("hypersurface needs at least two coordinates");
  if (!w.traceless())
    throw DomainError("slope operations need a traceless weight (sum m_i = 0)");
  d = f.degree();
  n = f.vars() - 2;
}

long hypersurface_slope(const HypersurfaceProblem& p) {
  long best = 0;
  bool have = false;
  for (const auto& m : p.f.support()) {
    long wt = monomial_weight(m, p.w);
    if (!have || wt > best) {
      best = wt;
      have = true;
    }
  }
  return best;
}

PLFunction psi_profile(const HypersurfaceProblem& p, int i) {
  if (i < 0 || i >= p.f.vars()) throw DomainError("psi index out of range");
  std::vector<std::pair<Rational, long>> lines;
  for (const auto& m : p.f.support())
    lines.emplace_back(Rational(-monomial_weight(m, p.w)), m.exponents[i]);
  return PLFunction::lower_envelope(lines);
}

Rational lu_integral(const PLFunction& psi) { return psi.slope_defect_integral(); }

Rational lu_slope(const HypersurfaceProblem& p) {
  Rational correction(0);
  for (int i = 0; i < p.f.vars(); ++i) correction += lu_integral(psi_profile(p, i));
  Rational main = Rational(hypersurface_slope(p)) * Rational((p.n + 2) * (p.d - 1)) /
                  Rational(p.n + 1);
  return Rational(2) / Rational(p.d) * (main - correction);
}

Rational refined_futaki(long d, int n, const Rational& mu_X, const Rational& slope_RX,
                        const Rational& slope_fD) {
  if (d < 1 || n < 1) throw DomainError("refined Futaki needs d >= 1 and n >= 1");
  Rational coeff = Rational(2 * d) + mu_X / Rational(n + 1) - Rational(n + 2);
  return Rational(2) / Rational(d) * (coeff * slope_RX - slope_fD);
}

bool coefficient_identity_check(long d, int n) {
  Rational mu = Rational(static_cast<long>(n) * (n + 2 - d));
  Rational lhs = Rational(2 * d) + mu / Rational(n + 1) - Rational(n + 2);
  Rational rhs = Rational(static_cast<long>(n + 2) * (d - 1)) / Rational(n + 1);
  return lhs == rhs;
}

Rational mabuchi_coefficient(const HypersurfaceProblem& p, const Rational& slope_fD, long m_cap,
                             const Budget& budget) {
  if (!is_multiplicity_free(p.f, p.w, budget, m_cap))
    throw MultipleFibersError("multiple fibers: asymptotic formula not applicable");
  HilbertData hd = hilbert_polynomial(Ideal(p.f.vars(), {p.f}), m_cap, budget);
  Rational re = refined_futaki(p.d, p.n, hd.mu, Rational(hypersurface_slope(p)), slope_fD);
  return -re;
}

}  // namespace stabforge
