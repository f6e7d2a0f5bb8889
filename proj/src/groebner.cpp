#include "stabforge/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stabforge {

namespace {

void check_term_budget(const Polynomial& p, const Budget& budget) {
  if (static_cast<long>(p.term_count()) > budget.max_terms)
    throw BudgetExhaustedError("polynomial size exceeded budget (max_terms=" +
                               std::to_string(budget.max_terms) + ")");
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, const Budget& budget) {
  Polynomial rem(p.vars());
  Polynomial work = p;
  std::vector<std::pair<Monomial, Rational>> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(g.leading_term(ord));
  while (!work.is_zero()) {
    auto [lm, lc] = work.leading_term(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lts[i].first, lm)) continue;
      Monomial q = mono_div(lm, lts[i].first);
      work -= basis[i].mono_scaled(q, lc / lts[i].second);
      check_term_budget(work, budget);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  auto [lmf, lcf] = f.leading_term(ord);
  auto [lmg, lcg] = g.leading_term(ord);
  Monomial l = mono_lcm(lmf, lmg);
  return f.mono_scaled(mono_div(l, lmf), Rational(1) / lcf) -
         g.mono_scaled(mono_div(l, lmg), Rational(1) / lcg);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, const Budget& budget) {
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) {
    Polynomial r = normal_form(g, basis, ord, budget);
    if (!r.is_zero()) basis.push_back(r.scaled(Rational(1) / r.leading_term(ord).second));
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending, processed;
  auto add_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_with(j);

  auto lm = [&](std::size_t i) { return basis[i].leading_monomial(ord); };
  auto pick_pair = [&]() {
    // Normal selection: smallest lcm degree, ties by the order, then index.
    auto best = pending.begin();
    Monomial best_l = mono_lcm(lm(best->first), lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = mono_lcm(lm(it->first), lm(it->second));
      long dl = l.degree(), db = best_l.degree();
      if (dl < db || (dl == db && compare(l, best_l, ord) < 0)) {
        best = it;
        best_l = l;
      }
    }
    Pair p = *best;
    pending.erase(best);
    return p;
  };

  long pairs_done = 0;
  while (!pending.empty()) {
    if (++pairs_done > budget.max_pairs)
      throw BudgetExhaustedError("S-pair budget exhausted (max_pairs=" +
                                 std::to_string(budget.max_pairs) + ")");
    auto [i, j] = pick_pair();
    processed.insert({i, j});
    Monomial lij = mono_lcm(lm(i), lm(j));
    if (mono_coprime(lm(i), lm(j))) continue;  // product criterion
    bool chained = false;                      // chain criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!divides(lm(k), lij)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (processed.count(ik) && processed.count(jk)) chained = true;
    }
    if (chained) continue;
    Polynomial r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord, budget);
    if (r.is_zero()) continue;
    basis.push_back(r.scaled(Rational(1) / r.leading_term(ord).second));
    add_pairs_with(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another divides.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial li = basis[i].leading_monomial(ord);
      const Monomial lj = basis[j].leading_monomial(ord);
      if (!divides(lj, li)) continue;
      // Equal leading monomials: keep only the earlier copy.
      redundant = !(li == lj) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails for the unique reduced basis.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others, ord, budget);
    reduced.push_back(r.scaled(Rational(1) / r.leading_term(ord).second));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(ord), b.leading_monomial(ord), ord) > 0;
  });
  return GroebnerBasis{std::move(reduced), ord, true};
}

bool verify_buchberger_certificate(const GroebnerBasis& gb, const Budget& budget) {
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
      Polynomial s = s_polynomial(gb.elements[i], gb.elements[j], gb.order);
      if (!normal_form(s, gb.elements, gb.order, budget).is_zero()) return false;
    }
  return true;
}

Polynomial initial_form(const Polynomial& f, const OnePSG& w) {
  if (f.is_zero()) throw DomainError("initial form of the zero polynomial");
  if (f.vars() != w.vars()) throw RingMismatchError("weight vector length does not match ring");
  long best = 0;
  bool have = false;
  for (const auto& [m, c] : f.terms()) {
    long wt = monomial_weight(m, w);
    if (!have || wt > best) {
      best = wt;
      have = true;
    }
  }
  Polynomial r(f.vars());
  for (const auto& [m, c] : f.terms())
    if (monomial_weight(m, w) == best) r.add_term(m, c);
  return r;
}

Ideal initial_ideal(const Ideal& ideal, const OnePSG& w, const Budget& budget) {
  if (ideal.vars() != w.vars()) throw RingMismatchError("weight vector length does not match ring");
  if (ideal.is_zero()) return Ideal(ideal.vars());
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::weighted(w), budget);
  std::vector<Polynomial> gens;
  gens.reserve(gb.elements.size());
  for (const auto& g : gb.elements) gens.push_back(initial_form(g, w));
  return Ideal(ideal.vars(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const std::vector<char>& keep, const Budget& budget) {
  if (static_cast<int>(keep.size()) != ideal.vars())
    throw RingMismatchError("keep mask length does not match ring");
  std::vector<char> elim(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) elim[i] = keep[i] ? 0 : 1;
  if (ideal.is_zero()) return Ideal(ideal.vars());
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(elim), budget);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements) {
    bool pure = true;
    for (const auto& [m, c] : g.terms())
      for (int i = 0; i < ideal.vars() && pure; ++i)
        if (elim[i] && m.exponents[i] != 0) pure = false;
    if (pure) kept.push_back(g);
  }
  return Ideal(ideal.vars(), std::move(kept));
}

bool ideal_equals(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (a.vars() != b.vars()) throw RingMismatchError("ideal comparison across rings");
  MonomialOrder ord = MonomialOrder::grevlex();
  return buchberger(a, ord, budget).elements == buchberger(b, ord, budget).elements;
}

namespace {

// Coefficient of x_var^k in f, as a polynomial with x_var stripped out.
Polynomial coefficient_of_power(const Polynomial& f, int var, int k) {
  Polynomial r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m.exponents[var] != k) continue;
    Monomial mm = m;
    mm.exponents[var] = 0;
    r.add_term(mm, c);
  }
  return r;
}

// Determinant by expansion along columns, memoized on the set of unused
// rows. Sylvester matrices at the target scale are small.
class SylvesterDet {
public:
  SylvesterDet(std::vector<std::vector<Polynomial>> m, int vars)
      : m_(std::move(m)), n_(m_.size()), vars_(vars) {}

  Polynomial run() { return det(full_mask()); }

private:
  std::vector<std::vector<Polynomial>> m_;
  std::size_t n_;
  int vars_;
  std::map<unsigned long, Polynomial> memo_;

  unsigned long full_mask() const { return (1ul << n_) - 1ul; }

  Polynomial det(unsigned long rows) {
    if (rows == 0) return Polynomial::constant(vars_, Rational(1));
    auto it = memo_.find(rows);
    if (it != memo_.end()) return it->second;
    std::size_t col = n_ - static_cast<std::size_t>(__builtin_popcountl(rows));
    Polynomial acc(vars_);
    int sign = 1;
    for (std::size_t r = 0; r < n_; ++r) {
      if (!(rows & (1ul << r))) continue;
      if (!m_[r][col].is_zero()) {
        Polynomial sub = det(rows & ~(1ul << r));
        Polynomial contrib = m_[r][col] * sub;
        acc += sign > 0 ? contrib : -contrib;
      }
      sign = -sign;
    }
    memo_.emplace(rows, acc);
    return acc;
  }
};

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, int var) {
  if (f.vars() != g.vars()) throw RingMismatchError("resultant across rings");
  if (var < 0 || var >= f.vars()) throw DomainError("resultant variable out of range");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  auto degree_in = [&](const Polynomial& p) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponents[var]);
    return d;
  };
  int p = degree_in(f), q = degree_in(g);
  if (p == 0 && q == 0)
    throw DomainError("both inputs constant in the elimination variable");
  std::size_t n = static_cast<std::size_t>(p + q);
  std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n, Polynomial(f.vars())));
  for (int row = 0; row < q; ++row)
    for (int k = 0; k <= p; ++k) mat[row][row + (p - k)] = coefficient_of_power(f, var, k);
  for (int row = 0; row < p; ++row)
    for (int k = 0; k <= q; ++k) mat[q + row][row + (q - k)] = coefficient_of_power(g, var, k);
  return SylvesterDet(std::move(mat), f.vars()).run();
}

}  // namespace stabforge
