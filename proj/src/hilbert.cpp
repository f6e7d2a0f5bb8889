#include "stabforge/hilbert.hpp"

#include <algorithm>

namespace stabforge {

int NumericalPolynomial::degree() const { return static_cast<int>(coefficients.size()) - 1; }

Rational NumericalPolynomial::lead() const {
  if (coefficients.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coefficients.back();
}

Rational NumericalPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients.size())) return Rational(0);
  return coefficients[static_cast<std::size_t>(k)];
}

Rational NumericalPolynomial::eval(long m) const {
  Rational acc(0);
  Rational x(m);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const NumericalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "m" : "m^" + std::to_string(k));
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

namespace {

void trim(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// coeffs(m) *= (m - a)
void mul_linear(std::vector<Rational>& coeffs, long a) {
  std::vector<Rational> out(coeffs.size() + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out[k + 1] += coeffs[k];
    out[k] -= Rational(a) * coeffs[k];
  }
  coeffs = std::move(out);
}

// Unique interpolant through (m0 + i, values[i]) by Newton forward
// differences, as a monomial-basis coefficient vector.
std::vector<Rational> newton_interpolate(long m0, const std::vector<Rational>& values) {
  std::vector<Rational> diff = values;  // row j of the difference table
  std::vector<Rational> result;
  std::vector<Rational> basis{Rational(1)};  // prod_{i<j} (m - m0 - i)
  Integer jfact(1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    Rational coeff = diff[0] / Rational(jfact);
    if (result.size() < basis.size()) result.resize(basis.size(), Rational(0));
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += coeff * basis[k];
    // advance: next difference row, next falling-factorial basis
    if (j + 1 < values.size()) {
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      diff.pop_back();
      mul_linear(basis, m0 + static_cast<long>(j));
      jfact *= static_cast<long>(j + 1);
    }
  }
  trim(result);
  return result;
}

}  // namespace

NumericalPolynomial fit_numerical_polynomial(const std::function<Rational(long)>& f,
                                             int degree_bound, long m_cap) {
  const int window = degree_bound + 2;  // one redundant value inside the window
  for (long m0 = 1; m0 + window + 2 <= m_cap; ++m0) {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) values.push_back(f(m0 + i));
    std::vector<Rational> coeffs = newton_interpolate(m0, values);
    if (static_cast<int>(coeffs.size()) - 1 > degree_bound) continue;
    NumericalPolynomial p{std::move(coeffs), m0};
    bool confirmed = true;
    for (int i = 0; i < 3 && confirmed; ++i) {
      long m = m0 + window + i;
      confirmed = p.eval(m) == f(m);
    }
    if (confirmed) return p;
  }
  throw RegularityError("regularity not reached within m-cap " + std::to_string(m_cap));
}

Staircase::Staircase(int vars, std::vector<Monomial> minimal_generators) : vars_(vars) {
  for (auto& g : minimal_generators) {
    if (g.vars() != vars_) throw RingMismatchError("staircase generator from a different ring");
    bool redundant = false;
    for (const auto& h : gens_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    std::erase_if(gens_, [&](const Monomial& h) { return divides(g, h); });
    gens_.push_back(std::move(g));
  }
}

Staircase Staircase::of_ideal(const Ideal& ideal, const MonomialOrder& ord, const Budget& budget) {
  std::vector<Monomial> lms;
  if (!ideal.is_zero()) {
    GroebnerBasis gb = buchberger(ideal, ord, budget);
    lms.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lms.push_back(g.leading_monomial(ord));
  }
  return Staircase(ideal.vars(), std::move(lms));
}

bool Staircase::contains(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

namespace {

// Degree tail of a monomial from coordinate j on.
long tail_degree(const Monomial& g, int j) {
  long s = 0;
  for (int i = j; i < g.vars(); ++i) s += g.exponents[i];
  return s;
}

}  // namespace

// visit(prefix_weight_applied): the walk calls visit(j, rem, prefix) at
// free-subtree shortcuts and leaves; implemented privately per consumer.
template <typename Visit>
void Staircase::walk_standard(long m, Visit&& visit) const {
  // alive: generator indices that could still divide a completion.
  std::vector<int> alive(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) alive[i] = static_cast<int>(i);
  Monomial prefix = Monomial::one(vars_);

  auto rec = [&](auto&& self, int j, long rem, const std::vector<int>& act) -> void {
    // Any active generator wholly inside the prefix kills the subtree.
    for (int gi : act)
      if (tail_degree(gens_[gi], j) == 0) return;
    if (act.empty()) {
      visit(j, rem, prefix);  // whole free subtree is standard
      return;
    }
    if (j == vars_ - 1) {
      prefix.exponents[j] = static_cast<int>(rem);
      bool dominated = false;
      for (int gi : act)
        if (gens_[gi].exponents[j] <= rem) {
          dominated = true;
          break;
        }
      if (!dominated) visit(vars_, 0, prefix);
      prefix.exponents[j] = 0;
      return;
    }
    for (long e = 0; e <= rem; ++e) {
      prefix.exponents[j] = static_cast<int>(e);
      std::vector<int> next;
      next.reserve(act.size());
      for (int gi : act) {
        const Monomial& g = gens_[gi];
        if (g.exponents[j] <= e && tail_degree(g, j + 1) <= rem - e) next.push_back(gi);
      }
      self(self, j + 1, rem - e, next);
    }
    prefix.exponents[j] = 0;
  };
  if (vars_ == 0) return;
  rec(rec, 0, m, alive);
}

std::int64_t Staircase::count_standard(long m) const {
  if (m < 0) throw DomainError("negative degree");
  Integer total(0);
  walk_standard(m, [&](int j, long rem, const Monomial&) {
    int t = vars_ - j;
    if (t == 0)
      total += 1;
    else
      total += binomial(rem + t - 1, t - 1);
  });
  if (!total.fits_slong_p()) throw BudgetExhaustedError("standard monomial count overflow");
  return static_cast<std::int64_t>(total.get_si());
}

Integer Staircase::weight_sum_standard(long m, const OnePSG& w) const {
  if (w.vars() != vars_) throw RingMismatchError("weight vector length does not match ring");
  if (m < 0) throw DomainError("negative degree");
  Integer total(0);
  walk_standard(m, [&](int j, long rem, const Monomial& prefix) {
    int t = vars_ - j;
    Integer prefix_weight(0);
    for (int i = 0; i < j; ++i) prefix_weight += Integer(w.weights[i]) * prefix.exponents[i];
    if (t == 0) {
      total += prefix_weight;
      return;
    }
    // Over all weak compositions of rem into t parts, each coordinate sums
    // to C(rem + t - 1, t).
    Integer count = binomial(rem + t - 1, t - 1);
    Integer per_coord = binomial(rem + t - 1, t);
    Integer free_weight(0);
    for (int i = j; i < vars_; ++i) free_weight += Integer(w.weights[i]);
    total += prefix_weight * count + free_weight * per_coord;
  });
  return total;
}

std::int64_t hilbert_function(const Ideal& ideal, long m, const Budget& budget) {
  if (m < 0) throw DomainError("hilbert_function needs m >= 0");
  return Staircase::of_ideal(ideal, MonomialOrder::grevlex(), budget).count_standard(m);
}

HilbertData hilbert_polynomial(const Ideal& ideal, long m_cap, const Budget& budget) {
  Staircase st = Staircase::of_ideal(ideal, MonomialOrder::grevlex(), budget);
  NumericalPolynomial P = fit_numerical_polynomial(
      [&](long m) { return Rational(Integer(st.count_standard(m))); }, ideal.vars() - 1, m_cap);
  if (P.degree() < 1)
    throw DomainError("hilbert_polynomial requires a positive-dimensional zero set");
  int n = P.degree();
  Rational lead = P.lead();
  Rational dq = Rational(factorial(n)) * lead;
  if (dq.get_den() != 1 || dq <= 0)
    throw DomainError("degree n! * lead(P) is not a positive integer");
  Integer d = dq.get_num();
  Rational b_sub = P.coefficient(n - 1);
  Rational mu = Rational(2) * Rational(factorial(n)) * b_sub / Rational(d);
  return HilbertData{std::move(P), n, d, lead, b_sub, mu};
}

Integer weight_function(const Ideal& ideal, const OnePSG& w, long m, const Budget& budget) {
  Staircase st = Staircase::of_ideal(ideal, MonomialOrder::weighted(w), budget);
  return st.weight_sum_standard(m, w);
}

WeightPolynomial weight_polynomial(const Ideal& ideal, const OnePSG& w, long m_cap,
                                   const Budget& budget) {
  HilbertData hd = hilbert_polynomial(ideal, m_cap, budget);
  Staircase st = Staircase::of_ideal(ideal, MonomialOrder::weighted(w), budget);
  NumericalPolynomial W = fit_numerical_polynomial(
      [&](long m) { return Rational(st.weight_sum_standard(m, w)); }, hd.n + 1, m_cap);
  return WeightPolynomial{W, hd.n, W.coefficient(hd.n + 1), W.coefficient(hd.n)};
}

Rational donaldson_futaki(const Ideal& ideal, const OnePSG& w, long m_cap, const Budget& budget) {
  HilbertData hd = hilbert_polynomial(ideal, m_cap, budget);
  WeightPolynomial wp = weight_polynomial(ideal, w, m_cap, budget);
  return Rational(factorial(hd.n)) / (Rational(2) * Rational(hd.d)) *
         (Rational(2) * wp.a_sub - hd.mu * wp.a_top);
}

long hm_slope(const std::vector<long>& weights, const std::vector<char>& support) {
  if (weights.size() != support.size()) throw RingMismatchError("support length mismatch");
  bool seen = false;
  long best = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!support[i]) continue;
    long v = -weights[i];
    if (!seen || v > best) best = v;
    seen = true;
  }
  if (!seen) throw DomainError("slope of the zero vector (empty support)");
  return best;
}

Rational chow_slope_via_hilbert(const WeightPolynomial& wp, int n) {
  return Rational(-factorial(n + 1)) * wp.a_top;
}

Rational cm_weight(int n, const Rational& nu1, const Rational& chow_w, const Rational& fD_w) {
  return nu1 * chow_w - Rational(n + 1) * fD_w;
}

int projective_dimension(const Ideal& ideal, long m_cap, const Budget& budget) {
  Staircase st = Staircase::of_ideal(ideal, MonomialOrder::grevlex(), budget);
  NumericalPolynomial P = fit_numerical_polynomial(
      [&](long m) { return Rational(Integer(st.count_standard(m))); }, ideal.vars() - 1, m_cap);
  return P.is_zero() ? -1 : P.degree();
}

}  // namespace stabforge
