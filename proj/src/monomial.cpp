#include "stabforge/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace stabforge {

long Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0L);
}

static void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw RingMismatchError("monomials from different rings");
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r = a;
  for (int i = 0; i < a.vars(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw DomainError("monomial quotient is not polynomial");
  Monomial r = b;
  for (int i = 0; i < b.vars(); ++i) r.exponents[i] -= a.exponents[i];
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r = a;
  for (int i = 0; i < a.vars(); ++i) r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  for (int i = 0; i < a.vars(); ++i)
    if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
  return true;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

long OnePSG::trace() const {
  return std::accumulate(weights.begin(), weights.end(), 0L);
}

bool OnePSG::is_zero() const {
  return std::all_of(weights.begin(), weights.end(), [](long w) { return w == 0; });
}

long monomial_weight(const Monomial& m, const OnePSG& w) {
  if (m.vars() != w.vars()) throw RingMismatchError("weight vector length does not match ring");
  long s = 0;
  for (int i = 0; i < m.vars(); ++i) s += w.weights[i] * m.exponents[i];
  return s;
}

// a > b iff deg a > deg b, or equal degrees and the last nonzero entry of
// a - b is negative.
static int compare_grevlex(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.vars() - 1; i >= 0; --i) {
    int d = a.exponents[i] - b.exponents[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

static int compare_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.vars(); ++i) {
    int d = a.exponents[i] - b.exponents[i];
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

// Grevlex on the masked sub-vector only.
static int compare_grevlex_masked(const Monomial& a, const Monomial& b,
                                  const std::vector<char>& mask, char select) {
  long da = 0, db = 0;
  for (int i = 0; i < a.vars(); ++i)
    if (mask[i] == select) {
      da += a.exponents[i];
      db += b.exponents[i];
    }
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.vars() - 1; i >= 0; --i) {
    if (mask[i] != select) continue;
    int d = a.exponents[i] - b.exponents[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  check_same_ring(a, b);
  switch (ord.kind) {
    case OrderKind::grevlex:
      return compare_grevlex(a, b);
    case OrderKind::lex:
      return compare_lex(a, b);
    case OrderKind::weight_refined: {
      long wa = monomial_weight(a, ord.weight);
      long wb = monomial_weight(b, ord.weight);
      if (wa != wb) return wa < wb ? -1 : 1;
      return compare_grevlex(a, b);
    }
    case OrderKind::elim_block: {
      if (static_cast<int>(ord.eliminate.size()) != a.vars())
        throw RingMismatchError("elimination mask length does not match ring");
      int c = compare_grevlex_masked(a, b, ord.eliminate, 1);
      if (c != 0) return c;
      return compare_grevlex_masked(a, b, ord.eliminate, 0);
    }
  }
  throw DomainError("unreachable monomial order kind");
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  return compare_grevlex(a, b) > 0;
}

}  // namespace stabforge
