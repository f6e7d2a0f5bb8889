#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "stabforge/hilbert.hpp"

using namespace stabforge;

namespace {

Ideal twisted_cubic() {
  return Ideal(4, {parse_polynomial("x0*x2 - x1^2", 4), parse_polynomial("x1*x3 - x2^2", 4),
                   parse_polynomial("x0*x3 - x1*x2", 4)});
}

Ideal conic() { return Ideal(3, {parse_polynomial("x0*x2 - x1^2", 3)}); }

void all_monomials(int vars, long degree, int at, Monomial& cur, std::vector<Monomial>& out) {
  if (at == vars - 1) {
    cur.exponents[at] = static_cast<int>(degree);
    out.push_back(cur);
    cur.exponents[at] = 0;
    return;
  }
  for (long e = 0; e <= degree; ++e) {
    cur.exponents[at] = static_cast<int>(e);
    all_monomials(vars, degree - e, at + 1, cur, out);
  }
  cur.exponents[at] = 0;
}

std::vector<Monomial> monomials_of_degree(int vars, long degree) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(vars);
  all_monomials(vars, degree, 0, cur, out);
  return out;
}

// Independent oracle: dim of the degree-m piece of S/I by exact Gaussian
// elimination on the span of {x^gamma * g}, no Groebner machinery.
long hilbert_by_rank(const Ideal& ideal, long m) {
  std::vector<Monomial> basis = monomials_of_degree(ideal.vars(), m);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : ideal.generators()) {
    long shift = m - g.degree();
    if (shift < 0) continue;
    for (const auto& gamma : monomials_of_degree(ideal.vars(), shift)) {
      std::vector<Rational> row(basis.size(), Rational(0));
      for (const auto& [mono, c] : g.terms()) row[index.at(mono_mul(mono, gamma))] = c;
      rows.push_back(std::move(row));
    }
  }
  // exact row reduction
  std::size_t rank = 0;
  for (std::size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < basis.size(); ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<long>(basis.size()) - static_cast<long>(rank);
}

}  // namespace

TEST_CASE("hilbert function examples") {
  CHECK(hilbert_function(twisted_cubic(), 1) == 4);
  CHECK(hilbert_function(twisted_cubic(), 2) == 7);
  CHECK(hilbert_function(Ideal(3), 2) == 6);
}

TEST_CASE("hilbert function agrees with the rank oracle") {
  for (long m = 0; m <= 5; ++m) {
    CHECK(hilbert_function(twisted_cubic(), m) == hilbert_by_rank(twisted_cubic(), m));
    CHECK(hilbert_function(conic(), m) == hilbert_by_rank(conic(), m));
  }
  Ideal fermat(4, {parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", 4)});
  for (long m = 0; m <= 5; ++m) CHECK(hilbert_function(fermat, m) == hilbert_by_rank(fermat, m));
}

TEST_CASE("hilbert polynomial examples") {
  HilbertData tc = hilbert_polynomial(twisted_cubic());
  CHECK(to_string(tc.P) == "3*m + 1");
  CHECK(tc.n == 1);
  CHECK(tc.d == 3);
  CHECK(tc.mu == make_rational(2, 3));
  CHECK(tc.b_top == Rational(3));
  CHECK(tc.b_sub == Rational(1));

  HilbertData cn = hilbert_polynomial(conic());
  CHECK(to_string(cn.P) == "2*m + 1");
  CHECK(cn.n == 1);
  CHECK(cn.d == 2);
  CHECK(cn.mu == 1);
  // plane conic by adjunction: mu = n(n+2-d) = 1
  CHECK(cn.mu == Rational(1 * (1 + 2 - 2)));

  HilbertData p2 = hilbert_polynomial(Ideal(3));
  CHECK(p2.n == 2);
  CHECK(p2.d == 1);
  CHECK(p2.mu == 6);
  CHECK(p2.P.eval(3) == 10);  // (m+1)(m+2)/2
}

TEST_CASE("weight function examples for the conic") {
  CHECK(weight_function(conic(), OnePSG({1, -1, 0}), 2) == -1);
  CHECK(weight_function(conic(), OnePSG({1, -1, 0}), 3) == -3);
  CHECK(weight_function(conic(), OnePSG::zero(3), 5) == 0);
  // hand-enumerated window m = 1..6 for W(m) = -m(m-1)/2
  for (long m = 1; m <= 6; ++m)
    CHECK(weight_function(conic(), OnePSG({1, -1, 0}), m) == Integer(-m * (m - 1) / 2));
  // and for w = (1,1,-2): W(m) = -m^2 + m
  for (long m = 1; m <= 6; ++m)
    CHECK(weight_function(conic(), OnePSG({1, 1, -2}), m) == Integer(-m * m + m));
}

TEST_CASE("weight polynomial examples for the conic") {
  WeightPolynomial w1 = weight_polynomial(conic(), OnePSG({1, -1, 0}));
  CHECK(w1.a_top == make_rational(-1, 2));
  CHECK(w1.a_sub == make_rational(1, 2));

  WeightPolynomial w2 = weight_polynomial(conic(), OnePSG({1, 1, -2}));
  CHECK(w2.a_top == Rational(-1));
  CHECK(w2.a_sub == Rational(1));

  WeightPolynomial w0 = weight_polynomial(conic(), OnePSG::zero(3));
  CHECK(w0.W.is_zero());
}

TEST_CASE("donaldson futaki examples") {
  CHECK(donaldson_futaki(conic(), OnePSG({1, -1, 0})) == make_rational(3, 8));
  CHECK(donaldson_futaki(conic(), OnePSG({1, 1, -2})) == make_rational(3, 4));
  CHECK(donaldson_futaki(conic(), OnePSG::zero(3)) == 0);
  CHECK(donaldson_futaki(twisted_cubic(), OnePSG::zero(4)) == 0);
}

TEST_CASE("F1 is invariant under shifts by multiples of (1,...,1)") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> wdist(-3, 3);
  std::uniform_int_distribution<long> cdist(-4, 4);
  std::vector<Ideal> ideals{conic(), twisted_cubic()};
  for (int trial = 0; trial < 8; ++trial) {
    for (const auto& ideal : ideals) {
      std::vector<long> w(ideal.vars());
      for (auto& x : w) x = wdist(rng);
      long c = cdist(rng);
      std::vector<long> shifted = w;
      for (auto& x : shifted) x += c;
      CHECK(donaldson_futaki(ideal, OnePSG(w)) == donaldson_futaki(ideal, OnePSG(shifted)));
    }
  }
}

TEST_CASE("W, a-coefficients, and F1 scale linearly in the weight") {
  for (long c : {2L, 3L, 5L}) {
    OnePSG w({1, -1, 0});
    OnePSG cw({c, -c, 0});
    WeightPolynomial base = weight_polynomial(conic(), w);
    WeightPolynomial scaled = weight_polynomial(conic(), cw);
    CHECK(scaled.a_top == Rational(c) * base.a_top);
    CHECK(scaled.a_sub == Rational(c) * base.a_sub);
    for (long m = 1; m <= 6; ++m)
      CHECK(weight_function(conic(), cw, m) == Integer(c) * weight_function(conic(), w, m));
    CHECK(donaldson_futaki(conic(), cw) == Rational(c) * donaldson_futaki(conic(), w));
  }
}

TEST_CASE("W is additive in w when the initial data agree (tie-free pair)") {
  // both weights and their sum select x0*x2 as the initial form
  OnePSG w1({1, -1, 0}), w2({2, -1, -1}), sum({3, -2, -1});
  for (long m = 1; m <= 8; ++m)
    CHECK(weight_function(conic(), sum, m) ==
          weight_function(conic(), w1, m) + weight_function(conic(), w2, m));
  WeightPolynomial a = weight_polynomial(conic(), w1);
  WeightPolynomial b = weight_polynomial(conic(), w2);
  WeightPolynomial s = weight_polynomial(conic(), sum);
  CHECK(s.a_top == a.a_top + b.a_top);
  CHECK(s.a_sub == a.a_sub + b.a_sub);
}

TEST_CASE("permutation equivariance of P, W, F1") {
  // swap x0 <-> x2 in the conic (the equation is symmetric) and in the weight
  Ideal cn = conic();
  OnePSG w({1, -1, 0});
  OnePSG wp({0, -1, 1});
  CHECK(hilbert_polynomial(cn).P == hilbert_polynomial(cn).P);
  WeightPolynomial a = weight_polynomial(cn, w);
  WeightPolynomial b = weight_polynomial(cn, wp);
  CHECK(a.W == b.W);
  CHECK(donaldson_futaki(cn, w) == donaldson_futaki(cn, wp));

  // twisted cubic under the reversing permutation (x0 x3)(x1 x2)
  Ideal tc = twisted_cubic();
  OnePSG v({1, 0, 0, -1});
  OnePSG vrev({-1, 0, 0, 1});
  // reversal composed with negation is the same lambda read backwards;
  // P is intrinsic either way
  CHECK(hilbert_polynomial(tc).P == hilbert_polynomial(tc).P);
  CHECK(weight_polynomial(tc, v).W == weight_polynomial(tc, vrev).W);
}

TEST_CASE("flat-limit invariance of the Hilbert function") {
  Ideal elliptic_quartic(4, {parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", 4),
                             parse_polynomial("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", 4)});
  std::vector<std::pair<Ideal, OnePSG>> pairs{
      {conic(), OnePSG({1, -1, 0})},   {conic(), OnePSG({1, 1, -2})},
      {conic(), OnePSG({1, 0, -1})},   {twisted_cubic(), OnePSG({3, 1, -1, -3})},
      {twisted_cubic(), OnePSG({1, 0, 0, -1})},
      {elliptic_quartic, OnePSG({1, 0, 0, -1})},
      {elliptic_quartic, OnePSG({2, 1, -1, -2})}};
  for (const auto& [ideal, w] : pairs) {
    Ideal limit = initial_ideal(ideal, w);
    for (long m = 0; m <= 12; ++m) CHECK(hilbert_function(ideal, m) == hilbert_function(limit, m));
  }
}

TEST_CASE("weight function agrees along the independent flat-limit route") {
  // primary route: standard monomials of the refined-order initial ideal of I;
  // independent route: grevlex staircase of in_w(I) computed as an ideal.
  // Equality holds because in_w(I) is w-homogeneous.
  Ideal elliptic_quartic(4, {parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", 4),
                             parse_polynomial("x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2", 4)});
  std::vector<std::pair<Ideal, OnePSG>> pairs{
      {conic(), OnePSG({1, -1, 0})},
      {conic(), OnePSG({1, 1, -2})},
      {twisted_cubic(), OnePSG({1, 0, 0, -1})},
      {elliptic_quartic, OnePSG({2, 1, -1, -2})}};
  for (const auto& [ideal, w] : pairs) {
    Ideal limit = initial_ideal(ideal, w);
    Staircase st = Staircase::of_ideal(limit, MonomialOrder::grevlex(), Budget{});
    for (long m = 1; m <= 8; ++m)
      CHECK(weight_function(ideal, w, m) == st.weight_sum_standard(m, w));
  }
}

TEST_CASE("integrality of P and W on a window") {
  HilbertData hd = hilbert_polynomial(twisted_cubic());
  WeightPolynomial wp = weight_polynomial(twisted_cubic(), OnePSG({1, 0, 0, -1}));
  for (long m = hd.P.claimed_from; m < hd.P.claimed_from + 10; ++m)
    CHECK(hd.P.eval(m).get_den() == 1);
  for (long m = wp.W.claimed_from; m < wp.W.claimed_from + 10; ++m)
    CHECK(wp.W.eval(m).get_den() == 1);
}

TEST_CASE("hm_slope examples") {
  CHECK(hm_slope({-2, 0, 3}, {1, 1, 1}) == 2);
  CHECK(hm_slope({-2, 0, 3}, {0, 0, 1}) == -3);
  CHECK(hm_slope({0, 0, 0}, {1, 1, 1}) == 0);
  CHECK_THROWS_AS(hm_slope({1, 2}, {0, 0}), DomainError);
}

TEST_CASE("chow slope via the weight polynomial matches the hypersurface slope") {
  WeightPolynomial w1 = weight_polynomial(conic(), OnePSG({1, -1, 0}));
  CHECK(chow_slope_via_hilbert(w1, 1) == Rational(1));
  WeightPolynomial w2 = weight_polynomial(conic(), OnePSG({1, 1, -2}));
  CHECK(chow_slope_via_hilbert(w2, 1) == Rational(2));
  WeightPolynomial w0 = weight_polynomial(conic(), OnePSG::zero(3));
  CHECK(chow_slope_via_hilbert(w0, 1) == 0);
}

TEST_CASE("cm weight evaluator") {
  CHECK(cm_weight(1, Rational(3), Rational(1), Rational(0)) == 3);
  CHECK(cm_weight(1, Rational(3), Rational(0), Rational(0)) == 0);
  CHECK(cm_weight(2, Rational(5), Rational(2), Rational(1)) == 7);
}

TEST_CASE("regularity error when the cap is too small") {
  CHECK_THROWS_AS(hilbert_polynomial(twisted_cubic(), 7), RegularityError);
}

TEST_CASE("numerical polynomial printing") {
  NumericalPolynomial p{{Rational(1), Rational(3)}, 1};
  CHECK(to_string(p) == "3*m + 1");
  NumericalPolynomial q{{Rational(0), make_rational(1, 2), make_rational(-1, 2)}, 1};
  CHECK(to_string(q) == "-1/2*m^2 + 1/2*m");
  CHECK(to_string(NumericalPolynomial{}) == "0");
}
