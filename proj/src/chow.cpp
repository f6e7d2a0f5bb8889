#include "stabforge/chow.hpp"

#include <algorithm>
#include <map>

namespace stabforge {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) throw DomainError("partition parts must weakly decrease");
  for (int x : parts)
    if (x < 0) throw DomainError("partition parts must be nonnegative");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::weight() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

bool Partition::fits_box(int k, int cols) const {
  if (rows() > k) return false;
  return parts.empty() || parts.front() <= cols;
}

Bidegree bidegree_curve(long d, long g) {
  if (d < 1) throw DomainError("curve degree must be positive");
  long pa = (d - 1) * (d - 2) / 2;
  if (g < 0 || g > pa)
    throw DomainError("genus out of range [0, (d-1)(d-2)/2] for degree " + std::to_string(d));
  return Bidegree{d * (d - 1) / 2, pa - g};
}

namespace {

using SchubertClass = std::map<Partition, Integer>;

// sigma_lambda * sigma_p: add a horizontal strip of p boxes inside the box
// (mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...).
void pieri_into(SchubertClass& out, const Partition& lambda, const Integer& coeff, int p, int k,
                int cols) {
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  std::vector<int> lam(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < lambda.rows(); ++i) lam[static_cast<std::size_t>(i)] = lambda.parts[i];

  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == k) {
      if (remaining == 0) out[Partition(mu)] += coeff;
      return;
    }
    int low = lam[static_cast<std::size_t>(row)];
    int high = row == 0 ? cols : std::min(lam[static_cast<std::size_t>(row - 1)], cols);
    for (int v = low; v <= high; ++v) {
      if (v - low > remaining) break;
      mu[static_cast<std::size_t>(row)] = v;
      self(self, row + 1, remaining - (v - low));
    }
    mu[static_cast<std::size_t>(row)] = low;
  };
  rec(rec, 0, p);
}

}  // namespace

Integer schubert_integral(const std::vector<Partition>& factors, int k, int Nplus1) {
  if (k < 1 || k >= Nplus1) throw DomainError("Grassmannian Gr(k, N+1) needs 1 <= k <= N");
  const int cols = Nplus1 - k;
  const int dim = k * cols;
  int total = 0;
  bool vanishes = false;
  for (const auto& f : factors) {
    if (f.rows() > 1)
      throw DomainError("only special (single-row) Schubert classes are supported as factors");
    if (!f.fits_box(k, cols)) vanishes = true;  // sigma_p = 0 beyond the box
    total += f.weight();
  }
  if (total != dim)
    throw DomainError("codimensions sum to " + std::to_string(total) + ", expected dim = " +
                      std::to_string(dim));
  if (vanishes) return 0;
  SchubertClass cls;
  cls[Partition()] = 1;
  for (const auto& f : factors) {
    if (f.weight() == 0) continue;
    SchubertClass next;
    for (const auto& [lambda, coeff] : cls) pieri_into(next, lambda, coeff, f.weight(), k, cols);
    cls = std::move(next);
  }
  Partition point(std::vector<int>(static_cast<std::size_t>(k), cols));
  auto it = cls.find(point);
  return it == cls.end() ? Integer(0) : it->second;
}

Integer grassmannian_degree(int k, int Nplus1) {
  const int dim = k * (Nplus1 - k);
  std::vector<Partition> factors(static_cast<std::size_t>(dim), Partition::special(1));
  return schubert_integral(factors, k, Nplus1);
}

Integer beta_constant(int k, int Nplus1) {
  const int dim = k * (Nplus1 - k);
  if (dim < 2) throw DomainError("beta needs dim Gr >= 2");
  std::vector<Partition> factors{Partition::special(2)};
  factors.insert(factors.end(), static_cast<std::size_t>(dim - 2), Partition::special(1));
  return schubert_integral(factors, k, Nplus1);
}

InvariantBundle stability_constants(long d, int n, int N, const Rational& mu) {
  if (n < 1 || n >= N) throw DomainError("stability constants need 1 <= n < N");
  const int k = N - n;
  Integer D = grassmannian_degree(k, N + 1);
  Integer beta = beta_constant(k, N + 1);
  Rational nu1 = Rational(n + 1) * (Rational(2 * d) + mu / Rational(n + 1) - Rational(n + 2));
  Rational nu2 = Rational(n + 1) / Rational(D);
  return InvariantBundle{d, n, N, mu, D, beta, nu1, nu2};
}

Rational singular_divisor_volume(long d, int n, const Integer& D, const Integer& beta,
                                 const Rational& mu) {
  if (n < 1) throw DomainError("volume formula needs n >= 1");
  return Rational(d * (d - 1)) * Rational(D) +
         (mu - Rational(static_cast<long>(n) * (n + 1))) / Rational(n) * Rational(d) *
             Rational(beta);
}

ChowVerdict double_chow_verdict(long d, int n, const Rational& mu, const Rational& slope_RX,
                                const Rational& slope_fD) {
  Rational margin =
      (Rational(2 * d) + mu / Rational(n + 1) - Rational(n + 2)) * slope_RX - slope_fD;
  Verdict v = margin > 0 ? Verdict::stable_witness : Verdict::not_stable_witness;
  return ChowVerdict{v, margin,
                     "witness for this 1-psg only; stability requires a positive margin "
                     "for every 1-psg"};
}

namespace {

// Linear change of coordinates sending e_pivot to `point`; identity on the
// other basis vectors. Invertible because point[pivot] != 0.
std::vector<std::vector<Rational>> move_point_to_axis(const std::vector<Rational>& point,
                                                      int pivot) {
  const int nv = static_cast<int>(point.size());
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(nv),
                                       std::vector<Rational>(static_cast<std::size_t>(nv),
                                                             Rational(0)));
  for (int i = 0; i < nv; ++i) a[i][i] = Rational(1);
  for (int i = 0; i < nv; ++i) a[i][pivot] = point[i];
  return a;
}

bool point_on_scheme(const Ideal& ideal, const std::vector<Rational>& point) {
  for (const auto& g : ideal.generators())
    if (g.evaluate(point) != 0) return false;
  return true;
}

int pivot_coordinate(const std::vector<Rational>& point) {
  for (int i = static_cast<int>(point.size()) - 1; i >= 0; --i)
    if (point[i] != 0) return i;
  throw DomainError("projection center must be a projective point (not all zero)");
}

// Generators of the elimination ideal, re-indexed to the smaller ring.
std::vector<Polynomial> project_from(const Ideal& ideal, const std::vector<Rational>& center,
                                     const Budget& budget) {
  const int nv = ideal.vars();
  int pivot = pivot_coordinate(center);
  auto a = move_point_to_axis(center, pivot);
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(g.substitute_linear(a));
  Ideal shifted(nv, std::move(moved));
  std::vector<char> keep(static_cast<std::size_t>(nv), 1);
  keep[static_cast<std::size_t>(pivot)] = 0;
  Ideal elim = eliminate(shifted, keep, budget);
  std::vector<int> indices;
  for (int i = 0; i < nv; ++i)
    if (i != pivot) indices.push_back(i);
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(g.restrict_variables(indices));
  return out;
}

// Univariate gcd (monic Euclid) on dense rational coefficient vectors.
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {  // a mod b
      Rational q = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  trim(a);
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Distinct common roots in P^1 of a family of binary forms: distinct roots
// of the gcd of their dehomogenizations, plus a shared root at infinity.
long distinct_common_roots(const std::vector<Polynomial>& forms) {
  bool root_at_infinity = true;
  std::vector<Rational> g;
  bool first = true;
  for (const auto& f : forms) {
    long deg = f.degree();
    std::vector<Rational> dense(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) dense[static_cast<std::size_t>(m.exponents[0])] = c;
    if (dense.back() != 0) root_at_infinity = false;
    while (!dense.empty() && dense.back() == 0) dense.pop_back();
    if (dense.empty()) throw DomainError("zero binary form");
    if (first) {
      g = std::move(dense);
      first = false;
    } else {
      g = poly_gcd(g, dense);
    }
  }
  long distinct_finite = 0;
  if (g.size() > 1) {
    std::vector<Rational> dg(g.size() - 1, Rational(0));
    for (std::size_t i = 1; i < g.size(); ++i) dg[i - 1] = Rational(static_cast<long>(i)) * g[i];
    std::vector<Rational> common = poly_gcd(g, dg);
    distinct_finite = static_cast<long>(g.size() - common.size());
  }
  return distinct_finite + (root_at_infinity ? 1 : 0);
}

// Distinct points of a 0-dimensional scheme in P^2: project to P^1 from a
// fixed list of centers and take the largest distinct-root count.
long distinct_points(const Ideal& scheme, const Budget& budget) {
  const std::vector<std::vector<long>> centers = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {2, -1, 5},
  };
  long best = 0;
  bool any = false;
  for (const auto& raw : centers) {
    std::vector<Rational> c{Rational(raw[0]), Rational(raw[1]), Rational(raw[2])};
    if (point_on_scheme(scheme, c)) continue;
    std::vector<Polynomial> image = project_from(scheme, c, budget);
    if (image.empty()) continue;
    best = std::max(best, distinct_common_roots(image));
    any = true;
  }
  if (!any) throw DomainError("no usable projection direction for the singular scheme");
  return best;
}

}  // namespace

NodeCount projection_node_count(const Ideal& curve, const std::vector<Rational>& center,
                                long m_cap, const Budget& budget) {
  if (curve.vars() != 4)
    throw DomainError("projection_node_count expects a curve in P^3 (4 coordinates)");
  if (static_cast<int>(center.size()) != 4)
    throw DomainError("projection center must have 4 coordinates");
  if (point_on_scheme(curve, center)) throw DomainError("projection center lies on the curve");

  std::vector<Polynomial> image = project_from(curve, center, budget);
  if (image.size() != 1)
    throw DomainError("projected image is not a hypersurface in P^2");
  const Polynomial& F = image[0];

  std::vector<Polynomial> jac{F};
  for (int i = 0; i < 3; ++i) jac.push_back(F.derivative(i));
  Ideal jacobian(3, std::move(jac));

  Staircase st = Staircase::of_ideal(jacobian, MonomialOrder::grevlex(), budget);
  NumericalPolynomial P = fit_numerical_polynomial(
      [&](long m) { return Rational(Integer(st.count_standard(m))); }, 2, m_cap);
  if (P.is_zero()) return NodeCount{true, 0, 0, 0, "image is smooth"};
  if (P.degree() >= 1)
    return NodeCount{false, 0, -1, -1, "non-generic: singular scheme is positive-dimensional"};

  Rational deg_q = P.coefficient(0);
  long degree = static_cast<long>(deg_q.get_num().get_si());
  long distinct = distinct_points(jacobian, budget);
  if (degree == distinct)
    return NodeCount{true, degree, degree, distinct, "all image singularities are nodes"};
  return NodeCount{false, 0, degree, distinct,
                   "non-generic: singular scheme degree " + std::to_string(degree) +
                       " exceeds " + std::to_string(distinct) + " distinct points"};
}

}  // namespace stabforge
