#pragma once

#include <string>
#include <vector>

#include "stabforge/hilbert.hpp"

namespace stabforge {

// Partition indexing a Schubert class, constrained to a k x (N+1-k) box.
// Canonical form has no trailing zeros.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  static Partition special(int p) { return Partition(std::vector<int>{p}); }  // sigma_p

  int weight() const;  // codimension
  int rows() const { return static_cast<int>(parts.size()); }
  bool fits_box(int k, int cols) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts <=> b.parts; }
};

struct Bidegree {
  long d1 = 0;
  long d2 = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// d1 = d(d-1)/2 and d2 = (d-1)(d-2)/2 - g for a degree-d genus-g space curve.
Bidegree bidegree_curve(long d, long g);

// Intersection number of single-row (special) Schubert classes on
// Gr(k, C^{Nplus1}), by iterated Pieri multiplication. The codimensions
// must sum to k(Nplus1-k).
Integer schubert_integral(const std::vector<Partition>& factors, int k, int Nplus1);

// deg Gr(k, C^{Nplus1}) = integral of sigma_1^dim.
Integer grassmannian_degree(int k, int Nplus1);

// beta = integral of c2(Q) * omega_Pl^(dim-2) = sigma_2 * sigma_1^(dim-2).
Integer beta_constant(int k, int Nplus1);

// The constants entering the stability criterion.
struct InvariantBundle {
  long d = 0;
  int n = 0;
  int N = 0;
  Rational mu;
  Integer D;
  Integer beta;
  Rational nu1;
  Rational nu2;
};

InvariantBundle stability_constants(long d, int n, int N, const Rational& mu);

// Vol(D) = d(d-1) D + ((mu - n(n+1))/n) d beta.
Rational singular_divisor_volume(long d, int n, const Integer& D, const Integer& beta,
                                 const Rational& mu);

enum class Verdict { stable_witness, not_stable_witness };

struct ChowVerdict {
  Verdict verdict;
  Rational margin;  // (2d + mu/(n+1) - (n+2)) slope_RX - slope_fD
  std::string note;
};

// Per-lambda witness only: full stability quantifies over every 1-psg.
ChowVerdict double_chow_verdict(long d, int n, const Rational& mu, const Rational& slope_RX,
                                const Rational& slope_fD);

// Outcome of projecting a space curve from a point and counting the
// singularities of the image via the Jacobian scheme.
struct NodeCount {
  bool generic = false;    // all image singularities are nodes
  long nodes = 0;          // meaningful when generic
  long scheme_degree = 0;  // degree of the singular scheme
  long distinct_points = 0;
  std::string note;
};

// Projects the curve (ideal in P^3) from `center`, eliminates to the plane
// image, and reads the node count off the Jacobian scheme. Non-generic
// centers are flagged, never silently counted.
NodeCount projection_node_count(const Ideal& curve, const std::vector<Rational>& center,
                                long m_cap = 40, const Budget& budget = {});

}  // namespace stabforge
