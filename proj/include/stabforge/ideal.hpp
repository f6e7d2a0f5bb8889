#pragma once

#include <vector>

#include "stabforge/polynomial.hpp"

namespace stabforge {

// Homogeneous ideal given by generators. Zero generators are dropped;
// non-homogeneous generators are rejected.
class Ideal {
public:
  explicit Ideal(int vars) : vars_(vars) {}
  Ideal(int vars, std::vector<Polynomial> generators);

  int vars() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Smallest generator degree, or -1 for the zero ideal.
  long min_degree() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

private:
  int vars_;
  std::vector<Polynomial> gens_;
};

}  // namespace stabforge
