#include "stabforge/ideal.hpp"

namespace stabforge {

Ideal::Ideal(int vars, std::vector<Polynomial> generators) : vars_(vars) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (g.vars() != vars_) throw RingMismatchError("generator from a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DomainError("non-homogeneous generator");
    gens_.push_back(std::move(g));
  }
}

long Ideal::min_degree() const {
  long d = -1;
  for (const auto& g : gens_) {
    long gd = g.degree();
    if (d == -1 || gd < d) d = gd;
  }
  return d;
}

}  // namespace stabforge
