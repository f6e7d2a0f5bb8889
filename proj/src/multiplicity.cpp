#include "stabforge/groebner.hpp"
#include "stabforge/hilbert.hpp"

namespace stabforge {

bool is_multiplicity_free(const Polynomial& f, const OnePSG& w, const Budget& budget, long m_cap) {
  if (f.is_zero()) throw DomainError("multiplicity test needs a nonzero hypersurface");
  if (!f.is_homogeneous()) throw DomainError("multiplicity test needs a homogeneous hypersurface");
  if (f.vars() < 2 || f.degree() < 1)
    throw DomainError("multiplicity test needs a hypersurface in projective space");
  const int n = f.vars() - 2;  // dimension of the hypersurface
  Polynomial g = initial_form(f, w);
  std::vector<Polynomial> jac{g};
  for (int i = 0; i < f.vars(); ++i) jac.push_back(g.derivative(i));
  Ideal jacobian(f.vars(), std::move(jac));
  return projective_dimension(jacobian, m_cap, budget) <= n - 1;
}

}  // namespace stabforge
