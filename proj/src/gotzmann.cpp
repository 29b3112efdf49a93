#include "hilb/gotzmann.hpp"

#include <stdexcept>

namespace hilb {

ExpansionPolynomial ExpansionPolynomial::from_expansion(const MacaulayExpansion& ex) {
  return {ex.base, ex.epsilons};
}

Int ExpansionPolynomial::value_at_base() const {
  Int total = 0;
  for (long i = base_degree; i >= 1; --i) {
    const Int& e = epsilons[static_cast<std::size_t>(base_degree - i)];
    if (e >= 0) total += binom(Int(i) + e, Int(i));
  }
  return total;
}

Int ExpansionPolynomial::evaluate(const Int& k) const {
  if (k < base_degree)
    throw std::invalid_argument("ExpansionPolynomial::evaluate: degree below base");
  Int iterated = value_at_base();
  for (Int j = base_degree; j < k; ++j)
    iterated = growth_bound(iterated, j.convert_to<long>());

  Int closed = 0;
  for (long i = base_degree; i >= 1; --i) {
    const Int& e = epsilons[static_cast<std::size_t>(base_degree - i)];
    closed += binom_shifted(e, i, k - base_degree + i);
  }
  if (iterated != closed)
    throw std::logic_error("ExpansionPolynomial::evaluate: closed form disagrees with iterated growth");
  return iterated;
}

PersistenceVerdict persistence_check(const Int& c_d, const Int& c_d1, long d) {
  PersistenceVerdict v;
  v.persists = c_d1 == growth_bound(c_d, d);
  if (v.persists) {
    MacaulayExpansion ex = macaulay_expansion(c_d, d);
    v.dimension = ex.epsilons.front();
    v.hilbert_polynomial = ExpansionPolynomial::from_expansion(ex);
  }
  return v;
}

Int min_hilbert_for_base_dim(long m, long d) {
  if (m < 0 || d < 1)
    throw std::invalid_argument("min_hilbert_for_base_dim: need m >= 0 and d >= 1");
  return binom(Int(d) + m, Int(d));
}

std::optional<ZeroDimVerdict> green_stabilization(const Int& c, long d, const Int& next) {
  if (c < 0 || d < 1 || next < 0)
    throw std::invalid_argument("green_stabilization: need c >= 0, d >= 1, next >= 0");
  if (c > d || next != c) return std::nullopt;
  return ZeroDimVerdict{c, true};
}

}  // namespace hilb
