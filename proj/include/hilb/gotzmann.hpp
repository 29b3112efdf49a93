#ifndef HILB_GOTZMANN_HPP
#define HILB_GOTZMANN_HPP

#include <optional>
#include <vector>

#include "hilb/macaulay.hpp"

namespace hilb {

/// The Hilbert polynomial determined by a persisting expansion: starting
/// from the base-degree value, each later value is obtained by applying the
/// growth operator once per degree. Term-wise this evaluates at degree k to
///
///   sum_i binom_shifted(eps_i, i, k - base_degree + i),
///
/// and evaluate() checks the two routes against each other.
struct ExpansionPolynomial {
  long base_degree = 1;
  std::vector<Int> epsilons;  // leading first, as in MacaulayExpansion

  static ExpansionPolynomial from_expansion(const MacaulayExpansion& ex);

  Int value_at_base() const;

  /// Value at degree k >= base_degree. Iterated growth is the normative
  /// route; the closed form is recomputed alongside and a mismatch throws.
  Int evaluate(const Int& k) const;
};

struct PersistenceVerdict {
  bool persists = false;
  /// Leading epsilon of the degree-d expansion; -1 for the empty scheme.
  /// Meaningful only when persists.
  Int dimension = -1;
  std::optional<ExpansionPolynomial> hilbert_polynomial;
};

/// Growth is maximal from degree d to d+1 exactly when c_d1 equals
/// growth_bound(c_d, d); from then on every step is maximal and the Hilbert
/// function agrees with the expansion polynomial.
PersistenceVerdict persistence_check(const Int& c_d, const Int& c_d1, long d);

/// Least possible value in degree d when the base locus has dimension m:
/// binom(d + m, d), the value of an m-plane.
Int min_hilbert_for_base_dim(long m, long d);

struct ZeroDimVerdict {
  Int length;
  /// The degree-(d+1) system has nonempty base locus.
  bool not_base_point_free_next = true;
};

/// When c <= d and the next value equals c, the scheme is zero-dimensional
/// of length c and the system in degree d+1 has a base point. Otherwise no
/// verdict.
std::optional<ZeroDimVerdict> green_stabilization(const Int& c, long d, const Int& next);

}  // namespace hilb

#endif
