#ifndef HILB_MACAULAY_HPP
#define HILB_MACAULAY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hilb/bigint.hpp"

namespace hilb {

/// The expansion of a nonnegative integer c in base d:
///
///   c = sum_{i=1}^{d} binom(i + eps_i, i),   eps_d >= ... >= eps_1 >= -1.
///
/// The chain is unique; c = 0 corresponds to all eps_i = -1.
struct MacaulayExpansion {
  long base = 1;              // d >= 1
  std::vector<Int> epsilons;  // epsilons[0] = eps_d, ..., epsilons[d-1] = eps_1

  /// eps_i for lower index 1 <= i <= base.
  const Int& epsilon(long i) const;

  /// Reconstructs c = sum binom(i + eps_i, i).
  Int value() const;

  /// True when the chain is monotone nonincreasing with entries >= -1.
  bool chain_is_monotone() const;
};

/// Greedy construction: eps_d is the largest integer with
/// binom(d + eps_d, d) <= c; the remainder is expanded in base d - 1.
/// Rejects d < 1 or c < 0.
MacaulayExpansion macaulay_expansion(const Int& c, long d);

/// The maximal value in degree d+1 given value c in degree d:
///   c^<d> = sum binom(i + eps_i + 1, i + 1)
/// over the expansion of c in base d. Increasing in c; equals c when c <= d.
Int growth_bound(const Int& c, long d);

struct OSequenceResult {
  bool admissible = false;
  /// Least index k with h(k) > growth_bound(h(k-1), k-1); set only on failure.
  std::optional<std::size_t> violation_index;
};

/// Degree-by-degree admissibility: h(0) = 1 (rejected otherwise), h(1) is
/// unconstrained, and h(k+1) <= growth_bound(h(k), k) for every k >= 1.
/// Entries must be nonnegative.
OSequenceResult is_o_sequence(const std::vector<Int>& h);

}  // namespace hilb

#endif
