#ifndef HILB_HVECTOR_HPP
#define HILB_HVECTOR_HPP

#include <string>
#include <vector>

#include "hilb/macaulay.hpp"

namespace hilb {

/// Finite sequence of nonnegative integers with h(0) = 1; the socle degree
/// is the last index.
struct HVector {
  std::vector<Int> values;

  HVector() = default;
  explicit HVector(std::vector<Int> v);

  long socle_degree() const { return static_cast<long>(values.size()) - 1; }
  const Int& at(long k) const;
  Int total() const;
  bool symmetric() const;

  bool operator==(const HVector&) const = default;
  /// Lexicographic on values.
  bool operator<(const HVector& o) const { return values < o.values; }

  std::string str() const;  // "(1,2,3,4,3,2,1)"
};

/// Nondecreasing generator degrees (d2, d1, d0, d-1) of a complete
/// intersection, each >= 1.
struct Multidegree {
  std::vector<long> degrees;

  explicit Multidegree(std::vector<long> d);

  long sum() const;
  long largest() const { return degrees.back(); }
  std::string str() const;
};

struct GorensteinConstraints {
  long socle_degree = 6;
  Int max_a1;
  Int max_total;
};

/// h-vector of an Artinian complete intersection with the given generator
/// degrees: the coefficients of prod_i (1 + t + ... + t^(deg_i - 1)).
/// Requires as many degrees as variables (the Artinian case) and every
/// degree >= 1. The result is symmetric, has socle degree sum(deg_i - 1),
/// and totals prod deg_i.
HVector ci_hvector(const std::vector<long>& degrees, long num_vars);

/// All symmetric candidate h-vectors (1, a1, ..., a1, 1) of the given even
/// socle degree that are unimodal up to the middle (1 <= a1 <= ... <= a_mid),
/// respect a1 <= max_a1 and total <= max_total, and whose increasing half is
/// an admissible O-sequence. Lexicographic order.
std::vector<HVector> enumerate_candidate_hvectors(const GorensteinConstraints& gc);

struct LemdiVerdict {
  bool sum_ok = false;      // sum d_i >= 2d
  bool forces_ci = false;   // sum d_i == 2d, so the ideal is the complete intersection
  bool within_caps = false; // d_{-1} <= d - 1
};

/// Degree-sequence constraints on the four generator degrees of the
/// complete intersection inside the Gorenstein ideal, for a hypersurface of
/// degree d >= 3.
LemdiVerdict check_lemdi(long d, const Multidegree& md);

/// Lower bound on the number of nodes: the total of the h-vector.
Int min_nodes(const HVector& h);

}  // namespace hilb

#endif
