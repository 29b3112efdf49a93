#include "hilb/macaulay.hpp"

#include <stdexcept>

namespace hilb {

const Int& MacaulayExpansion::epsilon(long i) const {
  if (i < 1 || i > base) throw std::out_of_range("epsilon: lower index out of range");
  return epsilons[static_cast<std::size_t>(base - i)];
}

Int MacaulayExpansion::value() const {
  Int total = 0;
  for (long i = base; i >= 1; --i) {
    const Int& e = epsilons[static_cast<std::size_t>(base - i)];
    if (e >= 0) total += binom(Int(i) + e, Int(i));
  }
  return total;
}

bool MacaulayExpansion::chain_is_monotone() const {
  for (std::size_t j = 0; j < epsilons.size(); ++j) {
    if (epsilons[j] < -1) return false;
    if (j > 0 && epsilons[j] > epsilons[j - 1]) return false;
  }
  return true;
}

namespace {

// Largest e >= -1 with binom(i + e, i) <= c, for c >= 0. For c = 0 this is
// -1 since binom(i, i) = 1 > 0.
Int largest_epsilon(const Int& c, long i) {
  if (c == 0) return -1;
  // binom(i + e, i) is strictly increasing in e, so bracket then bisect.
  Int lo = 0;
  if (binom(Int(i), Int(i)) > c) return -1;
  Int hi = 1;
  while (binom(Int(i) + hi, Int(i)) <= c) {
    lo = hi;
    hi *= 2;
  }
  // Invariant: binom(i+lo, i) <= c < binom(i+hi, i).
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (binom(Int(i) + mid, Int(i)) <= c)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MacaulayExpansion macaulay_expansion(const Int& c, long d) {
  if (d < 1) throw std::invalid_argument("macaulay_expansion: base must be >= 1");
  if (c < 0) throw std::invalid_argument("macaulay_expansion: value must be >= 0");
  MacaulayExpansion ex;
  ex.base = d;
  ex.epsilons.reserve(static_cast<std::size_t>(d));
  Int rest = c;
  for (long i = d; i >= 1; --i) {
    Int e = largest_epsilon(rest, i);
    if (e >= 0) rest -= binom(Int(i) + e, Int(i));
    ex.epsilons.push_back(std::move(e));
  }
  // The greedy remainder vanishes exactly when every c >= 0 is reachable,
  // which the binom(i-1+e, ..) telescoping guarantees down to base 1.
  if (rest != 0) throw std::logic_error("macaulay_expansion: nonzero remainder");
  return ex;
}

Int growth_bound(const Int& c, long d) {
  MacaulayExpansion ex = macaulay_expansion(c, d);
  Int total = 0;
  for (long i = d; i >= 1; --i) {
    const Int& e = ex.epsilon(i);
    if (e >= 0) total += binom(Int(i) + e + 1, Int(i) + 1);
  }
  return total;
}

OSequenceResult is_o_sequence(const std::vector<Int>& h) {
  if (h.empty() || h.front() != 1)
    throw std::invalid_argument("is_o_sequence: sequence must start with 1");
  for (const Int& v : h)
    if (v < 0) throw std::invalid_argument("is_o_sequence: entries must be >= 0");
  for (std::size_t k = 2; k < h.size(); ++k) {
    if (h[k] > growth_bound(h[k - 1], static_cast<long>(k - 1)))
      return {false, k};
  }
  return {true, std::nullopt};
}

}  // namespace hilb
