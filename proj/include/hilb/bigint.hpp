#ifndef HILB_BIGINT_HPP
#define HILB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hilb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient. binom(n, k) = 0 whenever k < 0 or k > n;
/// there is no overflow at any size.
Int binom(const Int& n, const Int& k);

/// One term of an evolved expansion: binom(e + k, e) for e >= 0, and 0 for
/// e = -1 (the vanishing-term convention). The term is a polynomial of
/// degree e in k. The index i names the slot the term occupies and does not
/// enter the value.
Int binom_shifted(const Int& e, long i, const Int& k);

/// A single expansion term binom(i + top_offset, i) with top_offset >= -1
/// and lower index i >= 1. Value is 0 exactly when top_offset = -1.
struct BinomialTerm {
  Int top_offset;
  long lower_index = 1;

  Int value() const;
};

std::string to_string(const Int& v);

}  // namespace hilb

#endif
