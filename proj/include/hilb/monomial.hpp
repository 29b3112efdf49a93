#ifndef HILB_MONOMIAL_HPP
#define HILB_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hilb/bigint.hpp"

namespace hilb {

/// Exponent vector; compared lexicographically with the first variable most
/// significant. All comparisons here stay within one degree, so no grading
/// is needed in the order.
struct Monomial {
  std::vector<int> exps;

  long degree() const;
  bool divides(const Monomial& m) const;
  Monomial times_var(int v) const;

  bool operator==(const Monomial&) const = default;
  std::string str() const;  // "x0^2*x1" style, "1" for the unit
};

/// True when a precedes b in the fixed order (a lex-larger than b).
bool lex_greater(const Monomial& a, const Monomial& b);

/// Finite generator set of exponent vectors in num_vars variables,
/// minimalized so that no generator divides another.
struct MonomialIdeal {
  int num_vars = 1;
  std::vector<Monomial> generators;  // minimal, sorted lex-descending

  static MonomialIdeal make(int num_vars, std::vector<Monomial> gens);

  bool contains_monomial(const Monomial& m) const;
};

/// All degree-d monomials in n variables, lex-descending. Size is
/// binom(d + n - 1, d).
std::vector<Monomial> monomial_basis(int n, long d);

/// Number of degree-k monomials divisible by no generator of I, i.e. the
/// Hilbert function of the quotient at k.
Int standard_monomial_count(const MonomialIdeal& I, long k);

struct LexSegment {
  int num_vars = 1;
  long degree = 1;
  Int codim;  // 0 <= codim <= binom(degree + num_vars - 1, degree)
};

/// The lex-largest (dim - codim) monomials of the given degree; the
/// extremal subspace for the growth bound.
std::vector<Monomial> lex_segment_span(const LexSegment& ls);

/// Monomial ideal generated by the lex segment (minimalized).
MonomialIdeal lex_segment_ideal(const LexSegment& ls);

}  // namespace hilb

#endif
