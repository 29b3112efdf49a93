#ifndef HILB_ORACLE_HPP
#define HILB_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hilb/monomial.hpp"
#include "hilb/record.hpp"

namespace hilb {

enum class OracleMode { Exhaustive, Randomized };

struct MacaulayBoundOptions {
  OracleMode mode = OracleMode::Exhaustive;
  /// Exhaustive enumeration runs when the degree-d basis has at most this
  /// many monomials (2^dim subsets); above it the run falls back to seeded
  /// sampling and says so in the report.
  int max_exhaustive_dim = 21;
  std::uint64_t seed = 37;
  std::uint64_t samples = 200000;
};

struct MacaulayBoundReport {
  Record record;
  std::uint64_t subspaces_tested = 0;
  std::uint64_t violations = 0;
  bool lex_attains_all = false;
  bool exhaustive = false;

  bool pass() const { return violations == 0 && lex_attains_all; }
};

/// Checks, for monomial-spanned subspaces V of the degree-d piece in n
/// variables, that codim(V * S_1) never exceeds growth_bound(codim V, d),
/// and that the lex segment attains the bound at every codimension.
MacaulayBoundReport verify_macaulay_bound(int n, long d, const MacaulayBoundOptions& opt = {});

struct GotzmannLexReport {
  Record record;
  std::vector<Int> counts;  // standard-monomial counts at degrees d .. d+horizon
  std::uint64_t recurrence_failures = 0;
  bool matches_polynomial = false;
  bool persists = false;
  bool stabilizes_to_constant = false;  // relevant when codim <= degree

  bool pass() const { return recurrence_failures == 0 && matches_polynomial && persists; }
};

/// Builds the ideal generated by the degree-d lex segment of codimension c,
/// counts standard monomials through degree d + horizon, and checks that
/// each step realizes the growth bound and matches the expansion
/// polynomial of c in base d.
GotzmannLexReport verify_gotzmann_on_lex(int n, long d, const Int& c, long horizon);

}  // namespace hilb

#endif
