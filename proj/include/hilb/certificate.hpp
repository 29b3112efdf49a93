#ifndef HILB_CERTIFICATE_HPP
#define HILB_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "hilb/hvector.hpp"
#include "hilb/record.hpp"

namespace hilb {

enum class StepKind { Arithmetic, Axiom };

/// One step of a replayed argument. ARITHMETIC steps carry a checker id and
/// enough data to be re-verified with no other context; AXIOM steps state an
/// assumed geometric fact with its source and are never marked verified.
struct ProofStep {
  StepKind kind = StepKind::Arithmetic;
  std::string claim;
  std::string cite;
  std::string check;  // checker id; empty on AXIOM steps
  std::vector<std::pair<std::string, std::string>> data;
  std::vector<HVector> eliminates;
  bool verified = false;

  const std::string* find(std::string_view key) const;
};

struct SurvivingCase {
  Multidegree multidegree;
  HVector hvector;
  Int min_nodes;
};

/// A replayed case analysis: the candidate pool, the ordered rule steps
/// (first applicable rule eliminates a candidate), and the survivors.
struct ProofCertificate {
  std::string target;
  std::vector<HVector> candidates;
  std::vector<ProofStep> steps;
  std::vector<SurvivingCase> survivors;
  std::string conclusion;

  Record to_record() const;
  std::string serialize() const;
  static ProofCertificate from_record(const Record& r);
};

struct CheckIssue {
  std::size_t step_index = 0;  // 1-based; 0 for certificate-level issues
  std::string message;
};

struct CheckResult {
  std::vector<CheckIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Re-verifies a certificate from its own data: every ARITHMETIC step is
/// recomputed from its data fields, eliminations are replayed against the
/// candidate pool in step order, and the survivor list must be exactly the
/// pool left standing.
CheckResult check_certificate(const ProofCertificate& cert);

/// Parses "(1,2,3)" into the underlying integers.
std::vector<Int> parse_int_tuple(const std::string& text);

}  // namespace hilb

#endif
