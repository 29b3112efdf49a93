#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "hilb/replay.hpp"

using hilb::HVector;
using hilb::Int;
using hilb::ProofCertificate;
using hilb::StepKind;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("cannot open " + path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) {
  return std::string(HILB_SOURCE_DIR) + "/tests/golden/" + name;
}

}  // namespace

TEST_CASE("the quintic replay pins the two complete intersections") {
  ProofCertificate cert = hilb::replay_d5();

  REQUIRE(cert.survivors.size() == 2);
  CHECK(cert.survivors[0].multidegree.str() == "(1,1,4,4)");
  CHECK(cert.survivors[0].hvector.str() == "(1,2,3,4,3,2,1)");
  CHECK(cert.survivors[0].min_nodes == 16);
  CHECK(cert.survivors[1].multidegree.str() == "(1,2,3,4)");
  CHECK(cert.survivors[1].hvector.str() == "(1,3,5,6,5,3,1)");
  CHECK(cert.survivors[1].min_nodes == 24);

  CHECK(cert.candidates.size() == 12);
  CHECK(cert.candidates == hilb::enumerate_candidate_hvectors({6, Int(4), Int(24)}));
}

TEST_CASE("every candidate is eliminated exactly once or survives") {
  ProofCertificate cert = hilb::replay_d5();
  std::map<std::string, int> seen;
  for (const auto& step : cert.steps)
    for (const HVector& h : step.eliminates) seen[h.str()] += 1;
  for (const auto& sc : cert.survivors) seen[sc.hvector.str()] += 1;

  REQUIRE(seen.size() == cert.candidates.size());
  for (const HVector& h : cert.candidates) {
    REQUIRE_MESSAGE(seen.count(h.str()) == 1, (h.str() + " unaccounted for"));
    CHECK_MESSAGE(seen[h.str()] == 1, (h.str() + " handled more than once"));
  }
}

TEST_CASE("the quintic replay carries exactly five axiom steps") {
  ProofCertificate cert = hilb::replay_d5();
  int axioms = 0;
  for (const auto& step : cert.steps) {
    if (step.kind == StepKind::Axiom) {
      ++axioms;
      CHECK_FALSE(step.cite.empty());
      CHECK_FALSE(step.verified);
    } else {
      CHECK(step.verified);
      CHECK_FALSE(step.check.empty());
    }
  }
  CHECK(axioms == 5);
  CHECK(cert.steps.size() == 15);
}

TEST_CASE("replay output is deterministic and matches the golden certificate") {
  std::string first = hilb::replay_d5().serialize();
  std::string second = hilb::replay_d5().serialize();
  REQUIRE(first == second);
  CHECK(first == read_file(golden_path("replay_d5.txt")));
}

TEST_CASE("the certificate round-trips through its own reader") {
  ProofCertificate cert = hilb::replay_d5();
  std::string text = cert.serialize();
  ProofCertificate back = ProofCertificate::from_record(hilb::Record::parse(text));
  CHECK(back.serialize() == text);

  ProofCertificate plane = hilb::replay_plane_case();
  CHECK(ProofCertificate::from_record(hilb::Record::parse(plane.serialize())).serialize() ==
        plane.serialize());
}

TEST_CASE("the checker accepts both replays") {
  auto d5 = hilb::check_certificate(hilb::replay_d5());
  for (const auto& issue : d5.issues) MESSAGE(issue.step_index, ": ", issue.message);
  CHECK(d5.ok());

  auto plane = hilb::check_certificate(hilb::replay_plane_case());
  for (const auto& issue : plane.issues) MESSAGE(issue.step_index, ": ", issue.message);
  CHECK(plane.ok());
}

TEST_CASE("the checker rejects tampered certificates") {
  // A falsified sum.
  ProofCertificate cert = hilb::replay_d5();
  for (auto& step : cert.steps)
    for (auto& [k, v] : step.data)
      if (k == "total" && v == "25") v = "24";
  CHECK_FALSE(hilb::check_certificate(cert).ok());

  // An elimination moved to a rule that does not cover it.
  ProofCertificate cert2 = hilb::replay_d5();
  HVector moved;
  for (auto& step : cert2.steps) {
    if (step.check == "lemdi-exclusion") {
      moved = step.eliminates.back();
      step.eliminates.pop_back();
    }
    if (step.check == "force-multidegree") step.eliminates.push_back(moved);
  }
  CHECK_FALSE(hilb::check_certificate(cert2).ok());

  // A survivor swapped for a non-candidate.
  ProofCertificate cert3 = hilb::replay_d5();
  cert3.survivors[0].min_nodes = 15;
  CHECK_FALSE(hilb::check_certificate(cert3).ok());
}

TEST_CASE("the plane-case replay records the 26 > 24 contradiction") {
  ProofCertificate cert = hilb::replay_plane_case();
  CHECK(cert.candidates.empty());
  CHECK(cert.survivors.empty());

  int axioms = 0;
  bool saw_plane_value = false;
  bool saw_sum = false;
  for (const auto& step : cert.steps) {
    if (step.kind == StepKind::Axiom) ++axioms;
    if (step.check == "min-hilbert") {
      REQUIRE(step.find("value"));
      CHECK(*step.find("value") == "20");
      saw_plane_value = true;
    }
    if (step.check == "plane-sum") {
      REQUIRE(step.find("sum"));
      REQUIRE(step.find("cap"));
      REQUIRE(step.find("tail.values"));
      CHECK(*step.find("sum") == "26");
      CHECK(*step.find("cap") == "24");
      CHECK(*step.find("tail.values") == "(3,2,1)");
      saw_sum = true;
    }
  }
  CHECK(axioms == 2);
  CHECK(saw_plane_value);
  CHECK(saw_sum);

  std::string first = cert.serialize();
  CHECK(first == hilb::replay_plane_case().serialize());
  CHECK(first == read_file(golden_path("replay_plane_case.txt")));
}
