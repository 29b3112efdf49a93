#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hilb/cli.hpp"
#include "hilb/record.hpp"
#include "hilb/replay.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hilb::cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

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

TEST_CASE("grow emits the documented envelope") {
  auto r = run({"grow", "4", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "schema: hilb/1\n"
        "command: grow\n"
        "input.c: 4\n"
        "input.d: 4\n"
        "result.value: 4\n");
  CHECK(r.err.empty());
}

TEST_CASE("expand, osequence, persist, hilb, lemdi, ci-hvec envelopes") {
  CHECK(run({"expand", "20", "3"}).out == read_file(golden_path("cli_expand.txt")));
  CHECK(run({"osequence", "1", "2", "4"}).out == read_file(golden_path("cli_osequence.txt")));
  CHECK(run({"persist", "20", "35", "3"}).out == read_file(golden_path("cli_persist.txt")));
  CHECK(run({"hilb", "20", "3", "5"}).out == read_file(golden_path("cli_hilb.txt")));
  CHECK(run({"lemdi", "5", "1", "1", "4", "4"}).out == read_file(golden_path("cli_lemdi.txt")));
  CHECK(run({"ci-hvec", "1", "2", "3", "4", "--vars", "4"}).out ==
        read_file(golden_path("cli_ci_hvec.txt")));
}

TEST_CASE("ci-hvec reports the h-vector and total") {
  auto r = run({"ci-hvec", "1", "2", "3", "4", "--vars", "4"});
  REQUIRE(r.code == 0);
  hilb::Record rec = hilb::Record::parse(r.out);
  CHECK(rec.get("result.hvector") == "(1,3,5,6,5,3,1)");
  CHECK(rec.get("result.total") == "24");
  CHECK(rec.get("result.socle_degree") == "6");
}

TEST_CASE("enum-gorenstein lists the twelve candidates") {
  auto r = run({"enum-gorenstein", "6", "4", "24"});
  REQUIRE(r.code == 0);
  hilb::Record rec = hilb::Record::parse(r.out);
  CHECK(rec.get("result.count") == "12");
  CHECK(rec.get("result.hvector.4") == "(1,2,3,4,3,2,1)");
  CHECK(rec.get("result.hvector.10") == "(1,3,5,6,5,3,1)");
}

TEST_CASE("replay subcommands write the full certificates") {
  auto r = run({"replay", "d5"});
  REQUIRE(r.code == 0);
  CHECK(r.out == hilb::replay_d5().serialize());

  auto p = run({"replay", "plane-case"});
  REQUIRE(p.code == 0);
  CHECK(p.out == hilb::replay_plane_case().serialize());
}

TEST_CASE("oracle subcommands write reports") {
  auto r = run({"oracle", "macaulay", "--vars", "3", "--degree", "2"});
  REQUIRE(r.code == 0);
  hilb::Record rec = hilb::Record::parse(r.out);
  CHECK(rec.get("verdict") == "pass");
  CHECK(rec.get("subspaces.tested") == "64");

  auto g = run({"oracle", "gotzmann", "--vars", "4", "--degree", "3", "--codim", "20",
                "--horizon", "3"});
  REQUIRE(g.code == 0);
  hilb::Record grec = hilb::Record::parse(g.out);
  CHECK(grec.get("degree.4.count") == "35");
  CHECK(grec.get("verdict") == "pass");
}

TEST_CASE("every envelope re-serializes byte-identically") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"expand", "0", "4"},
           {"grow", "5", "2"},
           {"osequence", "1", "3", "5", "6", "5", "3", "1"},
           {"persist", "5", "6", "2"},
           {"hilb", "4", "4", "9"},
           {"ci-hvec", "1", "1", "4", "4", "--vars", "4"},
           {"enum-gorenstein", "6", "1", "24"},
           {"lemdi", "5", "1", "1", "1", "7"},
           {"replay", "plane-case"},
           {"oracle", "macaulay", "--vars", "2", "--degree", "3"},
           {"oracle", "macaulay", "--vars", "4", "--degree", "4", "--mode", "random", "--seed",
            "7", "--samples", "100"},
           {"oracle", "gotzmann", "--vars", "3", "--degree", "2", "--codim", "2", "--horizon", "4"},
       }) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(hilb::Record::parse(r.out).serialize() == r.out);
  }
}

TEST_CASE("usage errors exit with code 2 and a diagnostic") {
  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());

  auto bad_d = run({"expand", "5", "0"});
  CHECK(bad_d.code == 2);
  CHECK(bad_d.err.find("d") != std::string::npos);

  auto bad_h = run({"osequence", "2", "1"});
  CHECK(bad_h.code == 2);
  CHECK(bad_h.err.find("h(0)") != std::string::npos);

  auto bad_vars = run({"ci-hvec", "1", "2", "--vars", "3"});
  CHECK(bad_vars.code == 2);

  auto bad_k = run({"hilb", "4", "4", "2"});
  CHECK(bad_k.code == 2);

  auto bad_analysis = run({"replay", "nonsense"});
  CHECK(bad_analysis.code == 2);

  auto garbage = run({"grow", "four", "4"});
  CHECK(garbage.code == 2);

  CHECK(run({}).code == 2);
}

TEST_CASE("help text lists every subcommand") {
  auto r = run({"--help"});
  REQUIRE(r.code == 0);
  for (const char* name : {"expand", "grow", "osequence", "persist", "hilb", "ci-hvec",
                           "enum-gorenstein", "lemdi", "replay", "oracle"})
    CHECK_MESSAGE(r.out.find(name) != std::string::npos, name);
}

TEST_CASE("pretty mode renders without error") {
  auto r = run({"--pretty", "grow", "5", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("result.value = 7") != std::string::npos);
}

TEST_CASE("huge inputs stay exact") {
  auto r = run({"grow", "123456789012345678901234567890", "2"});
  REQUIRE(r.code == 0);
  hilb::Record rec = hilb::Record::parse(r.out);
  // Cross-checked against the library directly.
  CHECK(rec.get("result.value") ==
        hilb::growth_bound(hilb::Int("123456789012345678901234567890"), 2).str());
}
