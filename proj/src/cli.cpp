#include "hilb/cli.hpp"

#include <CLI11.hpp>

#include "hilb/certificate.hpp"
#include "hilb/gotzmann.hpp"
#include "hilb/hvector.hpp"
#include "hilb/macaulay.hpp"
#include "hilb/oracle.hpp"
#include "hilb/record.hpp"
#include "hilb/replay.hpp"

namespace hilb {

namespace {

constexpr const char* kSchema = "hilb/1";
constexpr long kMaxBase = 1000000;        // expansion length cap
constexpr long kMaxIterations = 1000000;  // growth-iteration cap for hilb
constexpr long kMaxSocle = 24;            // enumeration cap
constexpr long kMaxCoeffLen = 1000000;    // ci-hvec coefficient cap

Int parse_int(const std::string& text, const std::string& what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "not an integer: " + text);
  }
}

long parse_small(const std::string& text, const std::string& what, long lo, long hi) {
  Int v = parse_int(text, what);
  if (v < lo || v > hi)
    throw CLI::ValidationError(what, "must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  return v.convert_to<long>();
}

std::string tuple_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i].str();
  }
  s += ')';
  return s;
}

struct Output {
  bool pretty = false;
  std::ostream& out;

  void record(const Record& r) {
    if (!pretty) {
      out << r.serialize();
      return;
    }
    for (const auto& [k, v] : r.fields()) out << k << " = " << v << "\n";
  }
};

void emit_expansion_fields(Record& r, const std::string& prefix, const MacaulayExpansion& ex) {
  r.add(prefix + ".base", ex.base);
  std::string eps = "(";
  for (std::size_t i = 0; i < ex.epsilons.size(); ++i) {
    if (i) eps += ',';
    eps += ex.epsilons[i].str();
  }
  eps += ')';
  r.add(prefix + ".epsilons", eps);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Hilbert-function growth bounds, Gorenstein h-vectors, and replayable case analyses"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of the structured format");

  std::vector<std::string> raw;

  auto* cmd_expand = app.add_subcommand("expand", "Macaulay expansion of c in base d");
  std::string expand_c, expand_d;
  cmd_expand->add_option("c", expand_c, "value to expand, c >= 0")->required();
  cmd_expand->add_option("d", expand_d, "base, d >= 1")->required();

  auto* cmd_grow = app.add_subcommand("grow", "growth bound c^<d> (Macaulay)");
  std::string grow_c, grow_d;
  cmd_grow->add_option("c", grow_c, "value in degree d, c >= 0")->required();
  cmd_grow->add_option("d", grow_d, "degree, d >= 1")->required();

  auto* cmd_oseq = app.add_subcommand("osequence", "O-sequence admissibility of h(0), h(1), ...");
  std::vector<std::string> oseq_h;
  cmd_oseq->add_option("values", oseq_h, "sequence values, h(0) = 1")->required()->expected(-1);

  auto* cmd_persist = app.add_subcommand("persist", "maximal-growth persistence from degree d (Gotzmann)");
  std::string persist_cd, persist_cd1, persist_d;
  cmd_persist->add_option("c_d", persist_cd, "value in degree d")->required();
  cmd_persist->add_option("c_d1", persist_cd1, "value in degree d+1")->required();
  cmd_persist->add_option("d", persist_d, "degree, d >= 1")->required();

  auto* cmd_hilb = app.add_subcommand("hilb", "evaluate the persistent Hilbert function of (c, d) at degree k");
  std::string hilb_c, hilb_d, hilb_k;
  cmd_hilb->add_option("c", hilb_c, "value in degree d")->required();
  cmd_hilb->add_option("d", hilb_d, "base degree, d >= 1")->required();
  cmd_hilb->add_option("k", hilb_k, "evaluation degree, k >= d")->required();

  auto* cmd_ci = app.add_subcommand("ci-hvec", "h-vector of a complete intersection with the given degrees");
  std::vector<std::string> ci_degrees;
  std::string ci_vars;
  cmd_ci->add_option("degrees", ci_degrees, "generator degrees, each >= 1")->required()->expected(-1);
  cmd_ci->add_option("--vars", ci_vars, "number of variables (must equal the number of degrees)")->required();

  auto* cmd_enum = app.add_subcommand("enum-gorenstein",
                                      "symmetric unimodal candidate h-vectors under the given caps");
  std::string enum_socle, enum_a1, enum_total;
  cmd_enum->add_option("socle", enum_socle, "socle degree, even and >= 2")->required();
  cmd_enum->add_option("max-a1", enum_a1, "cap on h(1)")->required();
  cmd_enum->add_option("max-total", enum_total, "cap on the total")->required();

  auto* cmd_lemdi = app.add_subcommand("lemdi", "degree-sequence constraints for the generator degrees");
  std::string lemdi_d;
  std::vector<std::string> lemdi_degrees;
  cmd_lemdi->add_option("d", lemdi_d, "hypersurface degree, d >= 3")->required();
  cmd_lemdi->add_option("degrees", lemdi_degrees, "four nondecreasing generator degrees")->required()->expected(4);

  auto* cmd_replay = app.add_subcommand("replay", "replay a case analysis and print its certificate");
  std::string replay_which;
  cmd_replay->add_option("analysis", replay_which, "d5 | plane-case")->required();

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force verification on monomial ideals");
  std::string oracle_which, oracle_mode = "exhaustive";
  std::string oracle_n, oracle_d, oracle_c = "0", oracle_horizon = "5";
  std::string oracle_seed = "37", oracle_samples = "200000";
  cmd_oracle->add_option("suite", oracle_which, "macaulay | gotzmann")->required();
  cmd_oracle->add_option("--vars", oracle_n, "number of variables")->required();
  cmd_oracle->add_option("--degree", oracle_d, "degree d")->required();
  cmd_oracle->add_option("--codim", oracle_c, "codimension (gotzmann)");
  cmd_oracle->add_option("--horizon", oracle_horizon, "degrees past d to count (gotzmann)");
  cmd_oracle->add_option("--mode", oracle_mode, "exhaustive | random (macaulay)");
  cmd_oracle->add_option("--seed", oracle_seed, "sampling seed (macaulay, random mode)");
  cmd_oracle->add_option("--samples", oracle_samples, "sample count (macaulay, random mode)");

  std::vector<const char*> argv;
  argv.push_back("hilb");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Output o{pretty, out};
  try {
    if (*cmd_expand) {
      Int c = parse_int(expand_c, "c");
      long d = parse_small(expand_d, "d", 1, kMaxBase);
      if (c < 0) throw CLI::ValidationError("c", "must be >= 0");
      MacaulayExpansion ex = macaulay_expansion(c, d);
      Record r;
      r.add("schema", kSchema);
      r.add("command", "expand");
      r.add("input.c", c);
      r.add("input.d", d);
      emit_expansion_fields(r, "result", ex);
      r.add("result.value", ex.value());
      o.record(r);
    } else if (*cmd_grow) {
      Int c = parse_int(grow_c, "c");
      long d = parse_small(grow_d, "d", 1, kMaxBase);
      if (c < 0) throw CLI::ValidationError("c", "must be >= 0");
      Record r;
      r.add("schema", kSchema);
      r.add("command", "grow");
      r.add("input.c", c);
      r.add("input.d", d);
      r.add("result.value", growth_bound(c, d));
      o.record(r);
    } else if (*cmd_oseq) {
      std::vector<Int> h;
      for (const std::string& t : oseq_h) h.push_back(parse_int(t, "h"));
      if (h.empty() || h.front() != 1) throw CLI::ValidationError("h", "h(0) must equal 1");
      for (const Int& v : h)
        if (v < 0) throw CLI::ValidationError("h", "entries must be >= 0");
      OSequenceResult res = is_o_sequence(h);
      Record r;
      r.add("schema", kSchema);
      r.add("command", "osequence");
      r.add("input.h", tuple_str(h));
      r.add("result.admissible", res.admissible);
      if (res.violation_index) r.add("result.violation_index", static_cast<long>(*res.violation_index));
      o.record(r);
    } else if (*cmd_persist) {
      Int cd = parse_int(persist_cd, "c_d");
      Int cd1 = parse_int(persist_cd1, "c_d1");
      long d = parse_small(persist_d, "d", 1, kMaxBase);
      if (cd < 0 || cd1 < 0) throw CLI::ValidationError("c_d", "values must be >= 0");
      PersistenceVerdict v = persistence_check(cd, cd1, d);
      Record r;
      r.add("schema", kSchema);
      r.add("command", "persist");
      r.add("input.c_d", cd);
      r.add("input.c_d1", cd1);
      r.add("input.d", d);
      r.add("result.persists", v.persists);
      r.add("result.bound", growth_bound(cd, d));
      if (v.persists) {
        r.add("result.dimension", v.dimension);
        MacaulayExpansion ex = macaulay_expansion(cd, d);
        emit_expansion_fields(r, "result.polynomial", ex);
      }
      o.record(r);
    } else if (*cmd_hilb) {
      Int c = parse_int(hilb_c, "c");
      long d = parse_small(hilb_d, "d", 1, kMaxBase);
      Int k = parse_int(hilb_k, "k");
      if (c < 0) throw CLI::ValidationError("c", "must be >= 0");
      if (k < d) throw CLI::ValidationError("k", "must be >= d");
      if (k - d > kMaxIterations) throw CLI::ValidationError("k", "k - d exceeds the iteration cap");
      ExpansionPolynomial poly = ExpansionPolynomial::from_expansion(macaulay_expansion(c, d));
      Record r;
      r.add("schema", kSchema);
      r.add("command", "hilb");
      r.add("input.c", c);
      r.add("input.d", d);
      r.add("input.k", k);
      r.add("result.value", poly.evaluate(k));
      o.record(r);
    } else if (*cmd_ci) {
      std::vector<long> degrees;
      long coeff_len = 1;
      for (const std::string& t : ci_degrees) {
        long v = parse_small(t, "degrees", 1, kMaxCoeffLen);
        coeff_len += v - 1;
        if (coeff_len > kMaxCoeffLen) throw CLI::ValidationError("degrees", "socle degree exceeds the cap");
        degrees.push_back(v);
      }
      long vars = parse_small(ci_vars, "vars", 1, kMaxCoeffLen);
      if (vars != static_cast<long>(degrees.size()))
        throw CLI::ValidationError("vars", "must equal the number of generator degrees");
      HVector h = ci_hvector(degrees, vars);
      Record r;
      r.add("schema", kSchema);
      r.add("command", "ci-hvec");
      std::string ds = "(";
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) ds += ',';
        ds += std::to_string(degrees[i]);
      }
      ds += ')';
      r.add("input.degrees", ds);
      r.add("input.vars", vars);
      r.add("result.hvector", h.str());
      r.add("result.total", h.total());
      r.add("result.socle_degree", h.socle_degree());
      o.record(r);
    } else if (*cmd_enum) {
      long socle = parse_small(enum_socle, "socle", 2, kMaxSocle);
      Int max_a1 = parse_int(enum_a1, "max-a1");
      Int max_total = parse_int(enum_total, "max-total");
      if (socle % 2 != 0) throw CLI::ValidationError("socle", "must be even");
      if (max_a1 < 1 || max_total < 1) throw CLI::ValidationError("max-a1", "caps must be >= 1");
      std::vector<HVector> hs = enumerate_candidate_hvectors({socle, max_a1, max_total});
      Record r;
      r.add("schema", kSchema);
      r.add("command", "enum-gorenstein");
      r.add("input.socle", socle);
      r.add("input.max_a1", max_a1);
      r.add("input.max_total", max_total);
      r.add("result.count", static_cast<long>(hs.size()));
      for (std::size_t i = 0; i < hs.size(); ++i)
        r.add("result.hvector." + std::to_string(i + 1), hs[i].str());
      o.record(r);
    } else if (*cmd_lemdi) {
      long d = parse_small(lemdi_d, "d", 3, kMaxBase);
      std::vector<long> degrees;
      for (const std::string& t : lemdi_degrees) degrees.push_back(parse_small(t, "degrees", 1, kMaxBase));
      Multidegree md(degrees);
      LemdiVerdict v = check_lemdi(d, md);
      Record r;
      r.add("schema", kSchema);
      r.add("command", "lemdi");
      r.add("input.d", d);
      r.add("input.degrees", md.str());
      r.add("result.sum", md.sum());
      r.add("result.two_d", 2 * d);
      r.add("result.sum_ok", v.sum_ok);
      r.add("result.forces_ci", v.forces_ci);
      r.add("result.within_caps", v.within_caps);
      o.record(r);
    } else if (*cmd_replay) {
      ProofCertificate cert;
      if (replay_which == "d5")
        cert = replay_d5();
      else if (replay_which == "plane-case")
        cert = replay_plane_case();
      else
        throw CLI::ValidationError("analysis", "must be d5 or plane-case");
      o.record(cert.to_record());
    } else if (*cmd_oracle) {
      long n = parse_small(oracle_n, "vars", 1, 16);
      long d = parse_small(oracle_d, "degree", 1, 64);
      if (oracle_which == "macaulay") {
        MacaulayBoundOptions opt;
        if (oracle_mode == "exhaustive")
          opt.mode = OracleMode::Exhaustive;
        else if (oracle_mode == "random")
          opt.mode = OracleMode::Randomized;
        else
          throw CLI::ValidationError("mode", "must be exhaustive or random");
        opt.seed = static_cast<std::uint64_t>(parse_small(oracle_seed, "seed", 0, kMaxCoeffLen));
        opt.samples = static_cast<std::uint64_t>(parse_small(oracle_samples, "samples", 1, 100000000));
        MacaulayBoundReport rep = verify_macaulay_bound(static_cast<int>(n), d, opt);
        o.record(rep.record);
      } else if (oracle_which == "gotzmann") {
        Int c = parse_int(oracle_c, "codim");
        long horizon = parse_small(oracle_horizon, "horizon", 1, 72);
        if (c < 0) throw CLI::ValidationError("codim", "must be >= 0");
        GotzmannLexReport rep = verify_gotzmann_on_lex(static_cast<int>(n), d, c, horizon);
        o.record(rep.record);
      } else {
        throw CLI::ValidationError("suite", "must be macaulay or gotzmann");
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace hilb
