#include "hilb/certificate.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilb/gotzmann.hpp"

namespace hilb {

const std::string* ProofStep::find(std::string_view key) const {
  for (const auto& [k, v] : data)
    if (k == key) return &v;
  return nullptr;
}

namespace {

std::string kind_name(StepKind k) { return k == StepKind::Arithmetic ? "ARITHMETIC" : "AXIOM"; }

StepKind kind_from(const std::string& s) {
  if (s == "ARITHMETIC") return StepKind::Arithmetic;
  if (s == "AXIOM") return StepKind::Axiom;
  throw std::invalid_argument("unknown step kind: " + s);
}

std::string step_key(std::size_t j, std::string_view suffix) {
  return "steps." + std::to_string(j) + "." + std::string(suffix);
}

}  // namespace

std::vector<Int> parse_int_tuple(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("expected parenthesized tuple: " + text);
  std::vector<Int> out;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty tuple entry in: " + text);
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Record ProofCertificate::to_record() const {
  Record r;
  r.add("schema", "certificate/1");
  r.add("target", target);
  r.add("candidates.count", static_cast<long>(candidates.size()));
  for (std::size_t i = 0; i < candidates.size(); ++i)
    r.add("candidates." + std::to_string(i + 1), candidates[i].str());
  r.add("steps.count", static_cast<long>(steps.size()));
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const ProofStep& s = steps[j];
    r.add(step_key(j + 1, "kind"), kind_name(s.kind));
    r.add(step_key(j + 1, "claim"), s.claim);
    r.add(step_key(j + 1, "cite"), s.cite);
    if (s.kind == StepKind::Arithmetic) r.add(step_key(j + 1, "check"), s.check);
    for (const auto& [k, v] : s.data) r.add(step_key(j + 1, "data." + k), v);
    r.add(step_key(j + 1, "eliminates.count"), static_cast<long>(s.eliminates.size()));
    for (std::size_t t = 0; t < s.eliminates.size(); ++t)
      r.add(step_key(j + 1, "eliminates." + std::to_string(t + 1)), s.eliminates[t].str());
    r.add(step_key(j + 1, "verified"), s.verified);
  }
  r.add("survivors.count", static_cast<long>(survivors.size()));
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    std::string k = "survivors." + std::to_string(i + 1);
    r.add(k + ".multidegree", survivors[i].multidegree.str());
    r.add(k + ".hvector", survivors[i].hvector.str());
    r.add(k + ".min_nodes", survivors[i].min_nodes);
  }
  r.add("conclusion", conclusion);
  return r;
}

std::string ProofCertificate::serialize() const { return to_record().serialize(); }

namespace {

HVector hvector_from_text(const std::string& text) { return HVector(parse_int_tuple(text)); }

Multidegree multidegree_from_text(const std::string& text) {
  std::vector<long> degs;
  for (const Int& v : parse_int_tuple(text)) degs.push_back(v.convert_to<long>());
  return Multidegree(degs);
}

}  // namespace

ProofCertificate ProofCertificate::from_record(const Record& r) {
  if (r.get("schema") != "certificate/1")
    throw std::invalid_argument("unsupported certificate schema: " + r.get("schema"));
  ProofCertificate cert;
  cert.target = r.get("target");
  long ncand = Int(r.get("candidates.count")).convert_to<long>();
  for (long i = 1; i <= ncand; ++i)
    cert.candidates.push_back(hvector_from_text(r.get("candidates." + std::to_string(i))));
  long nsteps = Int(r.get("steps.count")).convert_to<long>();
  for (long j = 1; j <= nsteps; ++j) {
    ProofStep s;
    s.kind = kind_from(r.get(step_key(static_cast<std::size_t>(j), "kind")));
    s.claim = r.get(step_key(static_cast<std::size_t>(j), "claim"));
    s.cite = r.get(step_key(static_cast<std::size_t>(j), "cite"));
    if (s.kind == StepKind::Arithmetic) s.check = r.get(step_key(static_cast<std::size_t>(j), "check"));
    std::string data_prefix = step_key(static_cast<std::size_t>(j), "data.");
    for (const auto& [key, value] : r.fields())
      if (key.starts_with(data_prefix)) s.data.emplace_back(key.substr(data_prefix.size()), value);
    long nelim = Int(r.get(step_key(static_cast<std::size_t>(j), "eliminates.count"))).convert_to<long>();
    for (long t = 1; t <= nelim; ++t)
      s.eliminates.push_back(
          hvector_from_text(r.get(step_key(static_cast<std::size_t>(j), "eliminates." + std::to_string(t)))));
    s.verified = r.get(step_key(static_cast<std::size_t>(j), "verified")) == "true";
    cert.steps.push_back(std::move(s));
  }
  long nsurv = Int(r.get("survivors.count")).convert_to<long>();
  for (long i = 1; i <= nsurv; ++i) {
    std::string k = "survivors." + std::to_string(i);
    cert.survivors.push_back(SurvivingCase{multidegree_from_text(r.get(k + ".multidegree")),
                                           hvector_from_text(r.get(k + ".hvector")),
                                           Int(r.get(k + ".min_nodes"))});
  }
  cert.conclusion = r.get("conclusion");
  return cert;
}

// ---------------------------------------------------------------------------
// Independent step re-verification.

namespace {

class StepChecker {
 public:
  StepChecker(const ProofCertificate& cert, CheckResult& out) : cert_(cert), out_(out) {}

  void run() {
    check_structure();
    replay_eliminations();
    for (std::size_t j = 0; j < cert_.steps.size(); ++j) {
      const ProofStep& s = cert_.steps[j];
      if (s.kind != StepKind::Arithmetic) continue;
      try {
        recheck(j + 1, s);
      } catch (const std::exception& e) {
        fail(j + 1, std::string("recheck raised: ") + e.what());
      }
    }
    check_survivors();
  }

 private:
  void fail(std::size_t step, std::string msg) { out_.issues.push_back({step, std::move(msg)}); }

  Int data_int(std::size_t step, const ProofStep& s, std::string_view key) {
    const std::string* v = s.find(key);
    if (!v) {
      fail(step, "missing data field: " + std::string(key));
      throw std::invalid_argument("missing field");
    }
    return Int(*v);
  }

  long data_long(std::size_t step, const ProofStep& s, std::string_view key) {
    return data_int(step, s, key).convert_to<long>();
  }

  void check_structure() {
    for (std::size_t j = 0; j < cert_.steps.size(); ++j) {
      const ProofStep& s = cert_.steps[j];
      if (s.kind == StepKind::Axiom) {
        if (s.cite.empty()) fail(j + 1, "axiom without a source");
        if (s.verified) fail(j + 1, "axiom marked verified");
        if (!s.check.empty()) fail(j + 1, "axiom carries a checker id");
      } else {
        if (!s.verified) fail(j + 1, "arithmetic step not marked verified");
        if (s.check.empty()) fail(j + 1, "arithmetic step without checker id");
      }
    }
    for (std::size_t a = 0; a < cert_.candidates.size(); ++a)
      for (std::size_t b = a + 1; b < cert_.candidates.size(); ++b)
        if (cert_.candidates[a] == cert_.candidates[b]) fail(0, "duplicate candidate " + cert_.candidates[a].str());
  }

  // A step eliminates exactly the still-standing candidates matching its
  // match.* fields (minus a forced h-vector, when one is claimed).
  void replay_eliminations() {
    std::vector<HVector> alive = cert_.candidates;
    for (std::size_t j = 0; j < cert_.steps.size(); ++j) {
      const ProofStep& s = cert_.steps[j];
      bool has_match = false;
      for (const auto& [k, v] : s.data)
        if (k.starts_with("match.")) has_match = true;
      if (!has_match && s.eliminates.empty()) continue;
      if (!has_match) {
        fail(j + 1, "eliminations without a match predicate");
        continue;
      }
      std::vector<HVector> expected;
      for (const HVector& c : alive)
        if (matches(s, c)) expected.push_back(c);
      std::vector<HVector> got = s.eliminates;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (expected != got) {
        fail(j + 1, "eliminated set differs from the candidates matching the step predicate");
        continue;
      }
      std::erase_if(alive, [&](const HVector& c) {
        return std::find(s.eliminates.begin(), s.eliminates.end(), c) != s.eliminates.end();
      });
    }
    std::vector<HVector> rest = alive;
    std::vector<HVector> surv;
    for (const SurvivingCase& sc : cert_.survivors) surv.push_back(sc.hvector);
    std::sort(rest.begin(), rest.end());
    std::sort(surv.begin(), surv.end());
    if (rest != surv) fail(0, "candidates left standing do not equal the surviving cases");
  }

  bool matches(const ProofStep& s, const HVector& c) {
    if (const std::string* a1 = s.find("match.a1")) {
      if (c.values.size() < 2 || c.values[1] != Int(*a1)) return false;
    }
    if (const std::string* a2 = s.find("match.a2")) {
      if (c.values.size() < 3 || c.values[2] != Int(*a2)) return false;
    }
    if (const std::string* a2min = s.find("match.a2_min")) {
      if (c.values.size() < 3 || c.values[2] < Int(*a2min)) return false;
    }
    if (const std::string* forced = s.find("hvector")) {
      if (c == hvector_from_text(*forced)) return false;
    }
    return true;
  }

  void recheck(std::size_t j, const ProofStep& s) {
    if (s.check == "enumerate")
      recheck_enumerate(j, s);
    else if (s.check == "lemdi-exclusion")
      recheck_lemdi_exclusion(j, s);
    else if (s.check == "green-stabilization")
      recheck_green(j, s);
    else if (s.check == "total-lower-bound")
      recheck_total_lower_bound(j, s);
    else if (s.check == "force-multidegree-unique")
      recheck_force_multidegree(j, s, true);
    else if (s.check == "force-multidegree")
      recheck_force_multidegree(j, s, false);
    else if (s.check == "narrow-degrees")
      recheck_narrow_degrees(j, s);
    else if (s.check == "lemdi-survivors")
      recheck_lemdi_survivors(j, s);
    else if (s.check == "min-nodes")
      recheck_min_nodes(j, s);
    else if (s.check == "min-hilbert")
      recheck_min_hilbert(j, s);
    else if (s.check == "plane-sum")
      recheck_plane_sum(j, s);
    else
      fail(j, "unknown checker id: " + s.check);
  }

  void recheck_enumerate(std::size_t j, const ProofStep& s) {
    GorensteinConstraints gc{data_long(j, s, "socle"), data_int(j, s, "max_a1"), data_int(j, s, "max_total")};
    std::vector<HVector> expected = enumerate_candidate_hvectors(gc);
    if (static_cast<long>(expected.size()) != data_long(j, s, "count"))
      fail(j, "candidate count does not recompute");
    if (expected != cert_.candidates) fail(j, "candidate list does not recompute");
  }

  void recheck_lemdi_exclusion(std::size_t j, const ProofStep& s) {
    long d = data_long(j, s, "d");
    long d2 = data_long(j, s, "d2"), d1 = data_long(j, s, "d1"), d0 = data_long(j, s, "d0");
    long dm1_min = data_long(j, s, "dm1_min");
    long cap = data_long(j, s, "cap");
    if (cap != d - 1) fail(j, "cap is not d - 1");
    if (dm1_min != 2 * d - (d2 + d1 + d0)) fail(j, "least remaining degree does not recompute");
    if (dm1_min <= cap) fail(j, "no contradiction: least remaining degree within cap");
    LemdiVerdict v = check_lemdi(d, Multidegree({d2, d1, d0, dm1_min}));
    if (!v.sum_ok || v.within_caps) fail(j, "degree-sequence verdict does not recompute");
  }

  void recheck_green(std::size_t j, const ProofStep& s) {
    Int c = data_int(j, s, "c");
    long d = data_long(j, s, "d");
    Int next = data_int(j, s, "next");
    auto verdict = green_stabilization(c, d, next);
    if (!verdict) {
      fail(j, "stabilization hypotheses do not hold");
      return;
    }
    if (verdict->length != data_int(j, s, "length")) fail(j, "scheme length does not recompute");
    if (!verdict->not_base_point_free_next) fail(j, "base-point flag missing");
    if (data_long(j, s, "not_base_point_free_degree") != d + 1) fail(j, "flagged degree is not d + 1");
  }

  void recheck_total_lower_bound(std::size_t j, const ProofStep& s) {
    Int a1 = data_int(j, s, "match.a1");
    Int a2min = data_int(j, s, "match.a2_min");
    const std::string* comp = s.find("completion");
    if (!comp) {
      fail(j, "missing completion");
      return;
    }
    HVector h = hvector_from_text(*comp);
    std::size_t n = h.values.size();
    if (!h.symmetric() || n < 5) {
      fail(j, "completion is not a symmetric candidate");
      return;
    }
    if (h.values[1] != a1 || a2min < a1) fail(j, "completion does not start (1, a1, a2_min, ...)");
    for (std::size_t k = 2; k + 2 < n; ++k)
      if (h.values[k] != a2min) fail(j, "completion is not the pointwise-least matching vector");
    if (h.total() != data_int(j, s, "total")) fail(j, "completion total does not recompute");
    if (data_int(j, s, "total") <= data_int(j, s, "cap")) fail(j, "total does not exceed the cap");
  }

  void recheck_force_multidegree(std::size_t j, const ProofStep& s, bool unique) {
    const std::string* mdtext = s.find("multidegree");
    const std::string* hvtext = s.find("hvector");
    if (!mdtext || !hvtext) {
      fail(j, "missing multidegree or hvector");
      return;
    }
    Multidegree md = multidegree_from_text(*mdtext);
    if (unique) {
      long d2 = data_long(j, s, "d2"), d1 = data_long(j, s, "d1");
      long sum_min = data_long(j, s, "sum_min"), cap = data_long(j, s, "cap");
      long d0 = data_long(j, s, "d0"), dm1 = data_long(j, s, "dm1");
      std::vector<std::pair<long, long>> solutions;
      for (long x = d1; x <= cap; ++x)
        for (long y = x; y <= cap; ++y)
          if (d2 + d1 + x + y >= sum_min) solutions.emplace_back(x, y);
      if (solutions.size() != 1 || solutions[0] != std::make_pair(d0, dm1))
        fail(j, "claimed top degrees are not the unique admissible choice");
      std::vector<long> composed{d2, d1, d0, dm1};
      std::sort(composed.begin(), composed.end());
      if (composed != md.degrees) fail(j, "multidegree does not match the forced degrees");
    }
    long vars = data_long(j, s, "vars");
    if (data_long(j, s, "sum") != md.sum()) fail(j, "degree sum does not recompute");
    HVector expected = ci_hvector(md.degrees, vars);
    if (expected != hvector_from_text(*hvtext)) fail(j, "complete-intersection h-vector does not recompute");
    if (expected.total() != data_int(j, s, "total")) fail(j, "h-vector total does not recompute");
  }

  void recheck_narrow_degrees(std::size_t j, const ProofStep& s) {
    long d2 = data_long(j, s, "d2"), d1 = data_long(j, s, "d1");
    long sum_min = data_long(j, s, "sum_min"), cap = data_long(j, s, "cap");
    long dm1 = data_long(j, s, "dm1");
    const std::string* choices = s.find("d0_choices");
    if (!choices) {
      fail(j, "missing d0_choices");
      return;
    }
    std::vector<long> claimed;
    for (const Int& v : parse_int_tuple(*choices)) claimed.push_back(v.convert_to<long>());
    std::vector<long> xs;
    bool dm1_always = true;
    for (long x = d1; x <= cap; ++x)
      for (long y = x; y <= cap; ++y)
        if (d2 + d1 + x + y >= sum_min) {
          if (xs.empty() || xs.back() != x) xs.push_back(x);
          if (y != dm1) dm1_always = false;
        }
    if (xs != claimed) fail(j, "claimed d0 range does not recompute");
    if (!dm1_always) fail(j, "top degree is not forced");
  }

  void recheck_lemdi_survivors(std::size_t j, const ProofStep& s) {
    long d = data_long(j, s, "d");
    if (data_long(j, s, "two_d") != 2 * d) fail(j, "2d does not recompute");
    for (std::size_t i = 0; i < cert_.survivors.size(); ++i) {
      std::string prefix = "survivor." + std::to_string(i + 1);
      const std::string* mdtext = s.find(prefix + ".multidegree");
      if (!mdtext) {
        fail(j, "missing " + prefix + ".multidegree");
        continue;
      }
      Multidegree md = multidegree_from_text(*mdtext);
      if (md.degrees != cert_.survivors[i].multidegree.degrees)
        fail(j, prefix + " does not match the surviving case");
      if (md.sum() != data_long(j, s, prefix + ".sum")) fail(j, prefix + " sum does not recompute");
      LemdiVerdict v = check_lemdi(d, md);
      if (!(v.sum_ok && v.forces_ci && v.within_caps)) fail(j, prefix + " does not force the complete intersection");
    }
  }

  void recheck_min_nodes(std::size_t j, const ProofStep& s) {
    for (std::size_t i = 0; i < cert_.survivors.size(); ++i) {
      std::string prefix = "survivor." + std::to_string(i + 1);
      const std::string* hvtext = s.find(prefix + ".hvector");
      if (!hvtext) {
        fail(j, "missing " + prefix + ".hvector");
        continue;
      }
      HVector h = hvector_from_text(*hvtext);
      if (h != cert_.survivors[i].hvector) fail(j, prefix + " h-vector does not match the surviving case");
      if (min_nodes(h) != data_int(j, s, prefix + ".min_nodes")) fail(j, prefix + " node bound does not recompute");
    }
  }

  void recheck_min_hilbert(std::size_t j, const ProofStep& s) {
    long m = data_long(j, s, "m"), d = data_long(j, s, "d");
    if (min_hilbert_for_base_dim(m, d) != data_int(j, s, "value")) fail(j, "plane value does not recompute");
  }

  void recheck_plane_sum(std::size_t j, const ProofStep& s) {
    const std::string* mdtext = s.find("tail.multidegree");
    const std::string* postext = s.find("tail.positions");
    const std::string* valtext = s.find("tail.values");
    if (!mdtext || !postext || !valtext) {
      fail(j, "missing tail data");
      return;
    }
    Multidegree md = multidegree_from_text(*mdtext);
    long vars = data_long(j, s, "tail.vars");
    HVector h = ci_hvector(md.degrees, vars);
    std::vector<Int> positions = parse_int_tuple(*postext);
    std::vector<Int> values = parse_int_tuple(*valtext);
    if (positions.size() != values.size()) {
      fail(j, "tail positions and values differ in length");
      return;
    }
    Int sum = data_int(j, s, "base_value");
    for (std::size_t t = 0; t < positions.size(); ++t) {
      if (h.at(positions[t].convert_to<long>()) != values[t]) fail(j, "tail value does not recompute");
      sum += values[t];
    }
    if (sum != data_int(j, s, "sum")) fail(j, "sum does not recompute");
    if (sum <= data_int(j, s, "cap")) fail(j, "sum does not exceed the cap");
  }

  void check_survivors() {
    for (std::size_t i = 0; i < cert_.survivors.size(); ++i) {
      const SurvivingCase& sc = cert_.survivors[i];
      HVector expected = ci_hvector(sc.multidegree.degrees, static_cast<long>(sc.multidegree.degrees.size()));
      if (expected != sc.hvector) fail(0, "surviving h-vector is not the complete-intersection h-vector");
      if (sc.min_nodes != sc.hvector.total()) fail(0, "surviving node bound is not the h-vector total");
      bool in_pool = cert_.candidates.empty() ||
                     std::find(cert_.candidates.begin(), cert_.candidates.end(), sc.hvector) != cert_.candidates.end();
      if (!in_pool) fail(0, "surviving h-vector is not a candidate");
    }
  }

  const ProofCertificate& cert_;
  CheckResult& out_;
};

}  // namespace

CheckResult check_certificate(const ProofCertificate& cert) {
  CheckResult result;
  StepChecker(cert, result).run();
  return result;
}

}  // namespace hilb
