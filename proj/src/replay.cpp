#include "hilb/replay.hpp"

#include <algorithm>
#include <stdexcept>

#include "hilb/gotzmann.hpp"

namespace hilb {

namespace {

constexpr long kDegree = 5;        // quintic
constexpr long kSocle = 6;         // 2d - 4
constexpr long kMaxA1 = 4;         // embedding dimension of the hyperplane section
constexpr long kMaxNodes = 24;     // 2(d-2)(d-1)
constexpr long kDegreeCap = 4;     // d - 1, from base-point-freeness in degree d-1

std::vector<HVector> take_matching(std::vector<HVector>& alive, auto&& pred) {
  std::vector<HVector> taken;
  for (const HVector& h : alive)
    if (pred(h)) taken.push_back(h);
  std::erase_if(alive, pred);
  return taken;
}

ProofStep arithmetic(std::string claim, std::string cite, std::string check) {
  ProofStep s;
  s.kind = StepKind::Arithmetic;
  s.claim = std::move(claim);
  s.cite = std::move(cite);
  s.check = std::move(check);
  s.verified = true;
  return s;
}

ProofStep axiom(std::string claim, std::string cite) {
  ProofStep s;
  s.kind = StepKind::Axiom;
  s.claim = std::move(claim);
  s.cite = std::move(cite);
  s.verified = false;
  return s;
}

HVector minimal_completion(long a1, long a2) {
  std::vector<Int> v(static_cast<std::size_t>(kSocle) + 1, Int(a2));
  v.front() = 1;
  v.back() = 1;
  v[1] = a1;
  v[static_cast<std::size_t>(kSocle) - 1] = a1;
  return HVector(std::move(v));
}

}  // namespace

ProofCertificate replay_d5() {
  ProofCertificate cert;
  cert.target =
      "socle-degree-6 Gorenstein quotient attached to a non-factorial nodal quintic threefold "
      "with at most 24 nodes: the defining ideal is a complete intersection of multidegree "
      "(1,1,4,4) or (1,2,3,4)";

  GorensteinConstraints gc{kSocle, Int(kMaxA1), Int(kMaxNodes)};
  cert.candidates = enumerate_candidate_hvectors(gc);
  std::vector<HVector> alive = cert.candidates;

  // 1. Candidate pool.
  {
    ProofStep s = arithmetic(
        "enumerate the symmetric candidate h-vectors (1,a1,a2,a3,a2,a1,1) with 1 <= a1 <= a2 <= a3, "
        "a1 <= 4, total <= 24, whose increasing half is an admissible O-sequence",
        "Macaulay growth bound applied degree by degree; unimodality in this range after "
        "Migliore-Nagel-Zanello",
        "enumerate");
    s.data.emplace_back("socle", std::to_string(kSocle));
    s.data.emplace_back("max_a1", std::to_string(kMaxA1));
    s.data.emplace_back("max_total", std::to_string(kMaxNodes));
    s.data.emplace_back("count", std::to_string(cert.candidates.size()));
    cert.steps.push_back(std::move(s));
  }

  // 2.-3. a1 = 1 is impossible.
  cert.steps.push_back(
      axiom("if a1 = 1 then I contains three independent linear forms, the base locus of |I_1| is a "
            "point, and d2 = d1 = d0 = 1",
            "base locus of three independent hyperplanes in P^3"));
  {
    ProofStep s = arithmetic(
        "a1 = 1 is impossible: the degree sum must reach 10, so the last generator degree would be "
        "at least 7, above the cap d - 1 = 4",
        "degree sum of the embedded complete intersection is at least 2d; top degree at most d - 1",
        "lemdi-exclusion");
    s.data.emplace_back("match.a1", "1");
    s.data.emplace_back("d", std::to_string(kDegree));
    s.data.emplace_back("d2", "1");
    s.data.emplace_back("d1", "1");
    s.data.emplace_back("d0", "1");
    s.data.emplace_back("dm1_min", "7");
    s.data.emplace_back("cap", std::to_string(kDegreeCap));
    s.eliminates = take_matching(alive, [](const HVector& h) { return h.values[1] == 1; });
    cert.steps.push_back(std::move(s));
  }

  // 4.-5. a1 = 4, a2 = 4 is impossible.
  {
    auto verdict = green_stabilization(4, 4, 4);
    if (!verdict) throw std::logic_error("replay_d5: stabilization verdict missing");
    ProofStep s = arithmetic(
        "if a1 = a2 = 4 then h(4) = h(5) = 4 with 4 <= 4, so V(I) is a zero-dimensional scheme of "
        "length 4 and |I_5| has a base point",
        "persistence of maximal growth; constant small values give a finite scheme (Gotzmann)",
        "green-stabilization");
    s.data.emplace_back("c", "4");
    s.data.emplace_back("d", "4");
    s.data.emplace_back("next", "4");
    s.data.emplace_back("length", verdict->length.str());
    s.data.emplace_back("not_base_point_free_degree", "5");
    cert.steps.push_back(std::move(s));
  }
  {
    ProofStep s = axiom(
        "a1 = 4, a2 = 4 is impossible: the degree-4 part of I is base point free by construction, "
        "so its base locus cannot be a nonempty finite scheme",
        "base-point-freeness of the degree-(d-1) system cut out by the partial derivatives");
    s.data.emplace_back("match.a1", "4");
    s.data.emplace_back("match.a2", "4");
    s.eliminates = take_matching(alive, [](const HVector& h) { return h.values[1] == 4 && h.values[2] == 4; });
    cert.steps.push_back(std::move(s));
  }

  // 6. a1 = 4, a2 >= 5 is impossible (already absent from the pool).
  {
    HVector comp = minimal_completion(4, 5);
    ProofStep s = arithmetic(
        "a1 = 4, a2 >= 5 is impossible: the pointwise-least symmetric unimodal completion already "
        "totals 25 > 24",
        "the quotient dimension is a lower bound for the node count",
        "total-lower-bound");
    s.data.emplace_back("match.a1", "4");
    s.data.emplace_back("match.a2_min", "5");
    s.data.emplace_back("completion", comp.str());
    s.data.emplace_back("total", comp.total().str());
    s.data.emplace_back("cap", std::to_string(kMaxNodes));
    s.eliminates = take_matching(alive, [](const HVector& h) { return h.values[1] == 4 && h.values[2] >= 5; });
    cert.steps.push_back(std::move(s));
  }

  // 7. a1 = 3, a2 >= 6 is impossible (already absent from the pool).
  {
    HVector comp = minimal_completion(3, 6);
    ProofStep s = arithmetic(
        "a1 = 3, a2 >= 6 is impossible: the pointwise-least symmetric unimodal completion already "
        "totals 26 > 24",
        "the quotient dimension is a lower bound for the node count",
        "total-lower-bound");
    s.data.emplace_back("match.a1", "3");
    s.data.emplace_back("match.a2_min", "6");
    s.data.emplace_back("completion", comp.str());
    s.data.emplace_back("total", comp.total().str());
    s.data.emplace_back("cap", std::to_string(kMaxNodes));
    s.eliminates = take_matching(alive, [](const HVector& h) { return h.values[1] == 3 && h.values[2] >= 6; });
    cert.steps.push_back(std::move(s));
  }

  // 8.-9. a1 = 2 forces the complete intersection (1,1,4,4).
  cert.steps.push_back(
      axiom("if a1 = 2 then I contains two independent linear forms, so d2 = d1 = 1",
            "base locus of a pencil of hyperplanes in P^3 is a line"));
  Multidegree md_first({1, 1, 4, 4});
  HVector h_first = ci_hvector(md_first.degrees, 4);
  {
    ProofStep s = arithmetic(
        "a1 = 2 forces multidegree (1,1,4,4): with d2 = d1 = 1 the caps d0 <= dm1 <= 4 and the sum "
        "bound 10 leave only d0 = dm1 = 4; the sum 10 = 2d makes I the complete intersection, whose "
        "h-vector is (1,2,3,4,3,2,1)",
        "equal socle degrees force the quotient to coincide with the complete intersection",
        "force-multidegree-unique");
    s.data.emplace_back("match.a1", "2");
    s.data.emplace_back("d2", "1");
    s.data.emplace_back("d1", "1");
    s.data.emplace_back("sum_min", std::to_string(2 * kDegree));
    s.data.emplace_back("cap", std::to_string(kDegreeCap));
    s.data.emplace_back("d0", "4");
    s.data.emplace_back("dm1", "4");
    s.data.emplace_back("multidegree", md_first.str());
    s.data.emplace_back("vars", "4");
    s.data.emplace_back("sum", std::to_string(md_first.sum()));
    s.data.emplace_back("hvector", h_first.str());
    s.data.emplace_back("total", h_first.total().str());
    s.eliminates = take_matching(alive, [&](const HVector& h) { return h.values[1] == 2 && !(h == h_first); });
    cert.steps.push_back(std::move(s));
  }

  // 10.-13. a1 = 3 forces the complete intersection (1,2,3,4).
  cert.steps.push_back(
      axiom("if a1 = 3 and a2 < 6 then I contains one linear form and an irreducible degree-2 "
            "generator, so d2 = 1 and d1 = 2",
            "the base locus of |I_2| drops to a curve exactly when a quadric generator appears"));
  {
    ProofStep s = arithmetic(
        "with d2 = 1, d1 = 2 the sum bound 10 and the caps leave dm1 = 4 and d0 in {3,4}",
        "degree sum at least 2d with d0 <= dm1 <= d - 1",
        "narrow-degrees");
    s.data.emplace_back("d2", "1");
    s.data.emplace_back("d1", "2");
    s.data.emplace_back("sum_min", std::to_string(2 * kDegree));
    s.data.emplace_back("cap", std::to_string(kDegreeCap));
    s.data.emplace_back("d0_choices", "(3,4)");
    s.data.emplace_back("dm1", "4");
    cert.steps.push_back(std::move(s));
  }
  cert.steps.push_back(
      axiom("d0 = 4 is impossible when a1 = 3: a relation of minimal degree among the linear form, "
            "the extra generator, and the quartics would force the colon form to divide the quadric",
            "first syzygy of a length-3 regular sequence sits in degree deg(x0) + deg(F)"));
  Multidegree md_second({1, 2, 3, 4});
  HVector h_second = ci_hvector(md_second.degrees, 4);
  {
    ProofStep s = arithmetic(
        "a1 = 3 forces multidegree (1,2,3,4); the sum 10 = 2d makes I the complete intersection, "
        "whose h-vector is (1,3,5,6,5,3,1)",
        "equal socle degrees force the quotient to coincide with the complete intersection",
        "force-multidegree");
    s.data.emplace_back("match.a1", "3");
    s.data.emplace_back("multidegree", md_second.str());
    s.data.emplace_back("vars", "4");
    s.data.emplace_back("sum", std::to_string(md_second.sum()));
    s.data.emplace_back("hvector", h_second.str());
    s.data.emplace_back("total", h_second.total().str());
    s.eliminates = take_matching(alive, [&](const HVector& h) { return h.values[1] == 3 && !(h == h_second); });
    cert.steps.push_back(std::move(s));
  }

  cert.survivors.push_back({md_first, h_first, min_nodes(h_first)});
  cert.survivors.push_back({md_second, h_second, min_nodes(h_second)});

  // 14. Both survivors really are complete intersections.
  {
    ProofStep s = arithmetic(
        "both surviving multidegrees have degree sum 10 = 2d, so each ideal is the complete "
        "intersection itself",
        "equality case of the degree-sum bound",
        "lemdi-survivors");
    s.data.emplace_back("d", std::to_string(kDegree));
    s.data.emplace_back("two_d", std::to_string(2 * kDegree));
    for (std::size_t i = 0; i < cert.survivors.size(); ++i) {
      std::string prefix = "survivor." + std::to_string(i + 1);
      s.data.emplace_back(prefix + ".multidegree", cert.survivors[i].multidegree.str());
      s.data.emplace_back(prefix + ".sum", std::to_string(cert.survivors[i].multidegree.sum()));
    }
    cert.steps.push_back(std::move(s));
  }

  // 15. Node-count lower bounds.
  {
    ProofStep s = arithmetic("the h-vector totals bound the node count: 16 and 24",
                             "the number of nodes is at least the sum of the h-vector values",
                             "min-nodes");
    for (std::size_t i = 0; i < cert.survivors.size(); ++i) {
      std::string prefix = "survivor." + std::to_string(i + 1);
      s.data.emplace_back(prefix + ".hvector", cert.survivors[i].hvector.str());
      s.data.emplace_back(prefix + ".min_nodes", cert.survivors[i].min_nodes.str());
    }
    cert.steps.push_back(std::move(s));
  }

  if (alive.size() != 2)
    throw std::logic_error("replay_d5: expected exactly the two complete-intersection h-vectors to survive");

  cert.conclusion =
      "surviving cases: complete intersection (1,1,4,4) with h-vector (1,2,3,4,3,2,1) and at least "
      "16 nodes, and complete intersection (1,2,3,4) with h-vector (1,3,5,6,5,3,1) and at least 24 nodes";
  return cert;
}

ProofCertificate replay_plane_case() {
  ProofCertificate cert;
  cert.target =
      "multidegree (1,1,4,4) forces a plane: the base locus of the cubic system through the nodes "
      "is a surface containing a plane";

  cert.steps.push_back(
      axiom("the base locus B of the cubics through the nodes meets a general hyperplane in a line, "
            "so B has a component of dimension at least 2",
            "general hyperplane section of the base locus; in the (1,1,4,4) case the degree-3 part "
            "of I cuts out a line"));

  Int plane_value = min_hilbert_for_base_dim(3, 3);
  {
    ProofStep s = arithmetic(
        "a base locus of dimension at least 3 would force value at least 20 in degree 3, the value "
        "of a 3-plane",
        "lower bound binom(d + m, d) when the base locus has dimension m",
        "min-hilbert");
    s.data.emplace_back("m", "3");
    s.data.emplace_back("d", "3");
    s.data.emplace_back("value", plane_value.str());
    cert.steps.push_back(std::move(s));
  }

  {
    HVector h = ci_hvector({1, 1, 4, 4}, 4);
    ProofStep s = arithmetic(
        "20 + 3 + 2 + 1 = 26 > 24: a three-dimensional component contradicts the node cap, so B has "
        "dimension exactly 2",
        "the node count dominates the partial sum; the tail 3, 2, 1 is read off the (1,1,4,4) "
        "h-vector at positions 4, 5, 6",
        "plane-sum");
    s.data.emplace_back("base_value", plane_value.str());
    s.data.emplace_back("tail.multidegree", "(1,1,4,4)");
    s.data.emplace_back("tail.vars", "4");
    s.data.emplace_back("tail.positions", "(4,5,6)");
    s.data.emplace_back("tail.values",
                        "(" + h.at(4).str() + "," + h.at(5).str() + "," + h.at(6).str() + ")");
    Int sum = plane_value + h.at(4) + h.at(5) + h.at(6);
    s.data.emplace_back("sum", sum.str());
    s.data.emplace_back("cap", std::to_string(kMaxNodes));
    cert.steps.push_back(std::move(s));
  }

  cert.steps.push_back(
      axiom("the line in the hyperplane section of B lies on the hyperplane section of X, so the "
            "two-dimensional component of B is a plane contained in X",
            "Noether-Lefschetz theory applied to the general hyperplane section"));

  cert.conclusion =
      "the base locus of the cubic system is a surface containing a plane, and X contains that plane";
  return cert;
}

}  // namespace hilb
