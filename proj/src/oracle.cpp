#include "hilb/oracle.hpp"

#include <array>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "hilb/gotzmann.hpp"

namespace hilb {

namespace {

// Bitmask over the degree-(d+1) basis; 256 bits covers every supported run.
using Mask = std::array<std::uint64_t, 4>;

constexpr Mask kEmptyMask{0, 0, 0, 0};

void set_bit(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

Mask mask_or(const Mask& a, const Mask& b) {
  return {a[0] | b[0], a[1] | b[1], a[2] | b[2], a[3] | b[3]};
}

int mask_popcount(const Mask& m) {
  return std::popcount(m[0]) + std::popcount(m[1]) + std::popcount(m[2]) + std::popcount(m[3]);
}

struct ProductTable {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Mask> products;  // products[i] = bits of basis[i] * each variable
};

ProductTable build_product_table(int n, long d) {
  std::vector<Monomial> source = monomial_basis(n, d);
  std::vector<Monomial> target = monomial_basis(n, d + 1);
  if (target.size() > 256)
    throw std::invalid_argument("verify_macaulay_bound: degree-(d+1) basis exceeds the 256-monomial cap");
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t j = 0; j < target.size(); ++j) index.emplace(target[j].exps, j);
  ProductTable t;
  t.source_dim = source.size();
  t.target_dim = target.size();
  t.products.assign(source.size(), kEmptyMask);
  for (std::size_t i = 0; i < source.size(); ++i)
    for (int v = 0; v < n; ++v) set_bit(t.products[i], index.at(source[i].times_var(v).exps));
  return t;
}

struct SubspaceStats {
  std::uint64_t tested = 0;
  std::uint64_t violations = 0;
  std::vector<std::uint64_t> attaining;     // per codim
  std::vector<std::uint64_t> seen;          // per codim
  std::vector<Record> counterexamples_raw;  // unused fields folded into report directly
};

// growth_bound values fit comfortably in 64 bits at these sizes.
std::vector<std::uint64_t> growth_table(std::size_t source_dim, long d) {
  std::vector<std::uint64_t> g(source_dim + 1);
  for (std::size_t c = 0; c <= source_dim; ++c)
    g[c] = growth_bound(Int(static_cast<long>(c)), d).convert_to<std::uint64_t>();
  return g;
}

void visit_subset(const ProductTable& t, const std::vector<std::uint64_t>& bound,
                  std::size_t i, std::size_t kept, const Mask& mask, SubspaceStats& s,
                  std::vector<std::pair<std::uint64_t, std::uint64_t>>& bad) {
  if (i == t.source_dim) {
    std::size_t c = t.source_dim - kept;
    std::uint64_t grown = t.target_dim - static_cast<std::uint64_t>(mask_popcount(mask));
    ++s.tested;
    ++s.seen[c];
    if (grown > bound[c]) {
      ++s.violations;
      if (bad.size() < 16) bad.emplace_back(c, grown);
    } else if (grown == bound[c]) {
      ++s.attaining[c];
    }
    return;
  }
  visit_subset(t, bound, i + 1, kept, mask, s, bad);
  visit_subset(t, bound, i + 1, kept + 1, mask_or(mask, t.products[i]), s, bad);
}

}  // namespace

MacaulayBoundReport verify_macaulay_bound(int n, long d, const MacaulayBoundOptions& opt) {
  if (n < 1 || d < 1) throw std::invalid_argument("verify_macaulay_bound: need n >= 1 and d >= 1");
  ProductTable t = build_product_table(n, d);
  const std::size_t D = t.source_dim;
  std::vector<std::uint64_t> bound = growth_table(D, d);

  bool exhaustive = opt.mode == OracleMode::Exhaustive && D <= static_cast<std::size_t>(opt.max_exhaustive_dim);

  SubspaceStats stats;
  stats.attaining.assign(D + 1, 0);
  stats.seen.assign(D + 1, 0);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;

  if (exhaustive) {
    visit_subset(t, bound, 0, 0, kEmptyMask, stats, bad);
  } else {
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      Mask mask = kEmptyMask;
      std::size_t kept = 0;
      std::uint64_t word = 0;
      for (std::size_t i = 0; i < D; ++i) {
        if (i % 64 == 0) word = rng();
        if (word >> (i % 64) & 1) {
          mask = mask_or(mask, t.products[i]);
          ++kept;
        }
      }
      std::size_t c = D - kept;
      std::uint64_t grown = t.target_dim - static_cast<std::uint64_t>(mask_popcount(mask));
      ++stats.tested;
      ++stats.seen[c];
      if (grown > bound[c]) {
        ++stats.violations;
        if (bad.size() < 16) bad.emplace_back(c, grown);
      } else if (grown == bound[c]) {
        ++stats.attaining[c];
      }
    }
  }

  // Lex segments, every codimension: prefix monomials span the segment.
  std::vector<std::uint64_t> lex_growth(D + 1);
  {
    Mask mask = kEmptyMask;
    lex_growth[D] = t.target_dim;  // empty segment
    for (std::size_t kept = 1; kept <= D; ++kept) {
      mask = mask_or(mask, t.products[kept - 1]);
      lex_growth[D - kept] = t.target_dim - static_cast<std::uint64_t>(mask_popcount(mask));
    }
  }
  bool lex_all = true;
  for (std::size_t c = 0; c <= D; ++c)
    if (lex_growth[c] != bound[c]) lex_all = false;

  MacaulayBoundReport rep;
  rep.subspaces_tested = stats.tested;
  rep.violations = stats.violations;
  rep.lex_attains_all = lex_all;
  rep.exhaustive = exhaustive;

  Record& r = rep.record;
  r.add("schema", "oracle-report/1");
  r.add("operation", "macaulay-bound");
  r.add("vars", static_cast<long>(n));
  r.add("degree", d);
  r.add("source.dim", static_cast<long>(D));
  r.add("target.dim", static_cast<long>(t.target_dim));
  r.add("note", "subspaces restricted to monomial spans");
  r.add("mode", exhaustive ? "exhaustive" : "randomized");
  if (!exhaustive) {
    r.add("seed", Int(opt.seed));
    r.add("samples", Int(opt.samples));
  }
  r.add("subspaces.tested", Int(stats.tested));
  r.add("violations", Int(stats.violations));
  for (std::size_t c = 0; c <= D; ++c) {
    std::string k = "codim." + std::to_string(c);
    r.add(k + ".bound", Int(bound[c]));
    r.add(k + ".lex_growth", Int(lex_growth[c]));
    r.add(k + ".lex_attains", lex_growth[c] == bound[c]);
    r.add(k + ".attaining", Int(stats.attaining[c]));
    r.add(k + ".seen", Int(stats.seen[c]));
  }
  for (std::size_t i = 0; i < bad.size(); ++i) {
    std::string k = "counterexample." + std::to_string(i + 1);
    r.add(k + ".codim", Int(bad[i].first));
    r.add(k + ".grown_codim", Int(bad[i].second));
  }
  r.add("lex.attains_all", lex_all);
  r.add("verdict", rep.pass() ? "pass" : "fail");
  return rep;
}

GotzmannLexReport verify_gotzmann_on_lex(int n, long d, const Int& c, long horizon) {
  if (n < 1 || d < 1 || horizon < 1)
    throw std::invalid_argument("verify_gotzmann_on_lex: need n >= 1, d >= 1, horizon >= 1");
  if (horizon > d + 8)
    throw std::invalid_argument("verify_gotzmann_on_lex: horizon cap is d + 8");
  if (binom(Int(d + horizon + n - 1), Int(n - 1)) > 2000000)
    throw std::invalid_argument("verify_gotzmann_on_lex: top-degree basis exceeds the enumeration budget");
  LexSegment ls{n, d, c};
  MonomialIdeal I = lex_segment_ideal(ls);

  GotzmannLexReport rep;
  for (long k = d; k <= d + horizon; ++k) rep.counts.push_back(standard_monomial_count(I, k));

  ExpansionPolynomial poly = ExpansionPolynomial::from_expansion(macaulay_expansion(c, d));
  rep.matches_polynomial = true;
  for (long k = d; k <= d + horizon; ++k)
    if (poly.evaluate(k) != rep.counts[static_cast<std::size_t>(k - d)]) rep.matches_polynomial = false;
  for (long k = d; k < d + horizon; ++k) {
    const Int& here = rep.counts[static_cast<std::size_t>(k - d)];
    const Int& next = rep.counts[static_cast<std::size_t>(k - d + 1)];
    if (next != growth_bound(here, k)) ++rep.recurrence_failures;
  }
  rep.persists = persistence_check(rep.counts[0], rep.counts[1], d).persists;
  if (c <= d) {
    rep.stabilizes_to_constant = true;
    for (const Int& v : rep.counts)
      if (v != c) rep.stabilizes_to_constant = false;
  }

  Record& r = rep.record;
  r.add("schema", "oracle-report/1");
  r.add("operation", "gotzmann-lex");
  r.add("vars", static_cast<long>(n));
  r.add("degree", d);
  r.add("codim", c);
  r.add("horizon", horizon);
  r.add("segment.size", static_cast<long>(lex_segment_span(ls).size()));
  r.add("ideal.generators", static_cast<long>(I.generators.size()));
  for (long k = d; k <= d + horizon; ++k) {
    std::string key = "degree." + std::to_string(k);
    r.add(key + ".count", rep.counts[static_cast<std::size_t>(k - d)]);
    r.add(key + ".polynomial", poly.evaluate(k));
  }
  r.add("recurrence.failures", Int(rep.recurrence_failures));
  r.add("polynomial.matches", rep.matches_polynomial);
  r.add("persists", rep.persists);
  if (c <= d) r.add("stabilizes.constant", rep.stabilizes_to_constant);
  r.add("verdict", rep.pass() ? "pass" : "fail");
  return rep;
}

}  // namespace hilb
