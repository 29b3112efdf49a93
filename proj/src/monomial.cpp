#include "hilb/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb {

long Monomial::degree() const {
  long d = 0;
  for (int e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (exps.size() != m.exps.size()) throw std::invalid_argument("Monomial::divides: variable count mismatch");
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > m.exps[i]) return false;
  return true;
}

Monomial Monomial::times_var(int v) const {
  Monomial m = *this;
  m.exps.at(static_cast<std::size_t>(v)) += 1;
  return m;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (any) os << '*';
    os << 'x' << i;
    if (exps[i] > 1) os << '^' << exps[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

MonomialIdeal MonomialIdeal::make(int num_vars, std::vector<Monomial> gens) {
  if (num_vars < 1) throw std::invalid_argument("MonomialIdeal: need at least one variable");
  for (const Monomial& g : gens)
    if (static_cast<int>(g.exps.size()) != num_vars)
      throw std::invalid_argument("MonomialIdeal: generator variable count mismatch");
  // Keep only divisibility-minimal generators; drop duplicates.
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : gens) {
      if (&h == &g) continue;
      if (h.divides(g) && !(g == h)) { redundant = true; break; }
    }
    if (!redundant && std::find(minimal.begin(), minimal.end(), g) == minimal.end())
      minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), lex_greater);
  return MonomialIdeal{num_vars, std::move(minimal)};
}

bool MonomialIdeal::contains_monomial(const Monomial& m) const {
  for (const Monomial& g : generators)
    if (g.divides(m)) return true;
  return false;
}

namespace {

void basis_rec(int n, long d, std::vector<int>& acc, std::vector<Monomial>& out) {
  if (static_cast<int>(acc.size()) == n - 1) {
    acc.push_back(static_cast<int>(d));
    out.push_back(Monomial{acc});
    acc.pop_back();
    return;
  }
  for (long e = d; e >= 0; --e) {
    acc.push_back(static_cast<int>(e));
    basis_rec(n, d - e, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, long d) {
  if (n < 1 || d < 0) throw std::invalid_argument("monomial_basis: need n >= 1 and d >= 0");
  std::vector<Monomial> out;
  std::vector<int> acc;
  basis_rec(n, d, acc, out);
  return out;
}

Int standard_monomial_count(const MonomialIdeal& I, long k) {
  if (k < 0) throw std::invalid_argument("standard_monomial_count: degree must be >= 0");
  Int count = 0;
  for (const Monomial& m : monomial_basis(I.num_vars, k))
    if (!I.contains_monomial(m)) ++count;
  return count;
}

std::vector<Monomial> lex_segment_span(const LexSegment& ls) {
  std::vector<Monomial> basis = monomial_basis(ls.num_vars, ls.degree);
  Int dim = static_cast<long>(basis.size());
  if (ls.codim < 0 || ls.codim > dim)
    throw std::invalid_argument("lex_segment_span: codimension out of range");
  std::size_t keep = (dim - ls.codim).convert_to<std::size_t>();
  basis.resize(keep);
  return basis;
}

MonomialIdeal lex_segment_ideal(const LexSegment& ls) {
  return MonomialIdeal::make(ls.num_vars, lex_segment_span(ls));
}

}  // namespace hilb
