#include "hilb/hvector.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilb {

HVector::HVector(std::vector<Int> v) : values(std::move(v)) {
  if (values.empty() || values.front() != 1)
    throw std::invalid_argument("HVector: must start with 1");
  for (const Int& x : values)
    if (x < 0) throw std::invalid_argument("HVector: entries must be >= 0");
}

const Int& HVector::at(long k) const {
  if (k < 0 || k >= static_cast<long>(values.size()))
    throw std::out_of_range("HVector::at");
  return values[static_cast<std::size_t>(k)];
}

Int HVector::total() const {
  Int s = 0;
  for (const Int& x : values) s += x;
  return s;
}

bool HVector::symmetric() const {
  std::size_t n = values.size();
  for (std::size_t k = 0; k < n / 2; ++k)
    if (values[k] != values[n - 1 - k]) return false;
  return true;
}

std::string HVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) os << ',';
    os << values[k];
  }
  os << ')';
  return os.str();
}

Multidegree::Multidegree(std::vector<long> d) : degrees(std::move(d)) {
  if (degrees.empty()) throw std::invalid_argument("Multidegree: empty");
  long prev = 1;
  for (long x : degrees) {
    if (x < prev) throw std::invalid_argument("Multidegree: degrees must be nondecreasing and >= 1");
    prev = x;
  }
}

long Multidegree::sum() const {
  long s = 0;
  for (long x : degrees) s += x;
  return s;
}

std::string Multidegree::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k) os << ',';
    os << degrees[k];
  }
  os << ')';
  return os.str();
}

HVector ci_hvector(const std::vector<long>& degrees, long num_vars) {
  if (static_cast<long>(degrees.size()) != num_vars)
    throw std::invalid_argument("ci_hvector: need exactly one generator degree per variable");
  for (long d : degrees)
    if (d < 1) throw std::invalid_argument("ci_hvector: degrees must be >= 1");
  std::vector<Int> coeff{1};
  for (long d : degrees) {
    std::vector<Int> next(coeff.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t j = 0; j < coeff.size(); ++j)
      for (long t = 0; t < d; ++t) next[j + static_cast<std::size_t>(t)] += coeff[j];
    coeff = std::move(next);
  }
  return HVector(std::move(coeff));
}

namespace {

void extend_half(std::vector<Int>& half, std::size_t mid, const GorensteinConstraints& gc,
                 std::vector<HVector>& out) {
  std::size_t filled = half.size() - 1;  // entries a_1..a_filled chosen
  if (filled == mid) {
    // Complete symmetrically and apply the total cap.
    std::vector<Int> full = half;
    for (std::size_t k = mid; k-- > 0;) full.push_back(half[k]);
    HVector h{std::move(full)};
    if (h.total() <= gc.max_total) out.push_back(std::move(h));
    return;
  }
  const Int prev = half.back();
  Int hi = filled == 0 ? gc.max_a1 : growth_bound(prev, static_cast<long>(filled));
  // Remaining middle entries are at least the current one, so prune on the
  // smallest completion's total.
  for (Int a = filled == 0 ? 1 : prev; a <= hi; ++a) {
    Int mirrored = 0;
    for (std::size_t k = 0; k < half.size(); ++k) mirrored += 2 * half[k];
    std::size_t rest = mid - filled;  // entries still to choose, incl. this one
    Int least = mirrored + a + 2 * a * static_cast<long>(rest - 1);
    if (least > gc.max_total) break;
    half.push_back(a);
    extend_half(half, mid, gc, out);
    half.pop_back();
  }
}

}  // namespace

std::vector<HVector> enumerate_candidate_hvectors(const GorensteinConstraints& gc) {
  if (gc.socle_degree < 2 || gc.socle_degree % 2 != 0)
    throw std::invalid_argument("enumerate_candidate_hvectors: socle degree must be even and >= 2");
  if (gc.max_a1 < 1 || gc.max_total < 1)
    throw std::invalid_argument("enumerate_candidate_hvectors: caps must be positive");
  std::vector<HVector> out;
  std::vector<Int> half{1};
  extend_half(half, static_cast<std::size_t>(gc.socle_degree / 2), gc, out);
  std::sort(out.begin(), out.end());
  return out;
}

LemdiVerdict check_lemdi(long d, const Multidegree& md) {
  if (md.degrees.size() != 4)
    throw std::invalid_argument("check_lemdi: exactly four generator degrees expected");
  if (d < 3) throw std::invalid_argument("check_lemdi: need d >= 3");
  LemdiVerdict v;
  long s = md.sum();
  v.sum_ok = s >= 2 * d;
  v.forces_ci = s == 2 * d;
  v.within_caps = md.largest() <= d - 1;
  return v;
}

Int min_nodes(const HVector& h) { return h.total(); }

}  // namespace hilb
