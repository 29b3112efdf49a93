#include "hilb/bigint.hpp"

#include <stdexcept>

namespace hilb {

Int binom(const Int& n, const Int& k) {
  if (k < 0 || n < 0) return 0;
  if (k > n) return 0;
  Int m = k <= n - k ? k : n - k;
  if (m == 0) return 1;
  if (m > Int(std::numeric_limits<unsigned long long>::max()))
    throw std::invalid_argument("binom: index too large to iterate");
  const auto steps = m.convert_to<unsigned long long>();
  // Multiplicative form: the running product is divisible by j at step j.
  Int result = 1;
  for (unsigned long long j = 1; j <= steps; ++j) {
    result *= n - m + j;
    result /= j;
  }
  return result;
}

Int binom_shifted(const Int& e, long i, const Int& k) {
  (void)i;
  if (e < 0) return 0;
  if (e + k < 0) return 0;
  return binom(e + k, e);
}

Int BinomialTerm::value() const {
  return binom(Int(lower_index) + top_offset, Int(lower_index));
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace hilb
