#include <doctest.h>

#include <vector>

#include "hilb/gotzmann.hpp"

using hilb::ExpansionPolynomial;
using hilb::Int;

TEST_CASE("persistence verdicts") {
  auto v = hilb::persistence_check(4, 4, 4);
  CHECK(v.persists);
  CHECK(v.dimension == 0);
  REQUIRE(v.hilbert_polynomial.has_value());
  CHECK(v.hilbert_polynomial->evaluate(10) == 4);

  auto empty = hilb::persistence_check(0, 0, 3);
  CHECK(empty.persists);
  CHECK(empty.dimension == -1);

  auto no = hilb::persistence_check(5, 6, 2);
  CHECK_FALSE(no.persists);  // the bound is 7
  CHECK_FALSE(no.hilbert_polynomial.has_value());
}

TEST_CASE("expansion polynomial evaluation") {
  ExpansionPolynomial plane = ExpansionPolynomial::from_expansion(hilb::macaulay_expansion(20, 3));
  CHECK(plane.evaluate(3) == 20);
  CHECK(plane.evaluate(4) == 35);  // binom(7, 3)
  CHECK(plane.evaluate(5) == 56);

  ExpansionPolynomial zero{4, {Int(-1), Int(-1), Int(-1), Int(-1)}};
  for (long k = 4; k <= 12; ++k) CHECK(zero.evaluate(k) == 0);

  ExpansionPolynomial constant = ExpansionPolynomial::from_expansion(hilb::macaulay_expansion(4, 4));
  for (long k = 4; k <= 12; ++k) CHECK(constant.evaluate(k) == 4);

  CHECK_THROWS_AS(plane.evaluate(2), std::invalid_argument);
}

TEST_CASE("iterated growth equals the closed form over a dense range") {
  // evaluate() recomputes both routes internally and throws on mismatch.
  for (long d = 1; d <= 6; ++d)
    for (long c = 0; c <= 200; c += (c < 20 ? 1 : 7))
      for (long k = d; k <= d + 10; ++k) {
        ExpansionPolynomial p = ExpansionPolynomial::from_expansion(hilb::macaulay_expansion(c, d));
        CHECK_NOTHROW(p.evaluate(k));
      }
}

namespace {

// One forward-difference pass: (v_0, ..., v_m) -> (v_1 - v_0, ...).
std::vector<Int> differences(const std::vector<Int>& v) {
  std::vector<Int> out;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

}  // namespace

TEST_CASE("reported dimension is the degree of the polynomial") {
  for (long d = 1; d <= 5; ++d)
    for (long c = 0; c <= 60; ++c) {
      auto v = hilb::persistence_check(c, hilb::growth_bound(c, d), d);
      REQUIRE(v.persists);
      if (v.dimension == -1) {
        CHECK(v.hilbert_polynomial->evaluate(d) == 0);
        continue;
      }
      long deg = v.dimension.convert_to<long>();
      if (deg > 8) continue;  // keep the difference table small
      std::vector<Int> vals;
      for (long k = d; k <= d + deg + 2; ++k) vals.push_back(v.hilbert_polynomial->evaluate(k));
      for (long order = 0; order < deg; ++order) vals = differences(vals);
      // Order deg: constant and nonzero. One more pass: identically zero.
      REQUIRE(vals.size() == 3);
      CHECK(vals[0] != 0);
      CHECK(vals[0] == vals[1]);
      CHECK(vals[1] == vals[2]);
      vals = differences(vals);
      CHECK(vals[0] == 0);
      CHECK(vals[1] == 0);
    }
}

TEST_CASE("least degree-d value for a base locus of dimension m") {
  CHECK(hilb::min_hilbert_for_base_dim(3, 3) == 20);
  CHECK(hilb::min_hilbert_for_base_dim(2, 4) == 15);
  for (long d = 1; d <= 9; ++d) CHECK(hilb::min_hilbert_for_base_dim(0, d) == 1);
  CHECK_THROWS_AS(hilb::min_hilbert_for_base_dim(-1, 3), std::invalid_argument);
}

TEST_CASE("zero-dimensional stabilization verdicts") {
  auto v = hilb::green_stabilization(4, 4, 4);
  REQUIRE(v.has_value());
  CHECK(v->length == 4);
  CHECK(v->not_base_point_free_next);

  auto zero = hilb::green_stabilization(0, 2, 0);
  REQUIRE(zero.has_value());
  CHECK(zero->length == 0);

  CHECK_FALSE(hilb::green_stabilization(5, 4, 5).has_value());  // c > d
  CHECK_FALSE(hilb::green_stabilization(3, 4, 4).has_value());  // next != c
  CHECK_THROWS_AS(hilb::green_stabilization(-1, 4, 0), std::invalid_argument);
}
