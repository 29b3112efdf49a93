#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hilb/hvector.hpp"

using hilb::GorensteinConstraints;
using hilb::HVector;
using hilb::Int;
using hilb::Multidegree;

namespace {

HVector hv(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return HVector(std::move(v));
}

}  // namespace

TEST_CASE("complete-intersection h-vectors") {
  HVector a = hilb::ci_hvector({1, 1, 4, 4}, 4);
  CHECK(a == hv({1, 2, 3, 4, 3, 2, 1}));
  CHECK(a.total() == 16);
  CHECK(a.socle_degree() == 6);

  HVector b = hilb::ci_hvector({1, 2, 3, 4}, 4);
  CHECK(b == hv({1, 3, 5, 6, 5, 3, 1}));
  CHECK(b.total() == 24);

  CHECK(hilb::ci_hvector({1, 1, 1, 1}, 4) == hv({1}));

  CHECK_THROWS_AS(hilb::ci_hvector({2, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(hilb::ci_hvector({0, 1}, 2), std::invalid_argument);
}

TEST_CASE("ci h-vectors are palindromic, total the degree product, and are O-sequences") {
  for (long e2 = 1; e2 <= 5; ++e2)
    for (long e1 = e2; e1 <= 5; ++e1)
      for (long e0 = e1; e0 <= 5; ++e0)
        for (long em = e0; em <= 5; ++em) {
          HVector h = hilb::ci_hvector({e2, e1, e0, em}, 4);
          REQUIRE(h.symmetric());
          REQUIRE(h.total() == Int(e2) * e1 * e0 * em);
          REQUIRE(h.socle_degree() == e2 + e1 + e0 + em - 4);
          REQUIRE(hilb::is_o_sequence(h.values).admissible);
        }
}

TEST_CASE("candidate enumeration for socle degree 6, a1 <= 4, total <= 24") {
  std::vector<HVector> got = hilb::enumerate_candidate_hvectors({6, Int(4), Int(24)});

  std::vector<HVector> expected = {
      hv({1, 1, 1, 1, 1, 1, 1}), hv({1, 2, 2, 2, 2, 2, 1}), hv({1, 2, 3, 3, 3, 2, 1}),
      hv({1, 2, 3, 4, 3, 2, 1}), hv({1, 3, 3, 3, 3, 3, 1}), hv({1, 3, 3, 4, 3, 3, 1}),
      hv({1, 3, 4, 4, 4, 3, 1}), hv({1, 3, 4, 5, 4, 3, 1}), hv({1, 3, 5, 5, 5, 3, 1}),
      hv({1, 3, 5, 6, 5, 3, 1}), hv({1, 4, 4, 4, 4, 4, 1}), hv({1, 4, 4, 5, 4, 4, 1}),
  };
  CHECK(got == expected);

  // Independent brute force over the full grid, applying each predicate.
  std::set<std::vector<Int>> brute;
  for (long a1 = 1; a1 <= 11; ++a1)
    for (long a2 = 1; a2 <= 11; ++a2)
      for (long a3 = 1; a3 <= 11; ++a3) {
        if (!(1 <= a1 && a1 <= a2 && a2 <= a3)) continue;  // unimodal half
        if (a1 > 4) continue;                              // a1 cap
        std::vector<Int> v{1, a1, a2, a3, a2, a1, 1};
        Int total = 0;
        for (const Int& x : v) total += x;
        if (total > 24) continue;  // total cap
        std::vector<Int> half{1, a1, a2, a3};
        if (!hilb::is_o_sequence(half).admissible) continue;
        brute.insert(v);
      }
  REQUIRE(brute.size() == got.size());
  for (const HVector& h : got) REQUIRE(brute.count(h.values) == 1);

  // Every emitted vector passes each predicate on its own.
  for (const HVector& h : got) {
    REQUIRE(h.values.size() == 7);
    CHECK(h.symmetric());
    CHECK(h.values[1] <= 4);
    CHECK(h.values[1] >= 1);
    CHECK(h.values[1] <= h.values[2]);
    CHECK(h.values[2] <= h.values[3]);
    CHECK(h.total() <= 24);
    std::vector<Int> half(h.values.begin(), h.values.begin() + 4);
    CHECK(hilb::is_o_sequence(half).admissible);
  }

  // The two complete-intersection h-vectors sit in the a1 = 2, 3 band.
  bool has_first = std::find(got.begin(), got.end(), hv({1, 2, 3, 4, 3, 2, 1})) != got.end();
  bool has_second = std::find(got.begin(), got.end(), hv({1, 3, 5, 6, 5, 3, 1})) != got.end();
  CHECK(has_first);
  CHECK(has_second);
}

TEST_CASE("candidate enumeration with a1 capped at 1") {
  std::vector<HVector> got = hilb::enumerate_candidate_hvectors({6, Int(1), Int(24)});
  REQUIRE(got.size() == 1);
  CHECK(got[0] == hv({1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("candidate enumeration rejects odd socle degrees") {
  CHECK_THROWS_AS(hilb::enumerate_candidate_hvectors({5, Int(3), Int(20)}), std::invalid_argument);
  CHECK_THROWS_AS(hilb::enumerate_candidate_hvectors({6, Int(0), Int(20)}), std::invalid_argument);
}

TEST_CASE("degree-sequence constraints") {
  auto v1 = hilb::check_lemdi(5, Multidegree({1, 1, 4, 4}));
  CHECK(v1.sum_ok);
  CHECK(v1.forces_ci);
  CHECK(v1.within_caps);

  auto v2 = hilb::check_lemdi(5, Multidegree({1, 1, 1, 7}));
  CHECK(v2.sum_ok);
  CHECK_FALSE(v2.within_caps);

  auto v3 = hilb::check_lemdi(5, Multidegree({1, 2, 3, 4}));
  CHECK(v3.sum_ok);
  CHECK(v3.forces_ci);
  CHECK(v3.within_caps);

  auto v4 = hilb::check_lemdi(5, Multidegree({1, 1, 2, 4}));
  CHECK_FALSE(v4.sum_ok);
  CHECK_FALSE(v4.forces_ci);

  CHECK_THROWS_AS(hilb::check_lemdi(5, Multidegree({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(hilb::check_lemdi(2, Multidegree({1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Multidegree({2, 1, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Multidegree({0, 1, 3, 4}), std::invalid_argument);
}

TEST_CASE("node-count lower bound is the h-vector total") {
  CHECK(hilb::min_nodes(hv({1, 2, 3, 4, 3, 2, 1})) == 16);
  CHECK(hilb::min_nodes(hv({1})) == 1);
  CHECK(hilb::min_nodes(hv({1, 3, 5, 6, 5, 3, 1})) == 24);
}

TEST_CASE("h-vector validation") {
  CHECK_THROWS_AS(HVector(std::vector<Int>{}), std::invalid_argument);
  CHECK_THROWS_AS(HVector(std::vector<Int>{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HVector(std::vector<Int>{1, -1}), std::invalid_argument);
  CHECK(hv({1, 2, 1}).symmetric());
  CHECK_FALSE(hv({1, 2, 2}).symmetric());
  CHECK(hv({1, 2, 3}).str() == "(1,2,3)");
}
