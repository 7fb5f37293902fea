#include "doctest.h"

#include <algorithm>

#include "finconv/enumerate.hpp"
#include "helpers.hpp"

using namespace finconv;

TEST_CASE("labeled topology counts") {
  const std::vector<std::uint64_t> expected{1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(count_spaces(n, SpaceFilter::Topological, false) == expected[n]);
  CHECK(count_spaces(3, SpaceFilter::All, false) == 64);
}

TEST_CASE("counts up to isomorphism") {
  const std::vector<std::uint64_t> top{1, 1, 3, 9, 33};
  const std::vector<std::uint64_t> all{1, 1, 3, 16, 218};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(count_spaces(n, SpaceFilter::Topological, true) == top[n]);
    CHECK(count_spaces(n, SpaceFilter::All, true) == all[n]);
  }
}

TEST_CASE("index encoding") {
  for (std::uint64_t i = 0; i < labeled_space_count(3); ++i) CHECK(space_index(space_from_index(3, i)) == i);
  const PseudoSpace s = space_from_index(2, 2);  // bit 1: 1 -> 0
  CHECK(s.converges(1, 0));
  CHECK_FALSE(s.converges(0, 1));
  CHECK(canonical_index(s) == 1);
  CHECK_THROWS_AS(count_spaces(6, SpaceFilter::All, false), PreconditionError);
  CHECK_THROWS_AS(count_spaces(5, SpaceFilter::All, true), PreconditionError);
}

TEST_CASE("canonical index is an isomorphism invariant") {
  for (std::uint64_t i = 0; i < labeled_space_count(3); ++i) {
    for (std::uint64_t j = 0; j < labeled_space_count(3); ++j) {
      const PseudoSpace a = space_from_index(3, i), b = space_from_index(3, j);
      CHECK((canonical_index(a) == canonical_index(b)) == are_isomorphic(a, b));
    }
  }
}

TEST_CASE("function enumeration") {
  CHECK(all_functions(3, 2).size() == 8);
  CHECK(all_functions(0, 0).size() == 1);
  CHECK(all_functions(2, 0).empty());
  CHECK(all_functions(2, 3) == finconv::test::functions(2, 3));
  CHECK(all_surjections(4, 2).size() == 14);
  CHECK(all_surjections(4, 3).size() == 36);
}

TEST_CASE("random streams depend only on seed and index") {
  Rng a = instance_rng(7, 3), b = instance_rng(7, 3), c = instance_rng(7, 4);
  const auto x = a(), y = b(), z = c();
  CHECK(x == y);
  CHECK(x != z);
  Rng r = instance_rng(1, 0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + uniform(r, 5);
    const PseudoSpace s = random_space(r, n);
    const PseudoSpace t = random_topology(r, n);
    CHECK(t.is_topological());
    const auto f = random_surjection(r, n, 1 + uniform(r, n));
    CHECK(FiniteFunction(Carrier::numbered(n), Carrier::numbered(*std::max_element(f.begin(), f.end()) + 1), f)
              .is_surjective());
    const auto g = random_continuous_map(r, s, t);
    REQUIRE(g);
    CHECK(is_continuous(s, t, *g));
  }
  CHECK_THROWS_AS(random_surjection(r, 2, 3), PreconditionError);
  CHECK_FALSE(random_continuous_map(r, PseudoSpace::discrete(Carrier::numbered(1)), PseudoSpace()).has_value());
}
