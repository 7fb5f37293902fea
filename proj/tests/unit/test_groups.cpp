#include "doctest.h"

#include <algorithm>

#include "finconv/enumerate.hpp"
#include "finconv/groups.hpp"
#include "helpers.hpp"

using namespace finconv;

namespace {

ConvergenceGroup z2_on_two_point_space() { return cyclic_group(2, finconv::test::sierpinski().conv()); }

// Group axioms straight from the definition, searching for the unit and inverses.
bool is_group_table(std::size_t n, const std::vector<std::size_t>& t) {
  const auto mul = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::size_t a = 0; a < n; ++a) unit = unit && mul(e, a) == a && mul(a, e) == a;
    if (!unit) continue;
    for (std::size_t a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || (mul(a, b) == e && mul(b, a) == e);
      if (!has_inverse) return false;
    }
    return true;
  }
  return false;
}

// The relations a ~ b iff a⁻¹b ∈ H, one for each normal subgroup H.
std::vector<Relation> coset_relations(const ConvergenceGroup& g) {
  const std::size_t n = g.order();
  std::vector<Relation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto in = [&](std::size_t a) { return ((bits >> a) & 1u) != 0; };
    if (!in(g.unit())) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (in(a) && in(b) && !in(g.mul(g.inv(a), b))) ok = false;
        if (in(a) && !in(g.mul(g.mul(b, a), g.inv(b)))) ok = false;
      }
    }
    if (!ok) continue;
    Relation r(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (in(g.mul(g.inv(a), b))) r.set(a, b);
      }
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("two-element group on the two-point space") {
  const ConvergenceGroup g = z2_on_two_point_space();
  CHECK_FALSE(is_pstop_group(g));
  CHECK_FALSE(is_quasitop_group(g));
  CHECK_FALSE(is_top_group(g));
  CHECK(is_continuous(g.inversion_map()));
  CHECK_FALSE(is_continuous(g.multiplication_map()));
}

TEST_CASE("discrete and indiscrete groups are topological groups") {
  const auto groups = small_groups();
  REQUIRE(groups.size() == 8);
  CHECK(small_group_names().size() == 8);
  std::vector<std::size_t> orders;
  for (const auto& g : groups) {
    orders.push_back(g.order());
    CHECK(is_group_table(g.order(), g.mult_table()));
    for (const Relation& r : {Relation::identity(g.order()), Relation::full(g.order())}) {
      const ConvergenceGroup h = g.with_structure(r);
      CHECK(is_pstop_group(h));
      CHECK(is_quasitop_group(h));
      CHECK(is_top_group(h));
    }
  }
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 4, 5, 6, 6});
  const auto& s3 = groups.back();
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  }
  CHECK_FALSE(abelian);
}

TEST_CASE("group tables on labeled carriers: 1, 2, 3") {
  const std::vector<std::size_t> expected{1, 2, 3};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t oracle = 0, accepted = 0;
    for (const auto& t : finconv::test::functions(n * n, n)) {
      const bool group = is_group_table(n, t);
      oracle += group;
      bool built = true;
      try {
        ConvergenceGroup::from_table(PseudoSpace::discrete(Carrier::numbered(n)), t);
      } catch (const PreconditionError&) {
        built = false;
      }
      accepted += built;
      CHECK(built == group);
    }
    CHECK(oracle == expected[n - 1]);
    CHECK(accepted == expected[n - 1]);
  }
}

TEST_CASE("malformed tables are rejected") {
  const PseudoSpace d = PseudoSpace::discrete(Carrier::numbered(2));
  CHECK_THROWS_AS(ConvergenceGroup(d, 0, {0, 1, 1, 0}, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(ConvergenceGroup(d, 1, {0, 1, 1, 0}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(ConvergenceGroup(d, 0, {0, 1, 1, 2}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(ConvergenceGroup(d, 0, {0, 1, 1, 0, 0}, {0, 1}), PreconditionError);
  CHECK_FALSE(satisfies_group_axioms(2, 0, {0, 0, 0, 0}, {0, 0}));
  CHECK(satisfies_group_axioms(2, 0, {0, 1, 1, 0}, {0, 1}));
}

TEST_CASE("pstop structures on groups of order at most four are coset relations") {
  for (const auto& g : small_groups()) {
    if (g.order() > 4) continue;
    const auto cosets = coset_relations(g);
    for (std::uint64_t idx = 0; idx < labeled_space_count(g.order()); ++idx) {
      const ConvergenceGroup h = g.with_structure(space_from_index(g.order(), idx).conv());
      const bool coset = std::find(cosets.begin(), cosets.end(), h.space().conv()) != cosets.end();
      CHECK(is_pstop_group(h) == coset);
      CHECK((is_quasitop_group(h) && is_pstop_group(h)) == is_top_group(h));
    }
  }
}

TEST_CASE("compatible closure is the least pstop structure above the seed") {
  for (const auto& g : small_groups()) {
    if (g.order() > 3) continue;
    const std::size_t n = g.order();
    std::vector<Relation> pstop;
    for (std::uint64_t idx = 0; idx < labeled_space_count(n); ++idx) {
      const Relation r = space_from_index(n, idx).conv();
      if (is_pstop_group(g.with_structure(r))) pstop.push_back(r);
    }
    for (std::uint64_t idx = 0; idx < labeled_space_count(n); ++idx) {
      const Relation seed = space_from_index(n, idx).conv();
      const Relation c = compatible_closure(g, seed);
      CHECK(seed.is_subset_of(c));
      CHECK(is_pstop_group(g.with_structure(c)));
      for (const auto& r : pstop) {
        if (seed.is_subset_of(r)) CHECK(c.is_subset_of(r));
      }
    }
  }
}
