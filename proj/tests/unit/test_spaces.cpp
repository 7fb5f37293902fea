#include "doctest.h"

#include "finconv/enumerate.hpp"
#include "finconv/filters.hpp"
#include "helpers.hpp"

using namespace finconv;
using finconv::test::space;
using finconv::test::subset;

namespace {

PseudoSpace chain_ab() { return space({"a", "b"}, {{"a", "b"}}); }
PseudoSpace disjoint_chains() { return space({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }
FiniteFunction chains_to_123() {
  return FiniteFunction(disjoint_chains().points(), Carrier({"1", "2", "3"}), {0, 1, 1, 2});
}

// Transitive closure by repeated squaring on plain booleans.
std::vector<std::vector<bool>> closure_oracle(const PseudoSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) r[a][b] = s.converges(a, b);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (r[a][b] && r[b][c] && !r[a][c]) r[a][c] = changed = true;
        }
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("convergence of filters") {
  const PseudoSpace s = chain_ab();
  for (std::size_t x = 0; x < 2; ++x) CHECK(converges(s, FiniteFilter::principal(s.points(), x), x));
  CHECK(converges(s, FiniteFilter::trivial(s.points()), 1));
  CHECK_FALSE(converges(s, FiniteFilter::trivial(s.points()), 0));
  const PseudoSpace ind = PseudoSpace::indiscrete(Carrier::numbered(3));
  for (std::size_t x = 0; x < 3; ++x) CHECK(converges(ind, FiniteFilter::trivial(ind.points()), x));
}

TEST_CASE("continuity examples") {
  const PseudoSpace s = chain_ab();
  const PseudoSpace d = PseudoSpace::discrete(Carrier({"0", "1"}));
  CHECK(is_continuous(SpaceMap::identity(s)));
  CHECK(is_continuous(SpaceMap::constant(s, PseudoSpace::discrete(Carrier({"*"})), 0)));
  const SpaceMap f(s, d, {0, 1});
  CHECK_FALSE(is_continuous(f));
  CHECK(is_continuous_at(f, 0));
  CHECK_FALSE(is_continuous_at(f, 1));
}

TEST_CASE("initial structures") {
  const Carrier two({"0", "1"});
  CHECK(initial_structure(two, {}) == PseudoSpace::indiscrete(two));

  const PseudoSpace x = space({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  const PointSet s = subset(x, {"a", "c"});
  const SpaceMap inc = inclusion(x, s);
  const PseudoSpace sub = subspace(x, s);
  CHECK(initial_structure(sub.points(), {{inc.function(), x}}) == sub);
  CHECK(sub.converges(1, 0));
  CHECK_FALSE(sub.converges(0, 1));

  const PseudoSpace c = chain_ab();
  const PseudoSpace p = product(c, c);
  const auto p0 = projection({c, c}, 0), p1 = projection({c, c}, 1);
  const PseudoSpace init = initial_structure(p.points(), {{p0.function(), c}, {p1.function(), c}});
  CHECK(init == p);
  CHECK(init.converges(p.points().index_of("(a,a)"), p.points().index_of("(b,b)")));
  CHECK_FALSE(init.converges(p.points().index_of("(a,b)"), p.points().index_of("(b,a)")));
}

TEST_CASE("final structure of the disjoint chains is not transitive") {
  const Carrier two({"0", "1"});
  CHECK(final_structure(two, {}) == PseudoSpace::discrete(two));

  const PseudoSpace y = final_structure(chains_to_123().codomain(), {{disjoint_chains(), chains_to_123()}});
  CHECK(y == space({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));
  CHECK_FALSE(y.is_topological());
  CHECK(quotient(disjoint_chains(), chains_to_123()) == y);
  CHECK_THROWS_AS(quotient(disjoint_chains(), FiniteFunction(disjoint_chains().points(), two, {0, 0, 0, 0})),
                  PreconditionError);
}

TEST_CASE("initial is greatest and final is least, by perturbation") {
  // Every structure on n ≤ 3 points for X, Y, and every map: adding an edge to
  // the initial structure breaks continuity, removing one from the final keeps it.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto ys = enumerate_spaces(m, SpaceFilter::All, false);
      for (const auto& f : finconv::test::functions(n, m)) {
        const FiniteFunction fn(Carrier::numbered(n), Carrier::numbered(m), f);
        for (const auto& y : ys) {
          const PseudoSpace init = initial_structure(fn.domain(), {{fn, y}});
          CHECK(finconv::test::edge_preserving(init, y, f));
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t x = 0; x < n; ++x) {
              if (init.converges(a, x)) continue;
              Relation r = init.conv();
              r.set(a, x);
              CHECK_FALSE(finconv::test::edge_preserving(PseudoSpace(fn.domain(), r), y, f));
            }
          }
        }
      }
      for (const auto& x : enumerate_spaces(n, SpaceFilter::All, false)) {
        for (const auto& f : finconv::test::functions(n, m)) {
          const FiniteFunction fn(x.points(), Carrier::numbered(m), f);
          const PseudoSpace fin = final_structure(fn.codomain(), {{x, fn}});
          CHECK(finconv::test::edge_preserving(x, fin, f));
          for (auto [a, b] : fin.edges()) {
            Relation r = fin.conv();
            r.reset(a, b);
            CHECK_FALSE(finconv::test::edge_preserving(x, PseudoSpace(fn.codomain(), r), f));
          }
        }
      }
    }
  }
}

TEST_CASE("products, coproducts and subspaces") {
  const PseudoSpace c = space({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const PseudoSpace one = PseudoSpace::discrete(Carrier({"*"}));
  CHECK(are_isomorphic(product(c, one), c));
  CHECK(subspace(c, subset(c, {"b", "c"})) == space({"b", "c"}, {{"b", "c"}}));

  const PseudoSpace s = chain_ab();
  const PseudoSpace sum = coproduct({s, s});
  CHECK(sum.points().labels() == std::vector<std::string>{"0:a", "0:b", "1:a", "1:b"});
  CHECK(sum.edges().size() == 2);
  CHECK(product(std::vector<PseudoSpace>{}).size() == 1);
}

TEST_CASE("reflection is the transitive closure and opens are predecessor-closed") {
  const PseudoSpace x = space({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const PseudoSpace r = reflect_top(x);
  CHECK(r.converges(0, 2));
  CHECK(r.is_topological());
  std::vector<PointSet> expected{PointSet(3), subset(x, {"a"}), subset(x, {"a", "b"}), PointSet::full(3)};
  CHECK(open_sets(x) == expected);
  CHECK(minimal_open(x, 2) == PointSet::full(3));
  CHECK(reflect_epi(x) == r);
  CHECK_THROWS_AS(reflect_epi_to_top(x), PreconditionError);
  CHECK(reflect_epi_to_top(r) == r);

  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_spaces(n, SpaceFilter::All, false)) {
      const auto oracle = closure_oracle(s);
      const PseudoSpace rs = reflect_top(s);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) CHECK(rs.converges(a, b) == oracle[a][b]);
      }
      CHECK(reflect_top(rs) == rs);
      CHECK((s.is_topological() == (rs == s)));
    }
  }
}

TEST_CASE("lattice operations") {
  const Carrier ab({"a", "b"});
  const PseudoSpace fwd = chain_ab(), back = space({"a", "b"}, {{"b", "a"}});
  CHECK(lattice_meet({fwd, back}) == PseudoSpace::discrete(ab));
  CHECK(lattice_join({fwd, back}) == PseudoSpace::indiscrete(ab));
  CHECK(lattice_meet({fwd, PseudoSpace::discrete(ab)}) == PseudoSpace::discrete(ab));
  CHECK(lattice_join({fwd, PseudoSpace::indiscrete(ab)}) == PseudoSpace::indiscrete(ab));
}

TEST_CASE("quotient maps") {
  const PseudoSpace s = chain_ab();
  CHECK(is_quotient_map(SpaceMap::identity(s)));
  CHECK_FALSE(is_quotient_map(SpaceMap(s, PseudoSpace::discrete(s.points()), {0, 1})));
  const PseudoSpace y = quotient(disjoint_chains(), chains_to_123());
  CHECK(is_quotient_map(SpaceMap(disjoint_chains(), y, chains_to_123())));
  CHECK_FALSE(is_quotient_map(SpaceMap(disjoint_chains(), reflect_top(y), chains_to_123())));
}
