#include "doctest.h"

#include "finconv/enumerate.hpp"
#include "finconv/exponentials.hpp"
#include "finconv/groups.hpp"
#include "helpers.hpp"

using namespace finconv;
using finconv::test::edge_preserving;
using finconv::test::functions;
using finconv::test::sierpinski;

namespace {

// Map space built from scratch: continuous maps by brute force, edges by the
// literal convergence test over all pairs of domain points.
struct NaiveExp {
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::vector<bool>> edge;
};

NaiveExp naive_exponential(const PseudoSpace& x, const PseudoSpace& y) {
  NaiveExp e;
  for (const auto& f : functions(x.size(), y.size())) {
    if (edge_preserving(x, y, f)) e.maps.push_back(f);
  }
  const std::size_t k = e.maps.size();
  e.edge.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      bool ok = true;
      for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = 0; b < x.size(); ++b) {
          if (x.converges(a, b) && !y.converges(e.maps[i][a], e.maps[j][b])) ok = false;
        }
      }
      e.edge[i][j] = ok;
    }
  }
  return e;
}

std::size_t naive_hom_count(const PseudoSpace& z, const NaiveExp& e) {
  std::size_t count = 0;
  for (const auto& k : functions(z.size(), e.maps.size())) {
    bool ok = true;
    for (std::size_t a = 0; a < z.size(); ++a) {
      for (std::size_t b = 0; b < z.size(); ++b) {
        if (z.converges(a, b) && !e.edge[k[a]][k[b]]) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("maps of the two-point space into itself") {
  const PseudoSpace s = sierpinski();
  const auto maps = continuous_maps(s, s);
  CHECK(maps == std::vector<Assignment>{{0, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(is_continuous(s, s, {1, 0}));
}

TEST_CASE("the self map space of the two-point space is a three-chain") {
  const PseudoSpace s = sierpinski();
  const MapSpace e = exponential(s, s);
  const PseudoSpace& m = e.structure();
  REQUIRE(m.size() == 3);
  CHECK(m.points().labels() == std::vector<std::string>{"[0|0]", "[0|1]", "[1|1]"});
  CHECK(m.converges(0, 1));
  CHECK(m.converges(1, 2));
  CHECK(m.converges(0, 2));
  CHECK_FALSE(m.converges(1, 0));
  CHECK_FALSE(m.converges(2, 1));
  CHECK_FALSE(m.converges(2, 0));
  CHECK(m.is_topological());
}

TEST_CASE("frozen exponential-law count for the two-point space") {
  const PseudoSpace s = sierpinski();
  // independent double enumeration
  const PseudoSpace ss = product(s, s);
  std::size_t lhs = 0;
  for (const auto& h : functions(4, 2)) lhs += edge_preserving(ss, s, h);
  const std::size_t rhs = naive_hom_count(s, naive_exponential(s, s));
  // monotone Boolean functions of two variables; monotone maps from a 2-chain to a 3-chain
  CHECK(lhs == 6);
  CHECK(rhs == 6);
  CHECK(continuous_maps(ss, s).size() == 6);
  CHECK(continuous_maps(s, exponential(s, s).structure()).size() == 6);
}

TEST_CASE("exponential matches the naive construction on all small pairs") {
  for (std::size_t n = 0; n <= 2; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (const auto& x : enumerate_spaces(n, SpaceFilter::All, false)) {
        for (const auto& y : enumerate_spaces(m, SpaceFilter::All, false)) {
          const MapSpace e = exponential(x, y);
          const NaiveExp naive = naive_exponential(x, y);
          REQUIRE(e.maps() == naive.maps);
          for (std::size_t i = 0; i < naive.maps.size(); ++i) {
            for (std::size_t j = 0; j < naive.maps.size(); ++j) CHECK(e.structure().converges(i, j) == naive.edge[i][j]);
          }
        }
      }
    }
  }
}

TEST_CASE("curry and uncurry are inverse and evaluation is continuous") {
  const PseudoSpace s = sierpinski();
  const MapSpace e = exponential(s, s);
  const SpaceMap ev = evaluation_map(e);
  CHECK(is_continuous(ev));
  const PseudoSpace zx = product(s, s);
  for (const auto& h : continuous_maps(zx, s)) {
    const SpaceMap hm(zx, s, h);
    const SpaceMap k = curry(hm, s, e);
    CHECK(is_continuous(k));
    CHECK(uncurry(k, e) == hm);
  }
}

TEST_CASE("pointed map space and homotopy") {
  const PseudoSpace s = sierpinski();
  const MapSpace p = pointed_map_space(PointedSpace(s, 0), PointedSpace(s, 0));
  CHECK(p.maps() == std::vector<Assignment>{{0, 0}, {0, 1}});
  CHECK(p.structure().converges(0, 1));
  CHECK_FALSE(p.structure().converges(1, 0));

  CHECK(are_homotopic(SpaceMap::constant(s, s, 0), SpaceMap::identity(s), Basepoints{0, 0}));
  CHECK(are_homotopic(SpaceMap::constant(s, s, 1), SpaceMap::constant(s, s, 0)));
  CHECK_THROWS_AS(are_homotopic(SpaceMap::constant(s, s, 1), SpaceMap::identity(s), Basepoints{0, 0}), PreconditionError);

  const PseudoSpace d = PseudoSpace::discrete(Carrier({"0", "1"}));
  CHECK_FALSE(are_homotopic(SpaceMap::constant(s, d, 0), SpaceMap::constant(s, d, 1)));
  CHECK_FALSE(are_homotopic(SpaceMap::identity(d), SpaceMap(d, d, {1, 0})));
}

TEST_CASE("homotopy is weak connectivity in the naive map space") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& x : enumerate_spaces(n, SpaceFilter::All, false)) {
        for (const auto& y : enumerate_spaces(m, SpaceFilter::All, false)) {
          const NaiveExp e = naive_exponential(x, y);
          const std::size_t k = e.maps.size();
          std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) reach[i][j] = i == j || e.edge[i][j] || e.edge[j][i];
          }
          for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t i = 0; i < k; ++i) {
              for (std::size_t j = 0; j < k; ++j) reach[i][j] = reach[i][j] || (reach[i][l] && reach[l][j]);
            }
          }
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              CHECK(are_homotopic(SpaceMap(x, y, e.maps[i]), SpaceMap(x, y, e.maps[j])) == reach[i][j]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("H-group examples") {
  for (const auto& g : small_groups()) {
    const Relation full = Relation::full(g.order());
    for (const Relation& r : {Relation::identity(g.order()), full}) {
      const ConvergenceGroup h = g.with_structure(r);
      CHECK(is_h_group(PointedSpace(h.space(), h.unit()), h.multiplication_map(), h.inversion_map()).ok());
    }
  }
}
