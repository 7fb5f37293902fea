#include "finconv/spaces.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace finconv {

PseudoSpace::PseudoSpace(Carrier points, Relation conv) : points_(std::move(points)), conv_(std::move(conv)) {
  if (conv_.size() != points_.size()) throw PreconditionError("convergence relation does not match the carrier");
  for (std::size_t i = 0; i < points_.size(); ++i) conv_.set(i, i);
}

PseudoSpace PseudoSpace::discrete(const Carrier& points) {
  return PseudoSpace(points, Relation::identity(points.size()));
}

PseudoSpace PseudoSpace::indiscrete(const Carrier& points) {
  return PseudoSpace(points, Relation::full(points.size()));
}

PseudoSpace PseudoSpace::from_edges(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& edges) {
  Carrier c(std::move(labels));
  Relation r(c.size());
  for (const auto& [a, x] : edges) r.set(c.index_of(a), c.index_of(x));
  return PseudoSpace(std::move(c), std::move(r));
}

std::vector<std::pair<std::size_t, std::size_t>> PseudoSpace::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  conv_.for_each([&](std::size_t a, std::size_t x) {
    if (a != x) out.emplace_back(a, x);
  });
  return out;
}

SpaceMap::SpaceMap(PseudoSpace dom, PseudoSpace cod, std::vector<std::size_t> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), assignment_(std::move(assignment)) {
  if (assignment_.size() != dom_.size()) throw PreconditionError("map is not total on its domain");
  for (auto y : assignment_) {
    if (y >= cod_.size()) throw PreconditionError("map value outside its codomain");
  }
}

SpaceMap::SpaceMap(PseudoSpace dom, PseudoSpace cod, const FiniteFunction& f)
    : SpaceMap(std::move(dom), std::move(cod), f.table()) {
  if (!(f.domain() == dom_.points()) || !(f.codomain() == cod_.points())) {
    throw PreconditionError("function carriers do not match the spaces");
  }
}

SpaceMap SpaceMap::identity(const PseudoSpace& x) {
  std::vector<std::size_t> t(x.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return SpaceMap(x, x, std::move(t));
}

SpaceMap SpaceMap::constant(const PseudoSpace& dom, const PseudoSpace& cod, std::size_t value) {
  return SpaceMap(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

SpaceMap SpaceMap::after(const SpaceMap& inner) const {
  if (!(inner.cod_ == dom_)) throw PreconditionError("composition of non-composable maps");
  std::vector<std::size_t> t(inner.assignment_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = assignment_[inner.assignment_[x]];
  return SpaceMap(inner.dom_, cod_, std::move(t));
}

PointedSpace::PointedSpace(PseudoSpace s, std::size_t base) : space(std::move(s)), basepoint(base) {
  if (basepoint >= space.size()) throw PreconditionError("basepoint outside the space");
}

bool converges(const PseudoSpace& space, const FiniteFilter& filter, std::size_t x) {
  if (!(filter.carrier() == space.points())) throw PreconditionError("converges: filter carrier mismatch");
  if (x >= space.size()) throw PreconditionError("converges: point outside the space");
  return filter.core().is_subset_of(space.conv().predecessors(x));
}

bool is_continuous_at(const SpaceMap& f, std::size_t x) {
  const auto& dc = f.dom().conv();
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    if (dc.test(a, x) && !f.cod().converges(f(a), f(x))) return false;
  }
  return true;
}

bool is_continuous(const PseudoSpace& dom, const PseudoSpace& cod, const std::vector<std::size_t>& assignment) {
  bool ok = true;
  const auto& cc = cod.conv();
  // for_each cannot break early; the relations here are small.
  dom.conv().for_each([&](std::size_t a, std::size_t x) {
    if (ok && !cc.test(assignment[a], assignment[x])) ok = false;
  });
  return ok;
}

bool is_continuous(const SpaceMap& f) { return is_continuous(f.dom(), f.cod(), f.assignment()); }

PseudoSpace initial_structure(const Carrier& carrier,
                              const std::vector<std::pair<FiniteFunction, PseudoSpace>>& sinks) {
  Relation r = Relation::full(carrier.size());
  for (const auto& [f, y] : sinks) {
    if (!(f.domain() == carrier) || !(f.codomain() == y.points())) {
      throw PreconditionError("initial_structure: map does not go from the carrier into its space");
    }
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      for (std::size_t x = 0; x < carrier.size(); ++x) {
        if (!y.converges(f(a), f(x))) r.reset(a, x);
      }
    }
  }
  return PseudoSpace(carrier, std::move(r));
}

PseudoSpace final_structure(const Carrier& carrier,
                            const std::vector<std::pair<PseudoSpace, FiniteFunction>>& sources) {
  Relation r = Relation::identity(carrier.size());
  for (const auto& [x, f] : sources) {
    if (!(f.domain() == x.points()) || !(f.codomain() == carrier)) {
      throw PreconditionError("final_structure: map does not go from its space into the carrier");
    }
    x.conv().for_each([&](std::size_t a, std::size_t p) { r.set(f(a), f(p)); });
  }
  return PseudoSpace(carrier, std::move(r));
}

PseudoSpace product(const std::vector<PseudoSpace>& spaces) {
  std::vector<Carrier> carriers;
  for (const auto& s : spaces) carriers.push_back(s.points());
  Carrier c = product_carrier(carriers);
  const std::size_t n = c.size();
  // Tuple digits of every product point.
  std::vector<std::vector<std::size_t>> digits(n, std::vector<std::size_t>(spaces.size()));
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t rest = p;
    for (std::size_t k = spaces.size(); k-- > 0;) {
      digits[p][k] = rest % spaces[k].size();
      rest /= spaces[k].size();
    }
  }
  Relation r(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      bool edge = true;
      for (std::size_t k = 0; k < spaces.size() && edge; ++k) edge = spaces[k].converges(digits[p][k], digits[q][k]);
      if (edge) r.set(p, q);
    }
  }
  return PseudoSpace(std::move(c), std::move(r));
}

PseudoSpace product(const PseudoSpace& a, const PseudoSpace& b) { return product(std::vector<PseudoSpace>{a, b}); }

SpaceMap projection(const std::vector<PseudoSpace>& spaces, std::size_t k) {
  if (k >= spaces.size()) throw PreconditionError("projection index out of range");
  PseudoSpace p = product(spaces);
  std::size_t inner = 1;
  for (std::size_t j = k + 1; j < spaces.size(); ++j) inner *= spaces[j].size();
  std::vector<std::size_t> t(p.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (i / inner) % spaces[k].size();
  return SpaceMap(std::move(p), spaces[k], std::move(t));
}

PseudoSpace coproduct(const std::vector<PseudoSpace>& spaces) {
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    offset.push_back(labels.size());
    for (const auto& l : spaces[i].points().labels()) labels.push_back(std::to_string(i) + ":" + l);
  }
  Carrier c(std::move(labels));
  Relation r(c.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    spaces[i].conv().for_each([&](std::size_t a, std::size_t x) { r.set(offset[i] + a, offset[i] + x); });
  }
  return PseudoSpace(std::move(c), std::move(r));
}

PseudoSpace subspace(const PseudoSpace& space, const PointSet& subset) {
  return inclusion(space, subset).dom();
}

SpaceMap inclusion(const PseudoSpace& space, const PointSet& subset) {
  if (subset.universe() != space.size()) throw PreconditionError("subspace: subset of a different carrier");
  auto members = subset.members();
  std::vector<std::string> labels;
  for (auto m : members) labels.push_back(space.label(m));
  Carrier c(std::move(labels));
  Relation r(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (space.converges(members[i], members[j])) r.set(i, j);
    }
  }
  PseudoSpace sub(std::move(c), std::move(r));
#ifndef NDEBUG
  {
    // The restriction is the initial structure along the inclusion.
    FiniteFunction inc(sub.points(), space.points(), members);
    assert(initial_structure(sub.points(), {{inc, space}}) == sub);
  }
#endif
  return SpaceMap(std::move(sub), space, std::move(members));
}

PseudoSpace quotient(const PseudoSpace& space, const FiniteFunction& q) {
  if (!(q.domain() == space.points())) throw PreconditionError("quotient: map domain is not the space");
  if (!q.is_surjective()) throw PreconditionError("quotient: map is not surjective");
  return final_structure(q.codomain(), {{space, q}});
}

PseudoSpace reflect_top(const PseudoSpace& space) { return PseudoSpace(space.points(), space.conv().closure()); }

PseudoSpace reflect_epi(const PseudoSpace& space) { return reflect_top(space); }

PseudoSpace reflect_epi_to_top(const PseudoSpace& space) {
  if (!space.is_topological()) throw PreconditionError("reflect_epi_to_top: input is not an epispace");
  return space;
}

bool is_open_in_reflection(const PseudoSpace& space, const PointSet& s) {
  for (auto x : s.members()) {
    if (!space.conv().predecessors(x).is_subset_of(s)) return false;
  }
  return true;
}

bool is_closed_in_reflection(const PseudoSpace& space, const PointSet& s) {
  return is_open_in_reflection(space, s.complement());
}

std::vector<PointSet> open_sets(const PseudoSpace& space) {
  const std::size_t n = space.size();
  if (n > 24) throw PreconditionError("open_sets: carrier too large to enumerate");
  std::vector<PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) s.set(i);
    }
    if (is_open_in_reflection(space, s)) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  });
  return out;
}

PointSet minimal_open(const PseudoSpace& space, std::size_t x) {
  return space.conv().closure().predecessors(x);
}

PseudoSpace lattice_meet(const std::vector<PseudoSpace>& structures) {
  if (structures.empty()) throw PreconditionError("lattice_meet: empty family has no carrier");
  Relation r = structures.front().conv();
  for (const auto& s : structures) {
    if (!(s.points() == structures.front().points())) throw PreconditionError("lattice_meet: carrier mismatch");
    r &= s.conv();
  }
  return PseudoSpace(structures.front().points(), std::move(r));
}

PseudoSpace lattice_join(const std::vector<PseudoSpace>& structures) {
  if (structures.empty()) throw PreconditionError("lattice_join: empty family has no carrier");
  Relation r = structures.front().conv();
  for (const auto& s : structures) {
    if (!(s.points() == structures.front().points())) throw PreconditionError("lattice_join: carrier mismatch");
    r |= s.conv();
  }
  return PseudoSpace(structures.front().points(), std::move(r));
}

bool is_quotient_map(const SpaceMap& f) {
  FiniteFunction fn = f.function();
  if (!fn.is_surjective() || !is_continuous(f)) return false;
  return final_structure(f.cod().points(), {{f.dom(), fn}}).conv() == f.cod().conv();
}

bool are_isomorphic(const PseudoSpace& a, const PseudoSpace& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.conv().count() != b.conv().count()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.converges(i, j) == b.converges(perm[i], perm[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace finconv
