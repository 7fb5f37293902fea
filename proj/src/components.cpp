#include "finconv/components.hpp"

#include <numeric>
#include <stdexcept>

namespace finconv {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ComponentQuotient path_components(const PseudoSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (auto [a, x] : space.edges()) {
    auto ra = find_root(parent, a);
    auto rx = find_root(parent, x);
    if (ra != rx) parent[std::max(ra, rx)] = std::min(ra, rx);
  }
  // Roots are least members after min-linking, so scanning in order yields
  // classes ordered by least member.
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> class_of_root(n, n);
  ComponentQuotient cq;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    auto r = find_root(parent, x);
    if (class_of_root[r] == n) {
      class_of_root[r] = cq.classes.size();
      cq.classes.emplace_back();
      labels.push_back("[" + space.label(x) + "]");
    }
    class_of[x] = class_of_root[r];
    cq.classes[class_of[x]].push_back(x);
  }
  Carrier qc(std::move(labels));
  FiniteFunction proj(space.points(), qc, class_of);
  cq.source = space;
  cq.quotient = final_structure(qc, {{space, proj}});
  if (!(cq.quotient.conv() == Relation::identity(qc.size()))) {
    throw std::logic_error("path_components: component quotient is not discrete");
  }
  cq.projection = SpaceMap(space, cq.quotient, proj);
  return cq;
}

SpaceMap induced_component_map(const SpaceMap& f, const ComponentQuotient& from, const ComponentQuotient& to) {
  if (!(f.dom() == from.source) || !(f.cod() == to.source)) throw PreconditionError("induced map: type mismatch");
  if (!is_continuous(f)) throw PreconditionError("induced map: f is not continuous");
  std::vector<std::size_t> t(from.classes.size());
  for (std::size_t c = 0; c < from.classes.size(); ++c) {
    t[c] = to.projection(f(from.classes[c].front()));
    for (auto x : from.classes[c]) {
      if (to.projection(f(x)) != t[c]) throw std::logic_error("induced map: not constant on a component");
    }
  }
  return SpaceMap(from.quotient, to.quotient, std::move(t));
}

PseudoSpace quotient_topology(const PseudoSpace& x, const FiniteFunction& q) {
  if (!(q.domain() == x.points())) throw PreconditionError("quotient_topology: map domain is not the space");
  const Relation closed = x.conv().closure();
  const std::size_t m = q.codomain().size();
  Relation r(m);
  for (std::size_t y = 0; y < m; ++y) {
    // Least V ∋ y whose preimage is open in R X.
    PointSet v = PointSet::singleton(m, y);
    while (true) {
      PointSet pre = q.preimage_of(v);
      PointSet down(x.size());
      for (auto p : pre.members()) down |= closed.predecessors(p);
      PointSet next = q.image_of(down);
      next |= v;
      if (next == v) break;
      v = std::move(next);
    }
    for (auto c : v.members()) r.set(c, y);
  }
  return PseudoSpace(q.codomain(), std::move(r));
}

bool is_biquotient(const SpaceMap& f, BiquotientMethod method) {
  const PseudoSpace& x = f.dom();
  const PseudoSpace& y = f.cod();
  if (!x.is_topological() || !y.is_topological()) throw PreconditionError("is_biquotient: spaces must be topological");
  if (!is_continuous(f) || !f.function().is_surjective()) {
    throw PreconditionError("is_biquotient: map must be a continuous surjection");
  }
  const FiniteFunction fn = f.function();

  if (method == BiquotientMethod::MinimalOpenSets) {
    for (std::size_t p = 0; p < y.size(); ++p) {
      PointSet covered(y.size());
      for (std::size_t a = 0; a < x.size(); ++a) {
        if (f(a) == p) covered |= fn.image_of(x.conv().predecessors(a));
      }
      if (!y.conv().predecessors(p).is_subset_of(covered)) return false;
    }
    return true;
  }

  const auto x_opens = open_sets(x);
  const auto y_opens = open_sets(y);
  if (x_opens.size() > 20) throw PreconditionError("is_biquotient: too many open sets for cover enumeration");
  std::vector<PointSet> images;
  for (const auto& o : x_opens) images.push_back(fn.image_of(o));
  for (std::size_t p = 0; p < y.size(); ++p) {
    const PointSet fibre = fn.preimage_of(PointSet::singleton(y.size(), p));
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << x_opens.size()); ++family) {
      PointSet covered(x.size());
      PointSet image(y.size());
      for (std::size_t i = 0; i < x_opens.size(); ++i) {
        if ((family >> i) & 1u) {
          covered |= x_opens[i];
          image |= images[i];
        }
      }
      if (!fibre.is_subset_of(covered)) continue;
      bool neighbourhood = false;
      for (const auto& v : y_opens) {
        if (v.test(p) && v.is_subset_of(image)) {
          neighbourhood = true;
          break;
        }
      }
      if (!neighbourhood) return false;
    }
  }
  return true;
}

KentVerdict check_kent(const PseudoSpace& x, const FiniteFunction& q) {
  if (!x.is_topological()) throw PreconditionError("check_kent: domain must be topological");
  if (!q.is_surjective()) throw PreconditionError("check_kent: map must be surjective");
  KentVerdict v;
  v.final_pseudotopology = final_structure(q.codomain(), {{x, q}});
  v.final_topology = quotient_topology(x, q);
  v.structures_coincide = v.final_pseudotopology == v.final_topology;
  v.biquotient = is_biquotient(SpaceMap(x, v.final_topology, q));
  return v;
}

bool check_pc_product(const PseudoSpace& x, const PseudoSpace& y) {
  const ComponentQuotient pxy = path_components(product(x, y));
  const ComponentQuotient px = path_components(x);
  const ComponentQuotient py = path_components(y);
  const PseudoSpace target = product(px.quotient, py.quotient);
  const std::size_t ny = y.size();
  const std::size_t ky = py.classes.size();

  std::vector<std::size_t> phi(pxy.classes.size());
  std::vector<bool> hit(target.size(), false);
  for (std::size_t c = 0; c < pxy.classes.size(); ++c) {
    bool first = true;
    for (auto p : pxy.classes[c]) {
      const std::size_t image = px.projection(p / ny) * ky + py.projection(p % ny);
      if (first) {
        phi[c] = image;
        first = false;
      } else if (phi[c] != image) {
        return false;
      }
    }
    if (hit[phi[c]]) return false;
    hit[phi[c]] = true;
  }
  if (pxy.classes.size() != target.size()) return false;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (std::size_t b = 0; b < phi.size(); ++b) {
      if (pxy.quotient.converges(a, b) != target.converges(phi[a], phi[b])) return false;
    }
  }
  return true;
}

bool check_pc_lift(const PseudoSpace& x) {
  if (!x.is_topological()) throw PreconditionError("check_pc_lift: space must be topological");
  const ComponentQuotient pc = path_components(x);
  return reflect_top(pc.quotient) == quotient_topology(x, pc.projection.function());
}

InducedMultiplication induced_multiplication(const PseudoSpace& x, const SpaceMap& m) {
  if (!(m.dom() == product(x, x)) || !(m.cod() == x)) throw PreconditionError("induced_multiplication: m is not X × X → X");
  if (!is_continuous(m)) throw PreconditionError("induced_multiplication: m is not continuous");
  InducedMultiplication out{path_components(x), {}, false};
  const auto& pc = out.components;
  const std::size_t n = x.size();
  const std::size_t k = pc.classes.size();
  std::vector<std::size_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = pc.projection(m(pc.classes[i].front() * n + pc.classes[j].front()));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (pc.projection(m(a * n + b)) != table[pc.projection(a) * k + pc.projection(b)]) {
        throw std::logic_error("induced_multiplication: μ is not well defined");
      }
    }
  }
  out.mu = SpaceMap(product(pc.quotient, pc.quotient), pc.quotient, std::move(table));
  out.continuous = is_continuous(out.mu);
  return out;
}

}  // namespace finconv
