#include "finconv/exponentials.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace finconv {

namespace {

struct Constraint {
  std::size_t other;  // an earlier point in the search order
  bool outgoing;      // true: current → other, false: other → current
};

}  // namespace

void search_continuous_maps(const PseudoSpace& x, const PseudoSpace& y, const std::vector<PointSet>& domains,
                            const std::function<bool(const Assignment&)>& visit,
                            std::span<const std::size_t> value_order) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (!domains.empty() && domains.size() != n) throw PreconditionError("search: one domain per point required");

  std::vector<std::size_t> degree(n, 0);
  for (auto [a, b] : x.edges()) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return degree[p] > degree[q]; });

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<Constraint>> constraints(n);
  for (auto [a, b] : x.edges()) {
    if (position[a] < position[b]) {
      constraints[position[b]].push_back({a, false});
    } else {
      constraints[position[a]].push_back({b, true});
    }
  }

  std::vector<std::size_t> values(m);
  if (value_order.empty()) {
    std::iota(values.begin(), values.end(), std::size_t{0});
  } else {
    values.assign(value_order.begin(), value_order.end());
  }

  Assignment f(n, 0);
  if (n == 0) {
    visit(f);
    return;
  }
  if (m == 0) return;

  // Iterative depth-first search; cursor[i] indexes into `values`.
  std::vector<std::size_t> cursor(n, 0);
  std::size_t depth = 0;
  const auto& yc = y.conv();
  while (true) {
    const std::size_t p = order[depth];
    bool placed = false;
    while (cursor[depth] < values.size()) {
      const std::size_t v = values[cursor[depth]++];
      if (!domains.empty() && !domains[p].test(v)) continue;
      bool ok = true;
      for (const auto& c : constraints[depth]) {
        ok = c.outgoing ? yc.test(v, f[c.other]) : yc.test(f[c.other], v);
        if (!ok) break;
      }
      if (ok) {
        f[p] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (depth + 1 == n) {
        if (!visit(f)) return;
      } else {
        ++depth;
        cursor[depth] = 0;
      }
    } else {
      if (depth == 0) return;
      --depth;
    }
  }
}

std::vector<Assignment> continuous_maps(const PseudoSpace& x, const PseudoSpace& y) {
  std::vector<Assignment> out;
  search_continuous_maps(x, y, {}, [&](const Assignment& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string map_label(const PseudoSpace& y, const Assignment& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += '|';
    out += y.label(f[i]);
  }
  out += ']';
  return out;
}

bool MapSpace::edge(const PseudoSpace& base, const PseudoSpace& target, const Assignment& g, const Assignment& f) {
  const auto& bc = base.conv();
  const auto& tc = target.conv();
  const std::size_t n = base.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (bc.test(a, x) && !tc.test(g[a], f[x])) return false;
    }
  }
  return true;
}

MapSpace::MapSpace(PseudoSpace base, PseudoSpace target, std::vector<Assignment> maps)
    : base_(std::move(base)), target_(std::move(target)), maps_(std::move(maps)) {
  std::vector<std::string> labels;
  labels.reserve(maps_.size());
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (!index_.emplace(maps_[i], i).second) throw PreconditionError("map space: duplicate map");
    labels.push_back(map_label(target_, maps_[i]));
  }
  Relation r(maps_.size());
  for (std::size_t g = 0; g < maps_.size(); ++g) {
    for (std::size_t f = 0; f < maps_.size(); ++f) {
      if (edge(base_, target_, maps_[g], maps_[f])) r.set(g, f);
    }
  }
  structure_ = PseudoSpace(Carrier(std::move(labels)), std::move(r));
}

std::optional<std::size_t> MapSpace::index_of(const Assignment& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MapSpace exponential(const PseudoSpace& x, const PseudoSpace& y) { return MapSpace(x, y, continuous_maps(x, y)); }

MapSpace pointed_map_space(const PointedSpace& x, const PointedSpace& y) {
  std::vector<PointSet> domains(x.space.size(), PointSet::full(y.space.size()));
  domains[x.basepoint] = PointSet::singleton(y.space.size(), y.basepoint);
  std::vector<Assignment> maps;
  search_continuous_maps(x.space, y.space, domains, [&](const Assignment& f) {
    maps.push_back(f);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  return MapSpace(x.space, y.space, std::move(maps));
}

SpaceMap evaluation_map(const MapSpace& e) {
  PseudoSpace dom = product(e.structure(), e.base());
  const std::size_t n = e.base().size();
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < e.maps().size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) t[i * n + x] = e.maps()[i][x];
  }
  return SpaceMap(std::move(dom), e.target(), std::move(t));
}

SpaceMap curry(const SpaceMap& h, const PseudoSpace& z, const MapSpace& e) {
  if (!(h.dom() == product(z, e.base()))) throw PreconditionError("curry: domain is not Z × X");
  if (!(h.cod() == e.target())) throw PreconditionError("curry: codomain is not the exponential's target");
  if (!is_continuous(h)) throw PreconditionError("curry: map is not continuous");
  const std::size_t n = e.base().size();
  std::vector<std::size_t> t(z.size());
  for (std::size_t zi = 0; zi < z.size(); ++zi) {
    Assignment slice(n);
    for (std::size_t x = 0; x < n; ++x) slice[x] = h(zi * n + x);
    auto idx = e.index_of(slice);
    // Each slice of a continuous map out of a product is continuous.
    if (!idx) throw std::logic_error("curry: discontinuous slice of a continuous map");
    t[zi] = *idx;
  }
  return SpaceMap(z, e.structure(), std::move(t));
}

SpaceMap curry(const SpaceMap& h, const PseudoSpace& z, const PseudoSpace& x) {
  return curry(h, z, exponential(x, h.cod()));
}

SpaceMap uncurry(const SpaceMap& k, const MapSpace& e) {
  if (!(k.cod() == e.structure())) throw PreconditionError("uncurry: codomain is not the exponential");
  const std::size_t n = e.base().size();
  PseudoSpace dom = product(k.dom(), e.base());
  std::vector<std::size_t> t(dom.size());
  for (std::size_t zi = 0; zi < k.dom().size(); ++zi) {
    for (std::size_t x = 0; x < n; ++x) t[zi * n + x] = e.maps()[k(zi)][x];
  }
  return SpaceMap(std::move(dom), e.target(), std::move(t));
}

namespace {

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : a) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace

bool are_homotopic(const SpaceMap& f, const SpaceMap& g, std::optional<Basepoints> pointed, std::size_t limit) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw PreconditionError("are_homotopic: maps differ in type");
  if (!is_continuous(f) || !is_continuous(g)) throw PreconditionError("are_homotopic: maps must be continuous");
  if (pointed) {
    if (pointed->dom >= f.dom().size() || pointed->cod >= f.cod().size()) {
      throw PreconditionError("are_homotopic: basepoint out of range");
    }
    if (f(pointed->dom) != pointed->cod || g(pointed->dom) != pointed->cod) {
      throw PreconditionError("are_homotopic: maps are not pointed");
    }
  }
  const PseudoSpace& x = f.dom();
  const PseudoSpace& y = f.cod();
  if (f.assignment() == g.assignment()) return true;
  if (MapSpace::edge(x, y, f.assignment(), g.assignment()) || MapSpace::edge(x, y, g.assignment(), f.assignment())) {
    return true;
  }

  const std::size_t n = x.size();
  const std::size_t m = y.size();
  std::vector<PointSet> ysucc(m), ypred(m);
  for (std::size_t v = 0; v < m; ++v) {
    ysucc[v] = y.conv().successors(v);
    ypred[v] = y.conv().predecessors(v);
  }
  std::vector<std::vector<std::size_t>> xpred(n), xsucc(n);
  x.conv().for_each([&](std::size_t a, std::size_t b) {
    xsucc[a].push_back(b);
    xpred[b].push_back(a);
  });

  std::unordered_set<Assignment, AssignmentHash> seen{f.assignment()};
  std::deque<Assignment> queue{f.assignment()};
  bool found = false;
  auto consider = [&](const Assignment& k) {
    if (k == g.assignment()) {
      found = true;
      return false;
    }
    if (seen.insert(k).second) {
      if (seen.size() > limit) throw SearchLimitExceeded("are_homotopic: map-space component exceeds search limit");
      queue.push_back(k);
    }
    return true;
  };

  while (!queue.empty() && !found) {
    Assignment h = std::move(queue.front());
    queue.pop_front();
    // Out-neighbours k (h → k): k(x) ∈ succ(h(a)) for every a → x.
    std::vector<PointSet> out(n, PointSet::full(m));
    // In-neighbours k (k → h): k(a) ∈ pred(h(x)) for every a → x.
    std::vector<PointSet> in(n, PointSet::full(m));
    for (std::size_t p = 0; p < n; ++p) {
      for (auto a : xpred[p]) out[p] &= ysucc[h[a]];
      for (auto b : xsucc[p]) in[p] &= ypred[h[b]];
    }
    if (pointed) {
      out[pointed->dom] &= PointSet::singleton(m, pointed->cod);
      in[pointed->dom] &= PointSet::singleton(m, pointed->cod);
    }
    search_continuous_maps(x, y, out, consider);
    if (!found) search_continuous_maps(x, y, in, consider);
  }
  return found;
}

HGroupReport is_h_group(const PointedSpace& xp, const SpaceMap& wedge, const SpaceMap& sigma) {
  const PseudoSpace& x = xp.space;
  const std::size_t n = x.size();
  const std::size_t e = xp.basepoint;
  if (!(wedge.dom() == product(x, x)) || !(wedge.cod() == x)) throw PreconditionError("is_h_group: wedge is not X × X → X");
  if (!(sigma.dom() == x) || !(sigma.cod() == x)) throw PreconditionError("is_h_group: sigma is not X → X");
  if (!is_continuous(wedge) || !is_continuous(sigma)) throw PreconditionError("is_h_group: operations must be continuous");
  if (wedge(e * n + e) != e || sigma(e) != e) throw PreconditionError("is_h_group: operations must be pointed");

  auto w = [&](std::size_t a, std::size_t b) { return wedge(a * n + b); };
  auto self_map = [&](auto&& fn) {
    std::vector<std::size_t> t(n);
    for (std::size_t p = 0; p < n; ++p) t[p] = fn(p);
    return SpaceMap(x, x, std::move(t));
  };
  const SpaceMap id = SpaceMap::identity(x);
  const SpaceMap constant = SpaceMap::constant(x, x, e);
  const Basepoints base{e, e};

  HGroupReport r;
  r.right_unit = are_homotopic(self_map([&](std::size_t p) { return w(p, e); }), id, base);
  r.left_unit = are_homotopic(self_map([&](std::size_t p) { return w(e, p); }), id, base);
  r.right_inverse = are_homotopic(self_map([&](std::size_t p) { return w(p, sigma(p)); }), constant, base);
  r.left_inverse = are_homotopic(self_map([&](std::size_t p) { return w(sigma(p), p); }), constant, base);

  PseudoSpace cube = product(std::vector<PseudoSpace>{x, x, x});
  std::vector<std::size_t> left(cube.size()), right(cube.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t i = (a * n + b) * n + c;
        left[i] = w(w(a, b), c);
        right[i] = w(a, w(b, c));
      }
    }
  }
  r.associative = are_homotopic(SpaceMap(cube, x, std::move(left)), SpaceMap(cube, x, std::move(right)),
                                Basepoints{(e * n + e) * n + e, e});
  return r;
}

}  // namespace finconv
