#include "finconv/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace finconv {

namespace {

std::string axiom_failure(std::size_t n, std::size_t unit, const std::vector<std::size_t>& mult,
                          const std::vector<std::size_t>& inv) {
  if (mult.size() != n * n) return "multiplication table has the wrong size";
  if (inv.size() != n) return "inverse table has the wrong size";
  if (n == 0) return "a group has at least one element";
  if (unit >= n) return "unit outside the carrier";
  for (auto v : mult) {
    if (v >= n) return "multiplication is not closed";
  }
  for (auto v : inv) {
    if (v >= n) return "inversion is not closed";
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[unit * n + a] != a || mult[a * n + unit] != a) return "unit law fails";
    if (mult[a * n + inv[a]] != unit || mult[inv[a] * n + a] != unit) return "inverse law fails";
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[mult[a * n + b] * n + c] != mult[a * n + mult[b * n + c]]) return "associativity fails";
      }
    }
  }
  return {};
}

}  // namespace

bool satisfies_group_axioms(std::size_t order, std::size_t unit, const std::vector<std::size_t>& mult,
                            const std::vector<std::size_t>& inv) {
  return axiom_failure(order, unit, mult, inv).empty();
}

ConvergenceGroup::ConvergenceGroup(PseudoSpace space, std::size_t unit, std::vector<std::size_t> mult,
                                   std::vector<std::size_t> inv)
    : space_(std::move(space)), unit_(unit), mult_(std::move(mult)), inv_(std::move(inv)) {
  if (auto err = axiom_failure(space_.size(), unit_, mult_, inv_); !err.empty()) {
    throw PreconditionError("group: " + err);
  }
}

ConvergenceGroup ConvergenceGroup::from_table(PseudoSpace space, std::vector<std::size_t> mult) {
  const std::size_t n = space.size();
  if (n == 0 || mult.size() != n * n) throw PreconditionError("group: multiplication table has the wrong size");
  std::size_t unit = n;
  for (std::size_t e = 0; e < n && unit == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mult[e * n + a] == a && mult[a * n + e] == a;
    if (ok) unit = e;
  }
  if (unit == n) throw PreconditionError("group: no unit element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a * n + b] == unit) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] == n) throw PreconditionError("group: element without inverse");
  }
  return ConvergenceGroup(std::move(space), unit, std::move(mult), std::move(inv));
}

ConvergenceGroup ConvergenceGroup::with_structure(const Relation& conv) const {
  ConvergenceGroup g = *this;
  g.space_ = PseudoSpace(space_.points(), conv);
  return g;
}

SpaceMap ConvergenceGroup::multiplication_map() const {
  return SpaceMap(product(space_, space_), space_, mult_);
}

SpaceMap ConvergenceGroup::inversion_map() const { return SpaceMap(space_, space_, inv_); }

bool is_pstop_group(const ConvergenceGroup& g) {
  const auto& conv = g.space().conv();
  const auto edges = g.space().edges();
  for (auto [a, x] : edges) {
    if (!conv.test(g.inv(a), g.inv(x))) return false;
  }
  // (a, b) → (x, y) in the product iff a → x and b → y (diagonal included).
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!conv.test(a, x)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t y = 0; y < n; ++y) {
          if (conv.test(b, y) && !conv.test(g.mul(a, b), g.mul(x, y))) return false;
        }
      }
    }
  }
  return true;
}

bool is_quasitop_group(const ConvergenceGroup& g) {
  if (!g.space().is_topological()) return false;
  const auto& conv = g.space().conv();
  for (auto [a, x] : g.space().edges()) {
    if (!conv.test(g.inv(a), g.inv(x))) return false;
    for (std::size_t t = 0; t < g.order(); ++t) {
      if (!conv.test(g.mul(t, a), g.mul(t, x))) return false;
      if (!conv.test(g.mul(a, t), g.mul(x, t))) return false;
    }
  }
  return true;
}

bool is_top_group(const ConvergenceGroup& g) { return g.space().is_topological() && is_pstop_group(g); }

ConvergenceGroup cyclic_group(std::size_t n, const Relation& conv) {
  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = (a + b) % n;
  }
  return ConvergenceGroup::from_table(PseudoSpace(Carrier::numbered(n), conv), std::move(mult));
}

namespace {

ConvergenceGroup klein_four() {
  std::vector<std::size_t> mult(16);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) mult[a * 4 + b] = a ^ b;
  }
  return ConvergenceGroup::from_table(PseudoSpace::discrete(Carrier::numbered(4)), std::move(mult));
}

ConvergenceGroup symmetric_three() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // perms[0] is the identity, so the unit is labelled "0".
  std::vector<std::size_t> mult(36);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mult[a * 6 + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return ConvergenceGroup::from_table(PseudoSpace::discrete(Carrier::numbered(6)), std::move(mult));
}

}  // namespace

std::vector<ConvergenceGroup> small_groups() {
  std::vector<ConvergenceGroup> out;
  for (std::size_t n : {1, 2, 3, 4}) out.push_back(cyclic_group(n, Relation::identity(n)));
  out.push_back(klein_four());
  out.push_back(cyclic_group(5, Relation::identity(5)));
  out.push_back(cyclic_group(6, Relation::identity(6)));
  out.push_back(symmetric_three());
  return out;
}

std::vector<std::string> small_group_names() { return {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3"}; }

Relation compatible_closure(const ConvergenceGroup& g, const Relation& seed) {
  const std::size_t n = g.order();
  Relation r = seed;
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    r.for_each([&](std::size_t a, std::size_t x) { pairs.emplace_back(a, x); });
    for (auto [a, x] : pairs) {
      if (!r.test(g.inv(a), g.inv(x))) {
        r.set(g.inv(a), g.inv(x));
        changed = true;
      }
      for (auto [b, y] : pairs) {
        if (!r.test(g.mul(a, b), g.mul(x, y))) {
          r.set(g.mul(a, b), g.mul(x, y));
          changed = true;
        }
      }
    }
  }
  return r;
}

}  // namespace finconv
