#include "finconv/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace finconv {

std::uint64_t labeled_space_count(std::size_t n) {
  const std::size_t bits = n * n - n;
  if (bits >= 64) throw PreconditionError("too many points to count structures");
  return std::uint64_t{1} << bits;
}

PseudoSpace space_from_index(std::size_t n, std::uint64_t index) {
  Relation r = Relation::identity(n);
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (a == x) continue;
      if ((index >> k) & 1u) r.set(a, x);
      ++k;
    }
  }
  return PseudoSpace(Carrier::numbered(n), std::move(r));
}

namespace {

std::uint64_t encode(const Relation& r, std::size_t n, const std::vector<std::size_t>& perm) {
  std::uint64_t out = 0;
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (a == x) continue;
      if (r.test(perm[a], perm[x])) out |= std::uint64_t{1} << k;
      ++k;
    }
  }
  return out;
}

}  // namespace

std::uint64_t space_index(const PseudoSpace& space) {
  std::vector<std::size_t> id(space.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return encode(space.conv(), space.size(), id);
}

std::uint64_t canonical_index(const PseudoSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = encode(space.conv(), n, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, encode(space.conv(), n, perm));
  return best;
}

void for_each_space(std::size_t n, SpaceFilter filter, bool up_to_iso,
                    const std::function<bool(const PseudoSpace&)>& visit, std::optional<std::size_t> bound) {
  const std::size_t limit = bound.value_or(up_to_iso ? kEnumerateUpToIsoBound : kEnumerateBound);
  if (n > limit) {
    throw PreconditionError("enumeration bound exceeded: " + std::to_string(n) + " > " + std::to_string(limit));
  }
  const std::uint64_t total = labeled_space_count(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    PseudoSpace s = space_from_index(n, idx);
    if (filter == SpaceFilter::Topological && !s.is_topological()) continue;
    if (up_to_iso && canonical_index(s) != idx) continue;
    if (!visit(s)) return;
  }
}

std::vector<PseudoSpace> enumerate_spaces(std::size_t n, SpaceFilter filter, bool up_to_iso,
                                          std::optional<std::size_t> bound) {
  std::vector<PseudoSpace> out;
  for_each_space(n, filter, up_to_iso, [&](const PseudoSpace& s) {
    out.push_back(s);
    return true;
  }, bound);
  return out;
}

std::uint64_t count_spaces(std::size_t n, SpaceFilter filter, bool up_to_iso, std::optional<std::size_t> bound) {
  std::uint64_t count = 0;
  for_each_space(n, filter, up_to_iso, [&](const PseudoSpace&) {
    ++count;
    return true;
  }, bound);
  return count;
}

std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = n;
    while (i > 0 && f[i - 1] == m - 1) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_surjections(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& f : all_functions(n, m)) {
    std::vector<bool> hit(m, false);
    for (auto v : f) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(std::move(f));
  }
  return out;
}

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t n) {
  if (n == 0) throw PreconditionError("uniform: empty range");
  const std::uint64_t range = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return static_cast<std::size_t>(v % range);
}

bool chance(Rng& rng, std::size_t num, std::size_t den) { return uniform(rng, den) < num; }

void shuffle(Rng& rng, std::vector<std::size_t>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(rng, i)]);
}

PseudoSpace random_space(Rng& rng, std::size_t n) {
  const std::size_t density = 1 + uniform(rng, 6);
  Relation r = Relation::identity(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (a != x && chance(rng, density, 8)) r.set(a, x);
    }
  }
  return PseudoSpace(Carrier::numbered(n), std::move(r));
}

PseudoSpace random_topology(Rng& rng, std::size_t n) {
  const std::size_t density = 1 + uniform(rng, 4);
  Relation r = Relation::identity(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (a != x && chance(rng, density, 16)) r.set(a, x);
    }
  }
  return PseudoSpace(Carrier::numbered(n), r.closure());
}

std::vector<std::size_t> random_function(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<std::size_t> f(n);
  for (auto& v : f) v = uniform(rng, m);
  return f;
}

std::vector<std::size_t> random_surjection(Rng& rng, std::size_t n, std::size_t m) {
  if (m > n || (m == 0 && n > 0)) throw PreconditionError("random_surjection: no surjection exists");
  // The first m positions of a random permutation take the values 0..m-1.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(rng, order);
  std::vector<std::size_t> f(n);
  for (std::size_t i = 0; i < n; ++i) f[order[i]] = i < m ? i : uniform(rng, m);
  return f;
}

std::optional<Assignment> random_continuous_map(Rng& rng, const PseudoSpace& x, const PseudoSpace& y) {
  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(rng, order);
  std::optional<Assignment> found;
  const auto take = [&](const Assignment& f) {
    found = f;
    return false;
  };
  if (x.size() > 0 && y.size() > 0) {
    std::vector<PointSet> domains(x.size(), PointSet::full(y.size()));
    domains[uniform(rng, x.size())] = PointSet::singleton(y.size(), uniform(rng, y.size()));
    search_continuous_maps(x, y, domains, take, order);
    if (found) return found;
  }
  search_continuous_maps(x, y, {}, take, order);
  return found;
}

PointSet random_subset(Rng& rng, std::size_t n) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (chance(rng, 1, 2)) s.set(i);
  }
  return s;
}

}  // namespace finconv
