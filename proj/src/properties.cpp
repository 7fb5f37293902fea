#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "finconv/components.hpp"
#include "finconv/enumerate.hpp"
#include "finconv/exponentials.hpp"
#include "finconv/groups.hpp"
#include "finconv/mining.hpp"
#include "finconv/pasting.hpp"

namespace finconv {

namespace {

using Make = std::function<Document(std::uint64_t seed, std::uint64_t index, const Bounds&)>;
using Exhaust = std::function<std::optional<InstanceSource>(const Bounds&)>;
using Check = std::function<Verdict(const Document&)>;

class TableProperty : public Property {
 public:
  TableProperty(std::string name, std::string summary, std::size_t max_points, Make sample, Check check,
                Exhaust exhaustive = {})
      : name_(std::move(name)),
        summary_(std::move(summary)),
        max_points_(max_points),
        sample_(std::move(sample)),
        check_(std::move(check)),
        exhaustive_(std::move(exhaustive)) {}

  std::string name() const override { return name_; }
  std::string summary() const override { return summary_; }
  std::size_t default_max_points() const override { return max_points_; }
  std::optional<InstanceSource> exhaustive(const Bounds& b) const override {
    return exhaustive_ ? exhaustive_(b) : std::nullopt;
  }
  Document sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) const override {
    return sample_(seed, index, b);
  }
  Verdict check(const Document& doc) const override { return check_(doc); }

 private:
  std::string name_;
  std::string summary_;
  std::size_t max_points_;
  Make sample_;
  Check check_;
  Exhaust exhaustive_;
};

// ------------------------------------------------------------- helpers

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) { return lo + uniform(rng, hi - lo + 1); }

PseudoSpace discrete(std::size_t n) { return PseudoSpace::discrete(Carrier::numbered(n)); }

std::string show(const std::vector<std::size_t>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "|" : "") + std::to_string(f[i]);
  return s + "]";
}

std::string show(const PointSet& s) {
  std::string out = "{";
  for (auto i : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::vector<PseudoSpace> spaces_between(std::size_t lo, std::size_t hi, SpaceFilter f, bool iso) {
  std::vector<PseudoSpace> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    for_each_space(n, f, iso, [&](const PseudoSpace& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

InstanceSource from_list(std::vector<Document> docs) {
  auto shared = std::make_shared<std::vector<Document>>(std::move(docs));
  return {shared->size(), [shared](std::uint64_t i) { return (*shared)[i]; }};
}

InstanceSource single_source(std::size_t max, SpaceFilter f, bool iso,
                             std::function<Document(const PseudoSpace&)> make) {
  auto spaces = std::make_shared<std::vector<PseudoSpace>>(spaces_between(0, max, f, iso));
  return {spaces->size(), [spaces, make](std::uint64_t i) { return make((*spaces)[i]); }};
}

InstanceSource pair_source(const std::vector<PseudoSpace>& a, const std::vector<PseudoSpace>& b) {
  auto la = std::make_shared<std::vector<PseudoSpace>>(a);
  auto lb = std::make_shared<std::vector<PseudoSpace>>(b);
  return {la->size() * lb->size(), [la, lb](std::uint64_t i) {
            Document d;
            d.add_space("X", (*la)[i / lb->size()]);
            d.add_space("Y", (*lb)[i % lb->size()]);
            return d;
          }};
}

Document pair_doc(const PseudoSpace& x, const PseudoSpace& y) {
  Document d;
  d.add_space("X", x);
  d.add_space("Y", y);
  return d;
}

// Points reachable backwards from x along conv, by breadth-first search.
PointSet reach_back(const PseudoSpace& s, std::size_t x) {
  PointSet seen = PointSet::singleton(s.size(), x);
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    const std::size_t y = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s.converges(a, y) && !seen.test(a)) {
        seen.set(a);
        stack.push_back(a);
      }
    }
  }
  return seen;
}

// Weak components by depth-first search; label = least member of the component.
std::vector<std::size_t> weak_labels(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> label(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::vector<std::size_t> stack{s};
    label[s] = s;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if ((r.test(v, w) || r.test(w, v)) && label[w] == n) {
          label[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

// ------------------------------------------------------------- filters

Document filter_functoriality_doc(std::size_t n, std::size_t m, std::size_t k, const PointSet& core,
                                  const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  Document d;
  d.add_space("X", discrete(n));
  d.add_space("Y", discrete(m));
  d.add_space("Z", discrete(k));
  d.add_map("f", "X", "Y", SpaceMap(d.space("X"), d.space("Y"), f));
  d.add_map("g", "Y", "Z", SpaceMap(d.space("Y"), d.space("Z"), g));
  d.add_filter("F", "X", FiniteFilter(d.space("X").points(), core));
  return d;
}

PointSet subset_from_bits(std::size_t n, std::uint64_t bits) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) s.set(i);
  }
  return s;
}

std::vector<std::size_t> function_from_index(std::uint64_t idx, std::size_t n, std::size_t m) {
  std::vector<std::size_t> f(n);
  for (std::size_t i = n; i-- > 0;) {
    f[i] = idx % m;
    idx /= m;
  }
  return f;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Literal pushforward: every S ⊆ Y whose preimage is a member.
bool pushforward_matches_definition(const FiniteFunction& f, const FiniteFilter& F, const FiniteFilter& push) {
  const std::size_t m = f.codomain().size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const PointSet s = subset_from_bits(m, bits);
    if (F.contains(f.preimage_of(s)) != push.contains(s)) return false;
  }
  return true;
}

Verdict check_filter_functoriality(const Document& d) {
  const FiniteFunction f = d.map("f").function();
  const FiniteFunction g = d.map("g").function();
  const FiniteFilter& F = d.filter("F");
  const FiniteFilter fF = pushforward(f, F);
  if (!(pushforward(g.after(f), F) == pushforward(g, fF))) return Verdict::violated("(g∘f)∗F ≠ g∗(f∗F)");
  if (!pushforward_matches_definition(f, F, fF)) return Verdict::violated("f∗F differs from {S | f⁻¹S ∈ F}");
  if (F.is_ultrafilter()) {
    if (!fF.is_ultrafilter()) return Verdict::violated("f∗ of an ultrafilter is not an ultrafilter");
    const std::size_t x = F.core().members().front();
    if (!(fF == FiniteFilter::principal(f.codomain(), f(x)))) return Verdict::violated("f∗ẋ ≠ f(x)̇");
  }
  return Verdict::holds();
}

std::optional<InstanceSource> filter_functoriality_exhaustive(const Bounds& b) {
  struct Block {
    std::size_t n, m, k;
    std::uint64_t count;
  };
  std::vector<Block> blocks;
  std::uint64_t total = 0;
  const std::size_t cod = std::min<std::size_t>(3, b.max_points);
  for (std::size_t n = 1; n <= b.max_points; ++n) {
    for (std::size_t m = 1; m <= cod; ++m) {
      for (std::size_t k = 1; k <= cod; ++k) {
        const std::uint64_t c = ((std::uint64_t{1} << n) - 1) * power(m, n) * power(k, m);
        blocks.push_back({n, m, k, c});
        total += c;
      }
    }
  }
  return InstanceSource{total, [blocks](std::uint64_t i) {
                          std::size_t bi = 0;
                          while (i >= blocks[bi].count) i -= blocks[bi++].count;
                          const auto& B = blocks[bi];
                          const std::uint64_t cores = (std::uint64_t{1} << B.n) - 1;
                          const PointSet core = subset_from_bits(B.n, 1 + i % cores);
                          i /= cores;
                          const auto f = function_from_index(i % power(B.m, B.n), B.n, B.m);
                          i /= power(B.m, B.n);
                          const auto g = function_from_index(i, B.m, B.k);
                          return filter_functoriality_doc(B.n, B.m, B.k, core, f, g);
                        }};
}

Document filter_functoriality_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t cod = std::min<std::size_t>(3, b.max_points);
  const std::size_t n = draw(rng, 1, b.max_points), m = draw(rng, 1, cod), k = draw(rng, 1, cod);
  PointSet core(n);
  while (core.empty()) core = random_subset(rng, n);
  return filter_functoriality_doc(n, m, k, core, random_function(rng, n, m), random_function(rng, m, k));
}

Document pullback_doc(std::size_t n, std::size_t m, const std::vector<std::size_t>& f, const PointSet& core) {
  Document d;
  d.add_space("X", discrete(n));
  d.add_space("Y", discrete(m));
  d.add_map("f", "X", "Y", SpaceMap(d.space("X"), d.space("Y"), f));
  d.add_filter("F", "Y", FiniteFilter(d.space("Y").points(), core));
  return d;
}

Verdict check_pullback_lemma(const Document& d) {
  const FiniteFunction f = d.map("f").function();
  const FiniteFilter& F = d.filter("F");
  const std::size_t m = f.codomain().size();
  bool some_member_misses = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const PointSet s = subset_from_bits(m, bits);
    if (F.contains(s) && f.preimage_of(s).empty()) some_member_misses = true;
  }
  const auto pb = pullback(f, F);
  if (pb.has_value() == some_member_misses) return Verdict::violated("pullback definedness disagrees with the members");
  if (!pb) return Verdict::skip("pullback undefined");
  const FiniteFilter back = pushforward(f, *pb);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const PointSet s = subset_from_bits(m, bits);
    if (F.contains(s) && !back.contains(s)) return Verdict::violated("F ⊄ f∗f*F at " + show(s));
  }
  if (!F.is_coarser_than(back)) return Verdict::violated("is_coarser_than disagrees with membership");
  if (F.is_ultrafilter()) {
    if (!(back == F)) return Verdict::violated("f∗f*F ≠ F for an ultrafilter");
    if (!F.contains(f.image_of(PointSet::full(f.domain().size())))) return Verdict::violated("f(X) ∉ F");
  }
  return Verdict::holds();
}

std::optional<InstanceSource> pullback_exhaustive(const Bounds& b) {
  std::vector<Document> docs;
  const std::size_t cod = std::min<std::size_t>(3, b.max_points);
  for (std::size_t n = 1; n <= b.max_points; ++n) {
    for (std::size_t m = 1; m <= cod; ++m) {
      for (const auto& f : all_functions(n, m)) {
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
          docs.push_back(pullback_doc(n, m, f, subset_from_bits(m, bits)));
        }
      }
    }
  }
  return from_list(std::move(docs));
}

Document pullback_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 1, b.max_points), m = draw(rng, 1, std::min<std::size_t>(3, b.max_points));
  PointSet core(m);
  while (core.empty()) core = random_subset(rng, m);
  return pullback_doc(n, m, random_function(rng, n, m), core);
}

// -------------------------------------------------------------- spaces

Verdict check_reflect_laws(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& w = d.space("W");
  if (!(x.points() == w.points())) throw PreconditionError("X and W must share their points");
  const PseudoSpace rx = reflect_top(x);
  if (!rx.is_topological()) return Verdict::violated("R X is not topological");
  if (!x.conv().is_subset_of(rx.conv())) return Verdict::violated("X ⊄ R X");
  if (!(reflect_top(rx) == rx)) return Verdict::violated("R is not idempotent");
  if (!is_continuous(x, rx, SpaceMap::identity(x).assignment())) {
    return Verdict::violated("id: X → R X is not continuous");
  }
  if (x.conv().is_subset_of(w.conv()) && !rx.conv().is_subset_of(reflect_top(w).conv())) {
    return Verdict::violated("R is not monotone");
  }
  if (!(reflect_epi(x) == rx) || !(reflect_epi_to_top(rx) == rx)) return Verdict::violated("reflection tiers disagree");
  const std::size_t n = x.size();
  std::vector<PointSet> down(n);
  for (std::size_t p = 0; p < n; ++p) down[p] = reach_back(x, p);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const PointSet s = subset_from_bits(n, bits);
    bool open = true, closed = true;
    for (std::size_t p = 0; p < n; ++p) {
      if (s.test(p) && !down[p].is_subset_of(s)) open = false;
      if (!s.test(p) && down[p].intersects(s)) closed = false;
    }
    if (open != is_open_in_reflection(x, s) || closed != is_closed_in_reflection(x, s)) {
      return Verdict::violated("open/closed test wrong for " + show(s));
    }
  }
  const PseudoSpace meet = lattice_meet({x, w});
  const PseudoSpace join = lattice_join({x, w});
  if (!meet.conv().is_subset_of(x.conv()) || !meet.conv().is_subset_of(w.conv()) ||
      !x.conv().is_subset_of(join.conv()) || !w.conv().is_subset_of(join.conv())) {
    return Verdict::violated("meet/join are not bounds");
  }
  return Verdict::holds();
}

std::optional<InstanceSource> reflect_laws_exhaustive(const Bounds& b) {
  std::vector<Document> docs;
  for (std::size_t n = 0; n <= b.max_points; ++n) {
    const auto all = enumerate_spaces(n, SpaceFilter::All, false);
    for (const auto& x : all) {
      for (const auto& w : all) {
        Document d;
        d.add_space("X", x);
        d.add_space("W", w);
        docs.push_back(std::move(d));
      }
    }
  }
  return from_list(std::move(docs));
}

Document reflect_laws_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 0, b.max_points);
  PseudoSpace x = random_space(rng, n);
  Relation w = x.conv();
  if (chance(rng, 1, 2)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (chance(rng, 1, 4)) w.set(a, c);
      }
    }
  } else {
    w = random_space(rng, n).conv();
  }
  Document d;
  d.add_space("X", x);
  d.add_space("W", PseudoSpace(x.points(), w));
  return d;
}

Verdict check_reflect_universal(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  if (!y.is_topological()) return Verdict::skip("Y is not topological");
  const PseudoSpace rx = reflect_top(x);
  for (const auto& f : all_functions(x.size(), y.size())) {
    if (is_continuous(x, y, f) != is_continuous(rx, y, f)) return Verdict::violated("map " + show(f));
  }
  return Verdict::holds();
}

// initial/final structures: carrier A, spaces Y1.., maps g1..
Document sink_doc(Rng& rng, std::size_t max, bool topological, bool initial) {
  Document d;
  const std::size_t n = draw(rng, 0, max);
  d.add_space("A", discrete(n));
  const std::size_t k = draw(rng, 1, 3);
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string y = "Y" + std::to_string(i);
    const std::size_t m = draw(rng, initial ? (n > 0 ? 1 : 0) : 0, max);
    d.add_space(y, topological ? random_topology(rng, m) : random_space(rng, m));
    const std::string g = "g" + std::to_string(i);
    if (initial) {
      d.add_map(g, "A", y, SpaceMap(d.space("A"), d.space(y), random_function(rng, n, m)));
    } else if (n > 0 || m == 0) {
      d.add_map(g, y, "A", SpaceMap(d.space(y), d.space("A"), random_function(rng, m, n)));
    }
  }
  return d;
}

Verdict check_initial(const Document& d, bool require_transitive) {
  const Carrier& a = d.space("A").points();
  std::vector<std::pair<FiniteFunction, PseudoSpace>> sinks;
  bool all_top = true;
  for (const auto& name : d.names<MapItem>()) {
    const SpaceMap& g = d.map(name);
    sinks.emplace_back(g.function(), g.cod());
    all_top = all_top && g.cod().is_topological();
  }
  const PseudoSpace s = initial_structure(a, sinks);
  const auto all_continuous = [&](const PseudoSpace& t) {
    return std::all_of(sinks.begin(), sinks.end(),
                       [&](const auto& p) { return is_continuous(t, p.second, p.first.table()); });
  };
  if (require_transitive) {
    if (!all_top) return Verdict::skip("some target is not topological");
    return s.is_topological() ? Verdict::holds() : Verdict::violated("initial structure is not transitive");
  }
  if (!all_continuous(s)) return Verdict::violated("a listed map is not continuous");
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (s.converges(p, q)) continue;
      Relation bigger = s.conv();
      bigger.set(p, q);
      if (all_continuous(PseudoSpace(a, bigger))) return Verdict::violated("not greatest: edge can be added");
    }
  }
  return Verdict::holds();
}

Verdict check_final(const Document& d) {
  const Carrier& a = d.space("A").points();
  std::vector<std::pair<PseudoSpace, FiniteFunction>> sources;
  for (const auto& name : d.names<MapItem>()) {
    const SpaceMap& g = d.map(name);
    sources.emplace_back(g.dom(), g.function());
  }
  const PseudoSpace s = final_structure(a, sources);
  const auto all_continuous = [&](const PseudoSpace& t) {
    return std::all_of(sources.begin(), sources.end(),
                       [&](const auto& p) { return is_continuous(p.first, t, p.second.table()); });
  };
  if (!all_continuous(s)) return Verdict::violated("a listed map is not continuous");
  for (auto [p, q] : s.edges()) {
    Relation smaller = s.conv();
    smaller.reset(p, q);
    if (all_continuous(PseudoSpace(a, smaller))) return Verdict::violated("not least: edge can be removed");
  }
  return Verdict::holds();
}

Document surjection_doc(const PseudoSpace& x, std::size_t m, const std::vector<std::size_t>& q) {
  Document d;
  d.add_space("X", x);
  d.add_space("Q", discrete(m));
  d.add_map("q", "X", "Q", SpaceMap(x, d.space("Q"), q));
  return d;
}

Verdict check_final_sink(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const FiniteFunction q = d.map("q").function();
  if (!q.is_surjective()) return Verdict::skip("q is not surjective");
  const PseudoSpace lhs = reflect_top(final_structure(q.codomain(), {{x, q}}));
  const PseudoSpace rhs = quotient_topology(reflect_top(x), q);
  return lhs == rhs ? Verdict::holds() : Verdict::violated("R of the final structure differs from the final topology");
}

Document final_sink_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 0, b.max_points);
  const std::size_t m = n == 0 ? 0 : draw(rng, 1, n);
  return surjection_doc(random_space(rng, n), m, random_surjection(rng, n, m));
}

// -------------------------------------------------------- exponentials

Verdict check_exp_law(const Document& d) {
  const PseudoSpace& z = d.space("Z");
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  const MapSpace e = exponential(x, y);
  const PseudoSpace zx = product(z, x);
  const auto hs = continuous_maps(zx, y);
  const auto ks = continuous_maps(z, e.structure());
  if (hs.size() != ks.size()) {
    return Verdict::violated("|hom(Z×X,Y)| = " + std::to_string(hs.size()) + " but |hom(Z,Y^X)| = " +
                             std::to_string(ks.size()));
  }
  std::set<Assignment> curried;
  for (const auto& h : hs) {
    const SpaceMap hm(zx, y, h);
    const SpaceMap k = curry(hm, z, e);
    if (!is_continuous(k)) return Verdict::violated("curry of " + show(h) + " is not continuous");
    if (!(uncurry(k, e) == hm)) return Verdict::violated("uncurry(curry h) ≠ h for " + show(h));
    curried.insert(k.assignment());
  }
  if (curried.size() != hs.size()) return Verdict::violated("curry is not injective");
  for (const auto& k : ks) {
    const SpaceMap km(z, e.structure(), k);
    const SpaceMap h = uncurry(km, e);
    if (!is_continuous(h)) return Verdict::violated("uncurry of " + show(k) + " is not continuous");
    if (!(curry(h, z, e) == km)) return Verdict::violated("curry(uncurry k) ≠ k for " + show(k));
  }
  return Verdict::holds();
}

Document triple_doc(const PseudoSpace& z, const PseudoSpace& x, const PseudoSpace& y) {
  Document d;
  d.add_space("Z", z);
  d.add_space("X", x);
  d.add_space("Y", y);
  return d;
}

Document triple_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  PseudoSpace z = random_space(rng, draw(rng, 0, b.max_points));
  PseudoSpace x = random_space(rng, draw(rng, 0, b.max_points));
  PseudoSpace y = random_space(rng, draw(rng, 0, b.max_points));
  return triple_doc(z, x, y);
}

std::optional<InstanceSource> triple_exhaustive(const Bounds& b) {
  const auto all = spaces_between(0, b.max_points, SpaceFilter::All, b.up_to_iso);
  auto list = std::make_shared<std::vector<PseudoSpace>>(all);
  const std::uint64_t n = list->size();
  return InstanceSource{n * n * n, [list, n](std::uint64_t i) {
                          return triple_doc((*list)[i / (n * n)], (*list)[(i / n) % n], (*list)[i % n]);
                        }};
}

Verdict check_ev(const Document& d) {
  const MapSpace e = exponential(d.space("X"), d.space("Y"));
  const SpaceMap ev = evaluation_map(e);
  const std::size_t n = e.base().size();
  for (std::size_t i = 0; i < e.maps().size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) {
      if (ev(i * n + x) != e.maps()[i][x]) return Verdict::violated("ev(f, x) ≠ f(x)");
    }
  }
  return is_continuous(ev) ? Verdict::holds() : Verdict::violated("ev is not continuous");
}

Document pair_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  PseudoSpace x = random_space(rng, draw(rng, 0, b.max_points));
  PseudoSpace y = random_space(rng, draw(rng, 0, b.max_points));
  return pair_doc(x, y);
}

Document topological_pair_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  PseudoSpace x = random_topology(rng, draw(rng, 0, b.max_points));
  PseudoSpace y = random_topology(rng, draw(rng, 0, b.max_points));
  return pair_doc(x, y);
}

Verdict check_exp_transitive(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  if (!x.is_topological() || !y.is_topological()) return Verdict::skip("inputs are not topological");
  return exponential(x, y).structure().is_topological() ? Verdict::holds()
                                                        : Verdict::violated("Y^X is not transitive");
}

Verdict check_exp_product(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  const PseudoSpace& z = d.space("Z");
  const MapSpace lhs = exponential(x, product(y, z));
  const MapSpace ey = exponential(x, y);
  const MapSpace ez = exponential(x, z);
  const PseudoSpace rhs = product(ey.structure(), ez.structure());
  if (lhs.maps().size() != rhs.size()) return Verdict::violated("sizes differ");
  const std::size_t nz = z.size();
  std::vector<std::size_t> phi(lhs.maps().size());
  std::vector<bool> hit(rhs.size(), false);
  for (std::size_t i = 0; i < lhs.maps().size(); ++i) {
    Assignment fy, fz;
    for (auto v : lhs.maps()[i]) {
      fy.push_back(v / nz);
      fz.push_back(v % nz);
    }
    const auto iy = ey.index_of(fy);
    const auto iz = ez.index_of(fz);
    if (!iy || !iz) return Verdict::violated("a component of a continuous map is not continuous");
    phi[i] = *iy * ez.maps().size() + *iz;
    if (hit[phi[i]]) return Verdict::violated("canonical map is not injective");
    hit[phi[i]] = true;
  }
  for (std::size_t a = 0; a < phi.size(); ++a) {
    for (std::size_t c = 0; c < phi.size(); ++c) {
      if (lhs.structure().converges(a, c) != rhs.converges(phi[a], phi[c])) {
        return Verdict::violated("canonical bijection is not an isomorphism");
      }
    }
  }
  return Verdict::holds();
}

Verdict check_exp_filter_oracle(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  const MapSpace e = exponential(x, y);
  const Carrier& mc = e.structure().points();
  const std::size_t n = x.size();
  const std::size_t k = e.maps().size();
  std::vector<std::size_t> ev_table(k * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t p = 0; p < n; ++p) ev_table[i * n + p] = e.maps()[i][p];
  }
  const FiniteFunction ev(product_carrier({mc, x.points()}), y.points(), ev_table);
  // All filters on X converging to each point.
  std::vector<std::vector<FiniteFilter>> converging(n);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    FiniteFilter g(x.points(), subset_from_bits(n, bits));
    for (std::size_t p = 0; p < n; ++p) {
      if (converges(x, g, p)) converging[p].push_back(g);
    }
  }
  for (std::size_t gi = 0; gi < k; ++gi) {
    const FiniteFilter fg = FiniteFilter::principal(mc, gi);
    for (std::size_t fi = 0; fi < k; ++fi) {
      bool literal = true;
      for (std::size_t p = 0; p < n && literal; ++p) {
        for (const auto& g : converging[p]) {
          if (!converges(y, pushforward(ev, filter_product(fg, g)), e.maps()[fi][p])) {
            literal = false;
            break;
          }
        }
      }
      if (literal != e.structure().converges(gi, fi)) {
        return Verdict::violated("edge rule disagrees for " + show(e.maps()[gi]) + " → " + show(e.maps()[fi]));
      }
    }
  }
  return Verdict::holds();
}

Verdict check_homotopy_oracle(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const PseudoSpace& y = d.space("Y");
  std::optional<Basepoints> base;
  if (d.has("bx") && d.has("by")) base = Basepoints{d.map("bx")(0), d.map("by")(0)};
  const MapSpace e = base ? pointed_map_space(PointedSpace(x, base->dom), PointedSpace(y, base->cod)) : exponential(x, y);
  const auto label = weak_labels(e.structure().conv());
  for (std::size_t i = 0; i < e.maps().size(); ++i) {
    for (std::size_t j = 0; j < e.maps().size(); ++j) {
      const bool h = are_homotopic(SpaceMap(x, y, e.maps()[i]), SpaceMap(x, y, e.maps()[j]), base);
      if (h != (label[i] == label[j])) {
        return Verdict::violated("homotopy of " + show(e.maps()[i]) + " and " + show(e.maps()[j]));
      }
    }
  }
  return Verdict::holds();
}

Document homotopy_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  PseudoSpace x = random_space(rng, draw(rng, 1, b.max_points));
  PseudoSpace y = random_space(rng, draw(rng, 1, b.max_points));
  Document d = pair_doc(x, y);
  if (index % 2 == 1) {
    d.add_space("P", discrete(1));
    d.add_map("bx", "P", "X", SpaceMap(d.space("P"), x, {uniform(rng, x.size())}));
    d.add_map("by", "P", "Y", SpaceMap(d.space("P"), y, {uniform(rng, y.size())}));
  }
  return d;
}

// ------------------------------------------------------------- pasting

Verdict check_pasting_lemma(const Document& d) {
  const Cover& c = d.cover("K");
  const SpaceMap& f = d.map("f");
  const PastingVerdict v = check_pasting(c, restrict_to_pieces(c, f.assignment()), f.cod());
  if (!v.hypotheses_met || !v.pieces_continuous) return Verdict::skip(to_string(v.kind));
  if (v.violates_lemma()) return Verdict::violated(std::string("glued map is discontinuous (") + to_string(v.kind) + ")");
  return Verdict::holds();
}

std::vector<PointSet> random_cover(Rng& rng, const PseudoSpace& x, bool open) {
  const std::size_t n = x.size();
  const Relation closed = x.conv().closure();
  const auto basic = [&](std::size_t p) { return open ? closed.predecessors(p) : closed.successors(p); };
  std::vector<PointSet> pieces(draw(rng, 1, 4), PointSet(n));
  for (auto& piece : pieces) {
    const std::size_t k = draw(rng, 0, 2);
    for (std::size_t i = 0; i < k && n > 0; ++i) piece |= basic(uniform(rng, n));
  }
  PointSet covered(n);
  for (const auto& p : pieces) covered |= p;
  for (std::size_t p = 0; p < n; ++p) {
    if (!covered.test(p)) {
      const PointSet b = basic(p);
      pieces[uniform(rng, pieces.size())] |= b;
      covered |= b;
    }
  }
  return pieces;
}

Document pasting_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 1, b.max_points);
  const PseudoSpace x = random_space(rng, n);
  const auto pieces = random_cover(rng, x, index % 2 == 0);
  const PseudoSpace y = random_space(rng, draw(rng, 1, std::min<std::size_t>(4, b.max_points)));
  Assignment f;
  if (chance(rng, 1, 2)) {
    f = random_function(rng, n, y.size());
  } else {
    // Continuous on every piece: use only the edges inside some piece.
    Relation local = Relation::identity(n);
    for (const auto& p : pieces) {
      for (auto [a, c] : x.edges()) {
        if (p.test(a) && p.test(c)) local.set(a, c);
      }
    }
    f = *random_continuous_map(rng, PseudoSpace(x.points(), local), y);
  }
  Document d;
  d.add_space("X", x);
  d.add_space("Y", y);
  d.add_cover("K", "X", Cover(x, pieces));
  d.add_map("f", "X", "Y", SpaceMap(x, y, f));
  return d;
}

Verdict check_cover_refinement(const Document& d) {
  const Cover& k = d.cover("K");
  const Cover& l = d.cover("L");
  if (classify_cover(k) != CoverKind::AllOpen) return Verdict::skip("K is not an open cover");
  for (std::size_t j = 0; j < l.pieces().size(); ++j) {
    if (!l.piece_open(j)) return Verdict::skip("L has a piece that is not open");
    const bool inside = std::any_of(k.pieces().begin(), k.pieces().end(),
                                    [&](const PointSet& p) { return l.pieces()[j].is_subset_of(p); });
    if (!inside) return Verdict::skip("L does not refine K");
  }
  return classify_cover(l) == CoverKind::AllOpen ? Verdict::holds() : Verdict::violated("refinement is not AllOpen");
}

Document cover_refinement_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const PseudoSpace x = random_space(rng, draw(rng, 1, b.max_points));
  const auto pieces = random_cover(rng, x, true);
  std::vector<PointSet> finer;
  for (const auto& p : pieces) {
    for (auto a : p.members()) {
      if (chance(rng, 1, 2)) finer.push_back(minimal_open(x, a));
    }
    if (chance(rng, 1, 3)) finer.push_back(p);
  }
  PointSet covered(x.size());
  for (const auto& p : finer) covered |= p;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!covered.test(a)) finer.push_back(minimal_open(x, a));
  }
  Document d;
  d.add_space("X", x);
  d.add_cover("K", "X", Cover(x, pieces));
  d.add_cover("L", "X", Cover(x, finer));
  return d;
}

// ---------------------------------------------------------- components

Verdict check_pc_functorial(const Document& d) {
  const SpaceMap& f = d.map("f");
  if (!is_continuous(f)) return Verdict::skip("f is not continuous");
  const ComponentQuotient cx = path_components(f.dom());
  const ComponentQuotient cy = path_components(f.cod());
  const SpaceMap pf = induced_component_map(f, cx, cy);
  if (!is_continuous(pf)) return Verdict::violated("πC f is not continuous");
  for (std::size_t p = 0; p < f.dom().size(); ++p) {
    if (pf(cx.projection(p)) != cy.projection(f(p))) return Verdict::violated("square does not commute");
  }
  if (!(induced_component_map(SpaceMap::identity(f.dom()), cx, cx) == SpaceMap::identity(cx.quotient))) {
    return Verdict::violated("πC id ≠ id");
  }
  return Verdict::holds();
}

Document pc_functorial_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const PseudoSpace x = random_space(rng, draw(rng, 0, b.max_points));
  const PseudoSpace y = random_space(rng, draw(rng, x.size() > 0 ? 1 : 0, b.max_points));
  Document d = pair_doc(x, y);
  d.add_map("f", "X", "Y", SpaceMap(x, y, *random_continuous_map(rng, x, y)));
  return d;
}

Verdict check_pc_product_prop(const Document& d) {
  return check_pc_product(d.space("X"), d.space("Y")) ? Verdict::holds()
                                                      : Verdict::violated("πC(X×Y) ≇ πC X × πC Y");
}

Verdict check_pc_discrete(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const ComponentQuotient pc = path_components(x);
  if (!(pc.quotient.conv() == Relation::identity(pc.quotient.size()))) return Verdict::violated("quotient not discrete");
  if (!is_quotient_map(pc.projection)) return Verdict::violated("projection is not a quotient map");
  const auto label = weak_labels(x.conv());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if ((label[a] == label[c]) != (pc.projection(a) == pc.projection(c))) {
        return Verdict::violated("classes are not the weak components");
      }
    }
  }
  return Verdict::holds();
}

Document single_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  Document d;
  d.add_space("X", random_space(rng, draw(rng, 0, b.max_points)));
  return d;
}

Document single_topology_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  Document d;
  d.add_space("X", random_topology(rng, draw(rng, 0, b.max_points)));
  return d;
}

Document single_doc(const PseudoSpace& x) {
  Document d;
  d.add_space("X", x);
  return d;
}

Verdict check_pc_lift_prop(const Document& d) {
  const PseudoSpace& x = d.space("X");
  if (!x.is_topological()) return Verdict::skip("X is not topological");
  if (!check_pc_lift(x)) return Verdict::violated("R(πC X) differs from the quotient topology");
  const ComponentQuotient pc = path_components(x);
  if (!pc.quotient.is_topological()) return Verdict::violated("πC X is not topological");
  if (!(pc.quotient == quotient_topology(x, pc.projection.function()))) {
    return Verdict::violated("πC X differs from the quotient topology");
  }
  if (!is_biquotient(pc.projection)) return Verdict::violated("component projection is not biquotient");
  return Verdict::holds();
}

Verdict check_kent_prop(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const FiniteFunction q = d.map("q").function();
  if (!x.is_topological()) return Verdict::skip("X is not topological");
  if (!q.is_surjective()) return Verdict::skip("q is not surjective");
  const KentVerdict v = check_kent(x, q);
  if (!v.agrees()) {
    return Verdict::violated(std::string("coincide=") + (v.structures_coincide ? "true" : "false") +
                             " biquotient=" + (v.biquotient ? "true" : "false"));
  }
  return Verdict::holds();
}

std::optional<InstanceSource> kent_exhaustive(const Bounds& b) {
  std::vector<Document> docs;
  for (const auto& x : spaces_between(0, b.max_points, SpaceFilter::Topological, b.up_to_iso)) {
    const std::size_t n = x.size();
    for (std::size_t m = n == 0 ? 0 : 1; m <= std::min<std::size_t>(3, n); ++m) {
      for (const auto& q : all_surjections(n, m)) docs.push_back(surjection_doc(x, m, q));
    }
  }
  return from_list(std::move(docs));
}

Document kent_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 0, b.max_points);
  const std::size_t m = n == 0 ? 0 : draw(rng, 1, std::min<std::size_t>(3, n));
  return surjection_doc(random_topology(rng, n), m, random_surjection(rng, n, m));
}

Verdict check_biquotient_oracle(const Document& d) {
  const SpaceMap& f = d.map("f");
  if (!f.dom().is_topological() || !f.cod().is_topological() || !is_continuous(f) || !f.function().is_surjective()) {
    return Verdict::skip("not a continuous surjection of topological spaces");
  }
  if (open_sets(f.dom()).size() > 20) return Verdict::skip("too many open sets");
  const bool a = is_biquotient(f, BiquotientMethod::MinimalOpenSets);
  const bool b = is_biquotient(f, BiquotientMethod::CoverEnumeration);
  return a == b ? Verdict::holds() : Verdict::violated(std::string("minimal-open says ") + (a ? "true" : "false"));
}

Document biquotient_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const std::size_t n = draw(rng, 0, b.max_points);
  const std::size_t m = n == 0 ? 0 : draw(rng, 1, n);
  const PseudoSpace x = random_topology(rng, n);
  const auto q = random_surjection(rng, n, m);
  Relation r = quotient_topology(x, FiniteFunction(x.points(), Carrier::numbered(m), q)).conv();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      if (chance(rng, 1, 6)) r.set(a, c);
    }
  }
  Document d;
  d.add_space("X", x);
  d.add_space("Y", PseudoSpace(Carrier::numbered(m), r.closure()));
  d.add_map("f", "X", "Y", SpaceMap(x, d.space("Y"), q));
  return d;
}

Verdict check_induced_mult(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const SpaceMap& m = d.map("m");
  if (!is_continuous(m)) return Verdict::skip("m is not continuous");
  return induced_multiplication(x, m).continuous ? Verdict::holds() : Verdict::violated("μ is not continuous");
}

Document induced_mult_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  const PseudoSpace x = random_space(rng, draw(rng, 1, b.max_points));
  const PseudoSpace xx = product(x, x);
  Document d;
  d.add_space("X", x);
  d.add_space("XX", xx);
  d.add_map("m", "XX", "X", SpaceMap(xx, x, *random_continuous_map(rng, xx, x)));
  return d;
}

// -------------------------------------------------------------- groups

// Independent group-axiom oracle on a raw table.
bool group_oracle(std::size_t n, const std::vector<std::size_t>& t) {
  if (n == 0) return false;
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) ok = ok && t[e * n + a] == a && t[a * n + e] == a;
    if (ok) unit = e;
  }
  if (!unit) return false;
  for (std::size_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < n; ++b) has = has || (t[a * n + b] == *unit && t[b * n + a] == *unit);
    if (!has) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
      }
    }
  }
  return true;
}

Document table_doc(std::size_t n, const std::vector<std::size_t>& table) {
  Document d;
  d.add_space("X", discrete(n));
  d.add_space("XX", product(d.space("X"), d.space("X")));
  d.add_map("m", "XX", "X", SpaceMap(d.space("XX"), d.space("X"), table));
  return d;
}

Verdict check_group_validation(const Document& d) {
  const PseudoSpace& x = d.space("X");
  const std::vector<std::size_t>& t = d.map("m").assignment();
  bool accepted = true;
  try {
    ConvergenceGroup::from_table(x, t);
  } catch (const PreconditionError&) {
    accepted = false;
  }
  if (accepted != group_oracle(x.size(), t)) {
    return Verdict::violated(std::string("validator ") + (accepted ? "accepted" : "rejected") + " table " + show(t));
  }
  return Verdict::holds();
}

std::optional<InstanceSource> group_validation_exhaustive(const Bounds& b) {
  std::vector<std::pair<std::size_t, std::uint64_t>> blocks;
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= std::min<std::size_t>(b.max_points, 3); ++n) {
    blocks.emplace_back(n, power(n, n * n));
    total += blocks.back().second;
  }
  return InstanceSource{total, [blocks](std::uint64_t i) {
                          std::size_t bi = 0;
                          while (i >= blocks[bi].second) i -= blocks[bi++].second;
                          const std::size_t n = blocks[bi].first;
                          return table_doc(n, function_from_index(i, n * n, n));
                        }};
}

Document group_validation_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  std::vector<ConvergenceGroup> pool;
  for (auto& g : small_groups()) {
    if (g.order() <= b.max_points) pool.push_back(g);
  }
  const ConvergenceGroup& g = pool[uniform(rng, pool.size())];
  std::vector<std::size_t> t = g.mult_table();
  const std::size_t n = g.order();
  const std::size_t mutations = uniform(rng, 3);
  for (std::size_t k = 0; k < mutations; ++k) t[uniform(rng, t.size())] = uniform(rng, n);
  if (chance(rng, 1, 4)) {
    // Relabel through a random permutation; still a group.
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    shuffle(rng, p);
    std::vector<std::size_t> u(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) u[p[a] * n + p[c]] = p[t[a * n + c]];
    }
    t = u;
  }
  return table_doc(n, t);
}

Document group_doc(const ConvergenceGroup& g) {
  Document d;
  d.add_space("S", g.space());
  d.add_group("G", "S", g);
  return d;
}

// Least structure containing the seed that is transitive and invariant
// under inversion and translations.
Relation quasitop_closure(const ConvergenceGroup& g, Relation r) {
  const std::size_t n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    const Relation before = r;
    r = r.closure();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    r.for_each([&](std::size_t a, std::size_t x) { edges.emplace_back(a, x); });
    for (auto [a, x] : edges) {
      r.set(g.inv(a), g.inv(x));
      for (std::size_t t = 0; t < n; ++t) {
        r.set(g.mul(t, a), g.mul(t, x));
        r.set(g.mul(a, t), g.mul(x, t));
      }
    }
    changed = !(r == before);
  }
  return r;
}

Document group_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  std::vector<ConvergenceGroup> pool;
  for (auto& g : small_groups()) {
    if (g.order() <= b.max_points) pool.push_back(g);
  }
  const ConvergenceGroup& g = pool[index % pool.size()];
  const std::size_t n = g.order();
  Relation seed_rel = Relation::identity(n);
  const std::size_t density = draw(rng, 1, 4);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (chance(rng, density, 4 * n)) seed_rel.set(a, x);
    }
  }
  switch ((index / pool.size()) % 3) {
    case 0: return group_doc(g.with_structure(compatible_closure(g, seed_rel)));
    case 1: return group_doc(g.with_structure(random_space(rng, n).conv()));
    default: return group_doc(g.with_structure(quasitop_closure(g, seed_rel)));
  }
}

std::optional<InstanceSource> group_exhaustive(const Bounds& b) {
  std::vector<Document> docs;
  for (const auto& g : small_groups()) {
    if (g.order() > std::min<std::size_t>(b.max_points, 4)) continue;
    for_each_space(g.order(), SpaceFilter::All, false, [&](const PseudoSpace& s) {
      docs.push_back(group_doc(g.with_structure(s.conv())));
      return true;
    });
  }
  return from_list(std::move(docs));
}

Verdict check_group_remark(const Document& d) {
  const ConvergenceGroup& g = d.group("G");
  const bool q = is_quasitop_group(g), p = is_pstop_group(g), t = is_top_group(g);
  if ((q && p) != t) {
    return Verdict::violated(std::string("quasitop=") + (q ? "1" : "0") + " pstop=" + (p ? "1" : "0") +
                             " top=" + (t ? "1" : "0"));
  }
  return Verdict::holds();
}

Verdict check_hgroup(const Document& d) {
  const ConvergenceGroup& g = d.group("G");
  if (!is_pstop_group(g)) return Verdict::skip("not a pseudotopological group");
  const HGroupReport r =
      is_h_group(PointedSpace(g.space(), g.unit()), g.multiplication_map(), g.inversion_map());
  if (r.ok()) return Verdict::holds();
  std::string failed;
  if (!r.right_unit) failed += " right-unit";
  if (!r.left_unit) failed += " left-unit";
  if (!r.right_inverse) failed += " right-inverse";
  if (!r.left_inverse) failed += " left-inverse";
  if (!r.associative) failed += " associativity";
  return Verdict::violated("H-group clauses fail:" + failed);
}

Verdict check_group_components(const Document& d) {
  const ConvergenceGroup& g = d.group("G");
  if (!is_pstop_group(g)) return Verdict::skip("not a pseudotopological group");
  const InducedMultiplication im = induced_multiplication(g.space(), g.multiplication_map());
  if (!im.continuous) return Verdict::violated("μ is not continuous");
  try {
    const ConvergenceGroup q = ConvergenceGroup::from_table(im.components.quotient, im.mu.assignment());
    if (!is_pstop_group(q)) return Verdict::violated("component quotient is not a pseudotopological group");
  } catch (const PreconditionError& e) {
    return Verdict::violated(std::string("component quotient is not a group: ") + e.what());
  }
  return Verdict::holds();
}

// Finite pseudotopological groups are exactly the coset relations
// a → x ⟺ a⁻¹x ∈ N of normal subgroups N.
Verdict check_pstop_cosets(const Document& d) {
  const ConvergenceGroup& g = d.group("G");
  const std::size_t n = g.order();
  const PointSet nset = g.space().conv().successors(g.unit());
  bool coset = true;
  for (auto a : nset.members()) {
    for (auto c : nset.members()) coset = coset && nset.test(g.mul(a, c));
    coset = coset && nset.test(g.inv(a));
    for (std::size_t t = 0; t < n; ++t) coset = coset && nset.test(g.mul(g.mul(t, a), g.inv(t)));
  }
  for (std::size_t a = 0; a < n && coset; ++a) {
    for (std::size_t x = 0; x < n; ++x) coset = coset && g.space().converges(a, x) == nset.test(g.mul(g.inv(a), x));
  }
  const bool p = is_pstop_group(g);
  if (p != coset) return Verdict::violated(p ? "pstop structure is not a coset relation" : "coset relation is not pstop");
  if (p && !g.space().is_topological()) return Verdict::violated("pstop group is not topological");
  return Verdict::holds();
}

// ------------------------------------------------------------- harness

Verdict check_roundtrip(const Document& d) {
  const std::string once = serialize(d);
  const Document again = parse_document(once);
  if (serialize(again) != once) return Verdict::violated("serialize∘parse is not the identity");
  if (again.items().size() != d.items().size()) return Verdict::violated("item count changed");
  for (const auto& name : d.names<SpaceItem>()) {
    if (!(again.space(name) == d.space(name))) return Verdict::violated("space " + name + " changed");
  }
  for (const auto& name : d.names<MapItem>()) {
    if (!(again.map(name) == d.map(name))) return Verdict::violated("map " + name + " changed");
  }
  for (const auto& name : d.names<GroupItem>()) {
    if (!(again.group(name) == d.group(name))) return Verdict::violated("group " + name + " changed");
  }
  for (const auto& name : d.names<CoverItem>()) {
    if (!(again.cover(name) == d.cover(name))) return Verdict::violated("cover " + name + " changed");
  }
  for (const auto& name : d.names<FilterItem>()) {
    if (!(again.filter(name) == d.filter(name))) return Verdict::violated("filter " + name + " changed");
  }
  return Verdict::holds();
}

Document roundtrip_sample(std::uint64_t seed, std::uint64_t index, const Bounds& b) {
  Rng rng = instance_rng(seed, index);
  Document d;
  d.header.push_back("# sample " + std::to_string(index));
  const PseudoSpace x = random_space(rng, draw(rng, 1, b.max_points));
  const PseudoSpace y = random_space(rng, draw(rng, 1, b.max_points));
  d.add_space("X", x);
  d.add_space("Y", y);
  d.add_space("XY", product(x, y));
  d.add_space("X+Y", coproduct({x, y}));
  d.add_map("f", "X", "Y", SpaceMap(x, y, random_function(rng, x.size(), y.size())));
  d.add_cover("K", "X", Cover(x, random_cover(rng, x, chance(rng, 1, 2))));
  PointSet core(x.size());
  while (core.empty()) core = random_subset(rng, x.size());
  d.add_filter("F", "X", FiniteFilter(x.points(), core));
  if (x.size() <= 3 && y.size() <= 3) {
    const MapSpace e = exponential(x, y);
    d.add_space("E", e.structure());
  }
  const auto groups = small_groups();
  const ConvergenceGroup& g0 = groups[uniform(rng, groups.size())];
  const ConvergenceGroup g = g0.with_structure(compatible_closure(g0, random_space(rng, g0.order()).conv()));
  d.add_space("S", g.space());
  d.add_group("G", "S", g);
  return d;
}

std::vector<std::unique_ptr<Property>> build_registry() {
  std::vector<std::unique_ptr<Property>> r;
  const auto add = [&](auto&&... args) {
    r.push_back(std::make_unique<TableProperty>(std::forward<decltype(args)>(args)...));
  };

  add("filter_functoriality", "(g∘f)∗F = g∗(f∗F), f∗ matches its definition and preserves ultrafilters", 4,
      filter_functoriality_sample, check_filter_functoriality, filter_functoriality_exhaustive);
  add("pullback_lemma", "F ⊆ f∗(f*F) when defined, with equality and f(X) ∈ F for ultrafilters", 4, pullback_sample,
      check_pullback_lemma, pullback_exhaustive);

  add("reflect_laws", "R is a closure: idempotent, monotone, extensive; open sets are the down-sets", 3,
      reflect_laws_sample, check_reflect_laws, reflect_laws_exhaustive);
  add("reflect_universal", "maps X → Y into a topological Y are continuous from R X", 3,
      topological_pair_sample, check_reflect_universal, [](const Bounds& b) -> std::optional<InstanceSource> {
        return pair_source(spaces_between(0, b.max_points, SpaceFilter::All, b.up_to_iso),
                           spaces_between(0, b.max_points, SpaceFilter::Topological, b.up_to_iso));
      });
  add("initial_greatest", "the initial structure is the greatest making every map continuous", 3,
      [](std::uint64_t seed, std::uint64_t i, const Bounds& b) {
        Rng rng = instance_rng(seed, i);
        return sink_doc(rng, b.max_points, false, true);
      },
      [](const Document& d) { return check_initial(d, false); });
  add("initial_preserved", "initial structures from maps into topological spaces are topological", 4,
      [](std::uint64_t seed, std::uint64_t i, const Bounds& b) {
        Rng rng = instance_rng(seed, i);
        return sink_doc(rng, b.max_points, true, true);
      },
      [](const Document& d) { return check_initial(d, true); });
  add("final_least", "the final structure is the least making every map continuous", 3,
      [](std::uint64_t seed, std::uint64_t i, const Bounds& b) {
        Rng rng = instance_rng(seed, i);
        return sink_doc(rng, b.max_points, false, false);
      },
      check_final);
  add("final_sink_preservation", "R of a final structure is the final topology of the reflections", 5,
      final_sink_sample, check_final_sink);

  add("exp_law", "currying is a bijection hom(Z×X, Y) ≅ hom(Z, Y^X) preserving continuity", 3, triple_sample,
      check_exp_law, triple_exhaustive);
  add("ev_continuous", "evaluation Y^X × X → Y is continuous", 4, pair_sample, check_ev,
      [](const Bounds& b) -> std::optional<InstanceSource> {
        const auto all = spaces_between(0, b.max_points, SpaceFilter::All, b.up_to_iso);
        return pair_source(all, all);
      });
  add("exp_transitive", "exponentials of topological spaces are topological", 3, topological_pair_sample,
      check_exp_transitive, [](const Bounds& b) -> std::optional<InstanceSource> {
        const auto top = spaces_between(0, b.max_points, SpaceFilter::Topological, b.up_to_iso);
        return pair_source(top, top);
      });
  add("exp_product", "Y^X × Z^X ≅ (Y×Z)^X canonically", 3, triple_sample,
      [](const Document& d) { return check_exp_product(d); });
  add("exp_filter_oracle", "the exponential edge rule matches convergence of ev∗(F × G) for all filters", 3,
      pair_sample, check_exp_filter_oracle);
  add("homotopy_oracle", "lazy homotopy search agrees with weak components of the map space", 3, homotopy_sample,
      check_homotopy_oracle);

  add("pasting", "open or closed covers with continuous pieces glue to continuous maps", 6, pasting_sample,
      check_pasting_lemma);
  add("cover_refinement", "refining an open cover by open pieces keeps it AllOpen", 6, cover_refinement_sample,
      check_cover_refinement);

  add("pc_functorial", "πC f ∘ q_X = q_Y ∘ f and πC id = id", 5, pc_functorial_sample, check_pc_functorial);
  add("pc_product", "πC(X×Y) ≅ πC X × πC Y", 5, pair_sample, check_pc_product_prop,
      [](const Bounds& b) -> std::optional<InstanceSource> {
        const auto all = spaces_between(0, b.max_points, SpaceFilter::All, b.up_to_iso);
        return pair_source(all, all);
      });
  add("pc_discrete", "component quotients are discrete quotients by the weak components", 6, single_sample,
      check_pc_discrete, [](const Bounds& b) -> std::optional<InstanceSource> {
        return single_source(b.max_points, SpaceFilter::All, b.up_to_iso, single_doc);
      });
  add("pc_lift", "for topological X, R(πC X) = πC X = quotient topology, and q_X is biquotient", 3,
      single_topology_sample, check_pc_lift_prop, [](const Bounds& b) -> std::optional<InstanceSource> {
        return single_source(b.max_points, SpaceFilter::Topological, b.up_to_iso, single_doc);
      });
  add("kent", "final pseudotopology = final topology iff the map is biquotient", 4, kent_sample, check_kent_prop,
      kent_exhaustive);
  add("biquotient_oracle", "minimal-open biquotient test agrees with literal cover enumeration", 4,
      biquotient_sample, check_biquotient_oracle);
  add("induced_mult", "a continuous X × X → X induces a continuous multiplication on πC X", 4,
      induced_mult_sample, check_induced_mult);

  add("group_validation", "group tables are accepted exactly when they satisfy the axioms", 6,
      group_validation_sample, check_group_validation, group_validation_exhaustive);
  add("group_remark", "quasitopological and pseudotopological group iff topological group", 6, group_sample,
      check_group_remark, group_exhaustive);
  add("hgroup", "pseudotopological groups are H-groups", 6, group_sample, check_hgroup, group_exhaustive);
  add("group_components", "πC of a pseudotopological group is a pseudotopological group", 6, group_sample,
      check_group_components, group_exhaustive);
  add("pstop_cosets", "pseudotopological group structures are the coset relations of normal subgroups", 6,
      group_sample, check_pstop_cosets, group_exhaustive);

  add("roundtrip", "documents survive serialize then parse unchanged", 4, roundtrip_sample, check_roundtrip,
      [](const Bounds& b) -> std::optional<InstanceSource> {
        return single_source(b.max_points, SpaceFilter::All, b.up_to_iso, single_doc);
      });

  std::sort(r.begin(), r.end(), [](const auto& a, const auto& c) { return a->name() < c->name(); });
  return r;
}

}  // namespace

const std::vector<std::unique_ptr<Property>>& property_registry() {
  static const std::vector<std::unique_ptr<Property>> registry = build_registry();
  return registry;
}

}  // namespace finconv
