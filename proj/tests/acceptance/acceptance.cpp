#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "finconv/components.hpp"
#include "finconv/document.hpp"
#include "finconv/enumerate.hpp"
#include "finconv/exponentials.hpp"
#include "finconv/interval_formulas.hpp"
#include "finconv/mining.hpp"
#include "finconv/pasting.hpp"

using namespace finconv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

MiningReport run(const std::string& property, bool exhaustive, std::uint64_t count = 0,
                 std::optional<std::size_t> max_points = std::nullopt, std::uint64_t seed = 1) {
  MiningTask t;
  t.property = property;
  t.exhaustive = exhaustive;
  t.count = count;
  t.max_points = max_points;
  t.seed = seed;
  return mine(t);
}

// Appends "name n/violations" and clears pass on any violation.
void absorb(Outcome& o, const MiningReport& r) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += r.property + " " + std::to_string(r.applicable) + "/" + std::to_string(r.instances) +
              " applicable, " + std::to_string(r.violations) + " violations";
  if (!r.ok()) o.pass = false;
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("failed: ") + what;
  }
}

std::string corpus(const std::string& name) { return std::string(FINCONV_CORPUS_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome filter_laws() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  absorb(o, run("filter_functoriality", true, 0, 4));
  absorb(o, run("pullback_lemma", true, 0, 4));
  const double s = seconds_since(t0);
  require(o, s < 10.0, "runtime under 10 s");
  return o;
}

Outcome exponential_law() {
  Outcome o;
  absorb(o, run("exp_law", false, 500, 3));
  const PseudoSpace s = PseudoSpace::from_edges({"0", "1"}, {{"0", "1"}});
  const std::size_t lhs = continuous_maps(product(s, s), s).size();
  const std::size_t rhs = continuous_maps(s, exponential(s, s).structure()).size();
  o.detail += "; |hom(S×S,S)| = " + std::to_string(lhs) + ", |hom(S,S^S)| = " + std::to_string(rhs);
  require(o, lhs == 6 && rhs == 6, "frozen count 6");
  return o;
}

Outcome evaluation() {
  Outcome o;
  absorb(o, run("ev_continuous", false, 1000, 4));
  return o;
}

Outcome epitop_collapse() {
  Outcome o;
  absorb(o, run("exp_transitive", true, 0, 3));
  const auto tops = enumerate_spaces(3, SpaceFilter::Topological, false);
  std::size_t pairs = 0, transitive = 0;
  for (const auto& x : tops) {
    for (const auto& y : tops) {
      ++pairs;
      transitive += exponential(x, y).structure().is_topological();
    }
  }
  o.detail += "; 3-point pairs " + std::to_string(transitive) + "/" + std::to_string(pairs) + " transitive";
  require(o, pairs == 841 && transitive == pairs, "29×29 sweep");
  return o;
}

Outcome pasting_lemma() {
  Outcome o;
  const MiningReport r = run("pasting", false, 10000, 6);
  absorb(o, r);
  // both regimes must actually be exercised
  const Property& p = find_property("pasting");
  std::size_t open = 0, closed = 0;
  for (std::uint64_t i = 0; i < r.instances; ++i) {
    const Document d = p.sample(1, i, Bounds{6, false});
    const Cover& c = d.cover(d.names<CoverItem>().front());
    const SpaceMap& f = d.map(d.names<MapItem>().front());
    const PastingVerdict v = check_pasting(c, restrict_to_pieces(c, f.assignment()), f.cod());
    if (!v.hypotheses_met || !v.pieces_continuous) continue;
    (is_all_open(c) ? open : closed) += 1;
  }
  o.detail += "; hypothesis cases AllOpen " + std::to_string(open) + ", AllClosed " + std::to_string(closed);
  require(o, open > 0 && closed > 0, "both regimes exercised");

  const Document mixed = load_document(corpus("mixed_cover.fcv"));
  const Cover& c = mixed.cover("K");
  const SpaceMap& f = mixed.map("f");
  const PastingVerdict v = check_pasting(c, restrict_to_pieces(c, f.assignment()), f.cod());
  o.detail += std::string("; Mixed counterexample GlueContinuous = ") + (v.glue_continuous ? "true" : "false");
  require(o, v.kind == CoverKind::Mixed && v.pieces_continuous && !v.glue_continuous, "Mixed counterexample");
  return o;
}

Outcome reflector() {
  Outcome o;
  absorb(o, run("reflect_laws", true, 0, 3));
  absorb(o, run("reflect_universal", true, 0, 3));
  absorb(o, run("final_sink_preservation", false, 1000));
  return o;
}

Outcome kent() {
  Outcome o;
  absorb(o, run("kent", true, 0, 4));
  const Document d = load_document(corpus("disjoint_chains.fcv"));
  const SpaceMap& q = d.map("q");
  const KentVerdict v = check_kent(q.dom(), q.function());
  o.detail += std::string("; disjoint chains: coincide = ") + (v.structures_coincide ? "true" : "false") +
              ", biquotient = " + (v.biquotient ? "true" : "false");
  require(o, !v.structures_coincide && !v.biquotient, "disjoint-chains witness negative on both sides");
  return o;
}

Outcome product_preservation() {
  Outcome o;
  absorb(o, run("pc_product", false, 1000, 5));
  return o;
}

Outcome induced_mult() {
  Outcome o;
  absorb(o, run("induced_mult", false, 500));
  return o;
}

Outcome enumeration() {
  Outcome o;
  const std::vector<std::uint64_t> expected{1, 4, 29, 355};
  std::string counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t c = count_spaces(n, SpaceFilter::Topological, false);
    counts += (n > 1 ? ", " : "") + std::to_string(c);
    require(o, c == expected[n - 1], "count for n = " + std::to_string(n));
  }
  o.detail = "labeled topologies " + counts + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome schedules() {
  Outcome o;
  const BoundaryReport r = check_boundaries(64);
  std::size_t cases = 0;
  for (const auto& c : r.checks) {
    cases += c.cases;
    require(o, c.holds, c.name + " " + c.counterexample);
  }
  const auto has = [&](const std::string& needle) {
    for (const auto& c : r.checks) {
      if (c.name.find(needle) != std::string::npos && c.holds) return true;
    }
    return false;
  };
  o.detail = std::to_string(r.checks.size()) + " identities, " + std::to_string(cases) + " exact cases" +
             (o.detail.empty() ? "" : "; " + o.detail);
  for (long k = 0; k <= 64; ++k) {
    const UnitRational t(Rational(k) / 64);
    require(o, eval(ScheduleTag::Chi, UnitRational(Rational(0)), t) == t.value(), "chi(0,t) = t");
  }
  const Schedule chi = Schedule::make(ScheduleTag::Chi);
  for (std::size_t i = 0; i + 1 < chi.pieces().size(); ++i) {
    const auto& lo = chi.pieces()[i];
    const auto& hi = chi.pieces()[i + 1];
    require(o, (lo.slope * lo.upper + lo.intercept).identical_to(hi.slope * hi.lower + hi.intercept),
            "chi piece agreement at breakpoint " + std::to_string(i + 1));
  }
  require(o, has("chi"), "report covers chi");
  return o;
}

Outcome h_group() {
  Outcome o;
  const MiningReport r = run("hgroup", false, 4800, 6);
  absorb(o, r);
  // the compatible third of the sample is pstop by construction
  require(o, r.applicable >= 1600, "at least 8 × 200 pstop instances");
  return o;
}

Outcome remark() {
  Outcome o;
  absorb(o, run("group_remark", false, 4800, 6));
  return o;
}

Outcome discreteness() {
  Outcome o;
  absorb(o, run("pc_discrete", false, 1000));
  std::size_t lifted = 0, total = 0;
  for (const auto& x : enumerate_spaces(3, SpaceFilter::Topological, false)) {
    ++total;
    lifted += check_pc_lift(x);
  }
  o.detail += "; check_pc_lift " + std::to_string(lifted) + "/" + std::to_string(total);
  require(o, total == 29 && lifted == 29, "pc lift on all 29 topologies");
  return o;
}

Outcome harness() {
  Outcome o;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(FINCONV_CORPUS_DIR)) {
    if (e.path().extension() == ".fcv") files.push_back(e.path().string());
  }
  std::size_t stable = 0;
  for (const auto& f : files) {
    const std::string text = read_file(f);
    const bool ok = serialize(parse_document(text)) == text;
    stable += ok;
    require(o, ok, "round-trip of " + std::filesystem::path(f).filename().string());
  }
  o.detail = "corpus " + std::to_string(stable) + "/" + std::to_string(files.size()) + " round-trip" +
             (o.detail.empty() ? "" : "; " + o.detail);
  require(o, !files.empty(), "corpus present");
  for (const char* prop : {"roundtrip", "pasting", "hgroup"}) {
    const std::string a = run(prop, false, 500, std::nullopt, 42).text();
    const std::string b = run(prop, false, 500, std::nullopt, 42).text();
    require(o, a == b, std::string("identical reports for ") + prop);
  }
  o.detail += "; identical seeds give identical reports";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"filter laws", filter_laws},
      {"exponential law", exponential_law},
      {"evaluation continuity", evaluation},
      {"finite EpiTop collapse", epitop_collapse},
      {"pasting lemma", pasting_lemma},
      {"reflector", reflector},
      {"Kent criterion", kent},
      {"πC product preservation", product_preservation},
      {"induced multiplication", induced_mult},
      {"enumeration cross-check", enumeration},
      {"schedules", schedules},
      {"H-group", h_group},
      {"quasitop ∧ pstop ⟺ top", remark},
      {"discreteness consequence", discreteness},
      {"harness", harness},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += std::string("; raised: ") + e.what();
    }
    failed += !o.pass;
    std::printf("[%s] %2zu. %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed in %.2f s\n", criteria.size() - failed, criteria.size(), seconds_since(start));
  return failed == 0 ? 0 : 1;
}
