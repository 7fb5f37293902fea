#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "finconv/components.hpp"
#include "finconv/document.hpp"
#include "finconv/enumerate.hpp"
#include "finconv/exponentials.hpp"
#include "finconv/groups.hpp"
#include "finconv/interval_formulas.hpp"
#include "finconv/mining.hpp"
#include "finconv/pasting.hpp"

using namespace finconv;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

const char* yes(bool b) { return b ? "true" : "false"; }

// Explicit name, or the only item of that kind.
template <class T>
std::string pick(const Document& doc, const std::string& given, const char* kind) {
  if (!given.empty()) return given;
  const auto names = doc.names<T>();
  if (names.size() != 1) {
    throw PreconditionError(std::string("document has ") + std::to_string(names.size()) + " " + kind +
                            " items; choose one by name");
  }
  return names.front();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw PreconditionError("cannot write '" + out + "'");
  f << text;
}

std::string edge_list(const PseudoSpace& s) {
  std::string out;
  for (auto [a, x] : s.edges()) out += (out.empty() ? "" : " ") + s.label(a) + ">" + s.label(x);
  return out.empty() ? "-" : out;
}

int space_summary(const Document& doc, const std::string& name) {
  const std::string n = pick<SpaceItem>(doc, name, "space");
  const PseudoSpace& s = doc.space(n);
  std::cout << "space: " << n << "\n"
            << "points: " << s.size() << "\n"
            << "edges: " << s.edges().size() << "\n"
            << "topological: " << yes(s.is_topological()) << "\n";
  if (s.size() <= 24) std::cout << "open-sets: " << open_sets(s).size() << "\n";
  std::cout << "components: " << path_components(s).classes.size() << "\n";
  return kOk;
}

int run_op(const std::string& op, const Document& doc, const std::vector<std::string>& names,
           const std::string& map_name, const std::string& subset, const std::string& as, const std::string& out) {
  Document res;
  const auto need = [&](std::size_t k) {
    if (names.size() != k) throw PreconditionError("op " + op + " takes " + std::to_string(k) + " --name option(s)");
  };
  if (op == "product" || op == "coproduct") {
    if (names.empty()) throw PreconditionError("op " + op + " needs at least one --name");
    std::vector<PseudoSpace> factors;
    for (const auto& n : names) factors.push_back(doc.space(n));
    res.add_space(as, op == "product" ? product(factors) : coproduct(factors));
  } else if (op == "subspace") {
    need(1);
    const PseudoSpace& x = doc.space(names[0]);
    std::vector<std::string> labels;
    std::istringstream in(subset);
    for (std::string l; in >> l;) labels.push_back(l);
    res.add_space(as, subspace(x, x.points().subset(labels)));
  } else if (op == "quotient") {
    const SpaceMap& q = doc.map(pick<MapItem>(doc, map_name, "map"));
    res.add_space(as, quotient(q.dom(), q.function()));
  } else if (op == "exponential") {
    need(2);
    res.add_space(as, exponential(doc.space(names[0]), doc.space(names[1])).structure());
  } else if (op == "reflect") {
    res.add_space(as, reflect_top(doc.space(pick<SpaceItem>(doc, names.empty() ? "" : names[0], "space"))));
  } else if (op == "components") {
    const std::string n = pick<SpaceItem>(doc, names.empty() ? "" : names[0], "space");
    const ComponentQuotient pc = path_components(doc.space(n));
    res.add_space(n, pc.source);
    res.add_space(as, pc.quotient);
    res.add_map("q", n, as, pc.projection);
  } else {
    throw PreconditionError("unknown op '" + op + "'");
  }
  emit(serialize(res), out);
  return kOk;
}

struct CheckArgs {
  std::string kind;
  std::string file;
  std::vector<std::string> names;
  std::string map;
  std::string cover;
  std::string group;
  bool oracle = false;
};

int run_check(const CheckArgs& a) {
  const Document doc = load_document(a.file);
  const std::string& k = a.kind;
  if (k == "continuity") {
    const SpaceMap& f = doc.map(pick<MapItem>(doc, a.map, "map"));
    const bool ok = is_continuous(f);
    std::cout << "continuous: " << yes(ok) << "\n";
    for (auto [p, x] : f.dom().edges()) {
      if (!f.cod().converges(f(p), f(x))) std::cout << "broken: " << f.dom().label(p) << ">" << f.dom().label(x) << "\n";
    }
    return ok ? kOk : kViolation;
  }
  if (k == "pasting") {
    const Cover& c = doc.cover(pick<CoverItem>(doc, a.cover, "cover"));
    const SpaceMap& f = doc.map(pick<MapItem>(doc, a.map, "map"));
    if (!(f.dom() == c.space())) throw PreconditionError("the map is not defined on the covered space");
    const PastingVerdict v = check_pasting(c, restrict_to_pieces(c, f.assignment()), f.cod());
    std::cout << "kind: " << to_string(v.kind) << "\n"
              << "locally-finite: " << yes(c.locally_finite()) << "\n"
              << "hypotheses-met: " << yes(v.hypotheses_met) << "\n"
              << "pieces-continuous: " << yes(v.pieces_continuous) << "\n"
              << "glue-continuous: " << yes(v.glue_continuous) << "\n"
              << "violates-lemma: " << yes(v.violates_lemma()) << "\n";
    return v.violates_lemma() ? kViolation : kOk;
  }
  if (k == "biquotient") {
    const SpaceMap& f = doc.map(pick<MapItem>(doc, a.map, "map"));
    const bool b = is_biquotient(f, a.oracle ? BiquotientMethod::CoverEnumeration : BiquotientMethod::MinimalOpenSets);
    std::cout << "biquotient: " << yes(b) << "\n";
    return b ? kOk : kViolation;
  }
  if (k == "kent") {
    const SpaceMap& q = doc.map(pick<MapItem>(doc, a.map, "map"));
    const KentVerdict v = check_kent(q.dom(), q.function());
    std::cout << "final-pseudotopology: " << edge_list(v.final_pseudotopology) << "\n"
              << "final-topology: " << edge_list(v.final_topology) << "\n"
              << "structures-coincide: " << yes(v.structures_coincide) << "\n"
              << "biquotient: " << yes(v.biquotient) << "\n"
              << "agrees: " << yes(v.agrees()) << "\n";
    return v.agrees() ? kOk : kViolation;
  }
  if (k == "quotient-map") {
    const bool b = is_quotient_map(doc.map(pick<MapItem>(doc, a.map, "map")));
    std::cout << "quotient-map: " << yes(b) << "\n";
    return b ? kOk : kViolation;
  }
  if (k == "exp-law") {
    if (a.names.size() != 3) throw PreconditionError("check exp-law takes --name Z --name X --name Y");
    const PseudoSpace& z = doc.space(a.names[0]);
    const PseudoSpace& x = doc.space(a.names[1]);
    const PseudoSpace& y = doc.space(a.names[2]);
    Document inst;
    inst.add_space("Z", z);
    inst.add_space("X", x);
    inst.add_space("Y", y);
    const Verdict v = find_property("exp_law").check(inst);
    std::cout << "hom(Z*X,Y): " << continuous_maps(product(z, x), y).size() << "\n"
              << "hom(Z,Y^X): " << continuous_maps(z, exponential(x, y).structure()).size() << "\n"
              << "bijection: " << yes(v.status == Verdict::Status::Holds) << "\n";
    if (!v.detail.empty()) std::cout << "detail: " << v.detail << "\n";
    return v.status == Verdict::Status::Violated ? kViolation : kOk;
  }
  if (k == "hgroup") {
    const ConvergenceGroup& g = doc.group(pick<GroupItem>(doc, a.group, "group"));
    const HGroupReport r = is_h_group(PointedSpace(g.space(), g.unit()), g.multiplication_map(), g.inversion_map());
    std::cout << "right-unit: " << yes(r.right_unit) << "\n"
              << "left-unit: " << yes(r.left_unit) << "\n"
              << "right-inverse: " << yes(r.right_inverse) << "\n"
              << "left-inverse: " << yes(r.left_inverse) << "\n"
              << "associative: " << yes(r.associative) << "\n"
              << "h-group: " << yes(r.ok()) << "\n";
    return r.ok() ? kOk : kViolation;
  }
  if (k == "pstop-group" || k == "quasitop-group") {
    const ConvergenceGroup& g = doc.group(pick<GroupItem>(doc, a.group, "group"));
    const bool p = is_pstop_group(g), q = is_quasitop_group(g);
    std::cout << "pstop-group: " << yes(p) << "\n"
              << "quasitop-group: " << yes(q) << "\n"
              << "top-group: " << yes(is_top_group(g)) << "\n";
    return (k == "pstop-group" ? p : q) ? kOk : kViolation;
  }
  throw PreconditionError("unknown check '" + k + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finconv: finite convergence spaces"};
  app.require_subcommand(1);
  int status = kOk;

  // space
  auto* space = app.add_subcommand("space", "summarize a space, or enumerate structures");
  std::string space_file, space_name;
  std::size_t enumerate_n = 0, bound = 0;
  bool topological = false, up_to_iso = false, list = false;
  space->add_option("file", space_file, "document");
  space->add_option("--name", space_name, "space to summarize");
  auto* enum_opt = space->add_option("--enumerate", enumerate_n, "count structures on N points");
  space->add_flag("--topological", topological, "only transitive structures");
  space->add_flag("--up-to-iso", up_to_iso, "one structure per isomorphism class");
  space->add_flag("--list", list, "print each structure as a document line");
  space->add_option("--max-points", bound, "override the enumeration bound");
  space->callback([&] {
    if (*enum_opt) {
      const std::optional<std::size_t> b = bound ? std::optional<std::size_t>(bound) : std::nullopt;
      std::uint64_t count = 0;
      for_each_space(enumerate_n, topological ? SpaceFilter::Topological : SpaceFilter::All, up_to_iso,
                     [&](const PseudoSpace& s) {
                       if (list) {
                         Document d;
                         d.add_space("X" + std::to_string(count), s);
                         std::cout << serialize(d);
                       }
                       ++count;
                       return true;
                     },
                     b);
      std::cout << "count: " << count << "\n";
      return;
    }
    if (space_file.empty()) throw PreconditionError("space: give a document or --enumerate N");
    status = space_summary(load_document(space_file), space_name);
  });

  // op
  auto* op = app.add_subcommand("op", "construct a space from a document");
  std::string op_kind, op_file, op_map, op_subset, op_as = "R", op_out;
  std::vector<std::string> op_names;
  op->add_option("operation", op_kind, "product|coproduct|subspace|quotient|exponential|reflect|components")
      ->required()
      ->check(CLI::IsMember({"product", "coproduct", "subspace", "quotient", "exponential", "reflect", "components"}));
  op->add_option("file", op_file, "document")->required();
  op->add_option("--name", op_names, "input space (repeatable, in order)");
  op->add_option("--map", op_map, "map for quotient");
  op->add_option("--subset", op_subset, "space-separated labels for subspace");
  op->add_option("--as", op_as, "name of the result");
  op->add_option("--out", op_out, "write the result here");
  op->callback([&] { status = run_op(op_kind, load_document(op_file), op_names, op_map, op_subset, op_as, op_out); });

  // check
  auto* check = app.add_subcommand("check", "evaluate a predicate or a lemma on a document");
  CheckArgs ca;
  check->add_option("kind", ca.kind)
      ->required()
      ->check(CLI::IsMember({"continuity", "pasting", "biquotient", "kent", "quotient-map", "exp-law", "hgroup",
                             "pstop-group", "quasitop-group"}));
  check->add_option("file", ca.file, "document")->required();
  check->add_option("--name", ca.names, "space names (exp-law: Z X Y)");
  check->add_option("--map", ca.map, "map name");
  check->add_option("--cover", ca.cover, "cover name");
  check->add_option("--group", ca.group, "group name");
  check->add_flag("--oracle", ca.oracle, "biquotient by literal cover enumeration");
  check->callback([&] { status = run_check(ca); });

  // formulas
  auto* formulas = app.add_subcommand("formulas", "exact reparametrization schedules");
  formulas->require_subcommand(1);
  auto* eval_cmd = formulas->add_subcommand("eval", "evaluate a schedule at (s, t)");
  std::string tag, s_text, t_text;
  eval_cmd->add_option("schedule", tag, "phi|phi-mirror|psi|psi-mirror|chi")->required();
  eval_cmd->add_option("s", s_text)->required();
  eval_cmd->add_option("t", t_text)->required();
  eval_cmd->callback([&] {
    const auto value = eval(parse_schedule_tag(tag), UnitRational::parse(s_text), UnitRational::parse(t_text));
    std::cout << to_string(value) << "\n";
  });
  auto* verify = formulas->add_subcommand("verify", "check every boundary identity");
  unsigned grid = 64;
  verify->add_option("--grid", grid, "grid denominator");
  verify->callback([&] {
    const BoundaryReport r = check_boundaries(grid);
    for (const auto& c : r.checks) {
      std::cout << (c.holds ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)";
      if (!c.holds) std::cout << " at " << c.counterexample;
      std::cout << "\n";
    }
    status = r.ok() ? kOk : kViolation;
  });

  // mine
  auto* mine_cmd = app.add_subcommand("mine", "run a registered property over an instance stream");
  MiningTask task;
  std::string replay_file;
  bool list_props = false;
  std::size_t max_points = 0;
  mine_cmd->add_option("property", task.property, "property name");
  mine_cmd->add_flag("--exhaustive", task.exhaustive, "enumerate every instance up to --max-points");
  mine_cmd->add_option("--seed", task.seed, "sampling seed");
  mine_cmd->add_option("--count", task.count, "number of sampled instances");
  mine_cmd->add_option("--max-points", max_points, "size bound");
  mine_cmd->add_flag("--up-to-iso", task.up_to_iso, "exhaustive streams modulo isomorphism");
  std::string out_dir;
  mine_cmd->add_option("--out", out_dir, "directory for witness documents");
  mine_cmd->add_option("--threads", task.threads, "worker threads (0: all cores)");
  mine_cmd->add_option("--replay", replay_file, "re-check a witness document");
  mine_cmd->add_flag("--list", list_props, "list registered properties");
  mine_cmd->callback([&] {
    if (list_props) {
      for (const auto& p : property_registry()) {
        std::cout << p->name() << " (max-points " << p->default_max_points()
                  << (p->exhaustive(Bounds{0, false}) ? ", exhaustive" : "") << "): " << p->summary() << "\n";
      }
      return;
    }
    if (!replay_file.empty()) {
      const Verdict v = replay(load_document(replay_file), task.property);
      const char* s = v.status == Verdict::Status::Holds ? "holds"
                      : v.status == Verdict::Status::Violated ? "violated" : "not-applicable";
      std::cout << "verdict: " << s << "\n";
      if (!v.detail.empty()) std::cout << "detail: " << v.detail << "\n";
      status = v.status == Verdict::Status::Violated ? kViolation : kOk;
      return;
    }
    if (task.property.empty()) throw PreconditionError("mine: name a property (see mine --list)");
    if (max_points) task.max_points = max_points;
    if (!out_dir.empty()) task.out_dir = out_dir;
    const MiningReport r = mine(task);
    std::cout << r.text();
    status = r.ok() ? kOk : kViolation;
  });

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "render a space as Graphviz");
  std::string dot_file, dot_name, dot_out;
  dot->add_option("file", dot_file, "document")->required();
  dot->add_option("--name", dot_name, "space name");
  dot->add_option("--out", dot_out, "output path");
  dot->callback([&] {
    const Document doc = load_document(dot_file);
    const std::string n = pick<SpaceItem>(doc, dot_name, "space");
    emit(to_dot(doc.space(n), n), dot_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return status;
}
