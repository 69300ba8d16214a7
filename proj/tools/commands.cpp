#include "commands.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "outerdraw/consistency.hpp"
#include "outerdraw/construct.hpp"
#include "outerdraw/io.hpp"
#include "outerdraw/oracle.hpp"
#include "outerdraw/rules.hpp"
#include "outerdraw/stretch.hpp"
#include "outerdraw/svg.hpp"
#include "outerdraw/uniform.hpp"

namespace outerdraw::cli {

namespace {

struct Options {
  std::string file;
  std::string output;
  int k = 0;
  int n = 0;
  bool closed = false;
  bool drawings = false;
  int guard = kDefaultGuard;
  std::uint64_t seed = 1;
};

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

int emit(std::ostream& out, const Json& doc, bool ok) {
  out << doc.dump(2) << '\n';
  return ok ? 0 : 1;
}

void expect_k(const Options& o, int k) {
  if (o.k != 0 && o.k != k)
    throw InputError("--k " + std::to_string(o.k) + " does not match the document (k = " + std::to_string(k) + ")");
}

Json rotation_failure(const RotationSystem& rs) {
  Violation v{"infeasible_rotations", {}, minimal_infeasible_subset(rs)};
  return {{"consistent", false}, {"witness", violation_to_json(v)}};
}

int check_rotations(const Options& o, const RotationSystem& rs, std::ostream& out) {
  expect_k(o, rs.k());
  auto found = search_rotation(rs);
  if (!found) return emit(out, rotation_failure(rs), false);
  Json doc = {{"consistent", true}, {"assignment", type_table_document(rs.k(), *found)}};
  return emit(out, doc, true);
}

int cmd_check(const Options& o, std::ostream& out) {
  const Json doc = read_document(o.file);
  const std::string kind = document_kind(doc);
  if (kind == "at_graph") {
    const ATGraph g = parse_at_graph(doc);
    expect_k(o, g.k);
    const Verdict v = realize_atgraph(g);
    return emit(out, verdict_to_json(v), v.consistent);
  }
  if (kind == "rotations") return check_rotations(o, parse_rotations(doc), out);
  if (kind == "wiring") {
    expect_k(o, 2);
    const Verdict v = check_k2(extract_table(parse_wiring(doc)));
    return emit(out, verdict_to_json(v), v.consistent);
  }
  const TypeTableDoc t = parse_type_table(doc);
  expect_k(o, t.k);
  switch (t.alphabet) {
    case TypeTableDoc::Alphabet::K32: {
      const Verdict v = check_k3(*t.k32);
      return emit(out, verdict_to_json(v), v.consistent);
    }
    case TypeTableDoc::Alphabet::Uniform: {
      const auto bad = first_violation_uniform(*t.uniform, t.k);
      Json j = verdict_to_json(bad ? Verdict::fail(*bad) : Verdict::ok());
      if (!bad) j["tree"] = decompose_uniform(*t.uniform)->to_string();
      return emit(out, j, !bad);
    }
    case TypeTableDoc::Alphabet::ABN:
      break;
  }
  const Verdict v = t.k == 2 ? check_k2(t.tables.at({1, 2})) : check_general(t.k, t.tables);
  return emit(out, verdict_to_json(v), v.consistent);
}

int cmd_realize(const Options& o, std::ostream& out) {
  const Json doc = read_document(o.file);
  Table2 table;
  if (document_kind(doc) == "at_graph") {
    const ATGraph g = parse_at_graph(doc);
    if (g.k != 2) throw InputError("realize handles k = 2 only");
    table = types_from_crossings(g).at({1, 2});
  } else {
    const TypeTableDoc t = parse_type_table(doc);
    if (t.alphabet != TypeTableDoc::Alphabet::ABN || t.k != 2) throw InputError("realize handles k = 2 ABN tables only");
    table = t.tables.at({1, 2});
  }
  expect_k(o, 2);
  const auto d = realize_k2(table);
  if (!d) return emit(out, verdict_to_json(Verdict::fail(d.witness())), false);
  return emit(out, wiring_document(d.value()), true);
}

int cmd_count(const Options& o, std::ostream& out) {
  const BigInt c = o.closed ? count_uniform_closed(o.k, o.n) : count_uniform(o.k, o.n);
  out << c.get_str() << '\n';
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.drawings) {
    if (o.k != 2) throw InputError("--drawings enumerates K_{2,n} only (use --k 2)");
    for (const auto& t : enumerate_drawings_k2(o.n, o.guard)) out << type_table_document(t).dump() << '\n';
    return 0;
  }
  if (o.n > std::max(o.guard, 8)) throw InputError("enumerate: n exceeds the guard (raise --guard)");
  for_each_uniform_tree(o.k, o.n, [&](const DecompositionTree& tr) {
    out << Json{{"tree", tr.to_string()}, {"table", table_to_json(tree_to_table(tr))}}.dump() << '\n';
    return true;
  });
  return 0;
}

int cmd_rotations(const Options& o, std::ostream& out) {
  const RotationSystem rs = parse_rotations(read_document(o.file));
  expect_k(o, rs.k());
  if (rs.k() != 3) return check_rotations(o, rs, out);
  auto t = search_rotation_k3(rs.perms[0], rs.perms[1], rs.perms[2]);
  if (!t) return emit(out, rotation_failure(rs), false);
  return emit(out, {{"consistent", true}, {"assignment", type_table_document(*t)}}, true);
}

int cmd_stretch(const Options& o, std::ostream& out) {
  const RotationSystem rs = parse_rotations(read_document(o.file));
  if (rs.k() != 3) throw InputError("stretch handles k = 3 only");
  expect_k(o, 3);
  const auto w = straightline_k3(rs.perms[0], rs.perms[1], rs.perms[2]);
  if (!w) return emit(out, {{"feasible", false}}, false);
  return emit(out, {{"feasible", true}, {"placement", static_cast<int>(w->placement)}, {"points", points_to_json(w->points)}},
              true);
}

int cmd_render(const Options& o, std::ostream& out) {
  const WiringDiagram d = parse_wiring(read_document(o.file));
  const std::string svg = render_svg(d);
  if (o.output.empty()) {
    out << svg;
    return 0;
  }
  std::ofstream f(o.output);
  if (!f) throw InputError("cannot write " + o.output);
  f << svg;
  return 0;
}

int cmd_random_points(const Options& o, std::ostream& out) {
  const PointsetInstance inst = random_pointset_rotations(o.n, o.seed);
  Json doc = rotations_document(inst.rotations);
  doc["points"] = points_to_json(inst.points);
  return emit(out, doc, true);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outer drawings of complete bipartite graphs"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "decide consistency of a table, AT-graph, rotation system or diagram");
  check->add_option("--k", o.k, "number of outer vertices (checked against the document)");
  check->add_option("file", o.file, "input document")->required();

  auto* realize = app.add_subcommand("realize", "wiring diagram for a consistent K_{2,n} table");
  realize->add_option("--k", o.k, "must be 2");
  realize->add_option("file", o.file, "input document")->required();

  auto* count = app.add_subcommand("count", "number of uniform outer drawings T(k,n)");
  count->add_option("--k", o.k)->required()->check(CLI::Range(1, 1000));
  count->add_option("--n", o.n)->required()->check(CLI::Range(1, 100000));
  count->add_flag("--closed", o.closed, "use the closed form");

  auto* enumerate = app.add_subcommand("enumerate", "list uniform decomposition trees, or K_{2,n} drawings");
  enumerate->add_option("--k", o.k)->required()->check(CLI::Range(1, 1000));
  enumerate->add_option("--n", o.n)->required()->check(CLI::Range(1, 1000));
  enumerate->add_flag("--drawings", o.drawings, "enumerate all K_{2,n} drawing tables instead");
  enumerate->add_option("--guard", o.guard, "raise the size limit");

  auto* rotations = app.add_subcommand("rotations", "search a type assignment for a rotation system");
  rotations->add_option("--k", o.k);
  rotations->add_option("file", o.file, "rotations document")->required();

  auto* stretch = app.add_subcommand("stretch", "straight-line realization of a K_{3,n} rotation system");
  stretch->add_option("file", o.file, "rotations document")->required();

  auto* render = app.add_subcommand("render", "SVG of a wiring diagram");
  render->add_option("file", o.file, "wiring document")->required();
  render->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* random_points = app.add_subcommand("random-points", "rotations of a random point set (k = 3)");
  random_points->add_option("--n", o.n)->required()->check(CLI::Range(1, 10000));
  random_points->add_option("--seed", o.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (realize->parsed()) return cmd_realize(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (rotations->parsed()) return cmd_rotations(o, out);
    if (stretch->parsed()) return cmd_stretch(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (random_points->parsed()) return cmd_random_points(o, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    out << Json{{"error", e.what()}, {"path", e.path()}}.dump(2) << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    out << Json{{"error", e.what()}}.dump(2) << '\n';
    return 2;
  }
  return 2;
}

}  // namespace outerdraw::cli
