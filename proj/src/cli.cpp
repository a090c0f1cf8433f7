#include "circlesys/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "circlesys/equivalence.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/geometry.hpp"
#include "circlesys/io.hpp"
#include "circlesys/render.hpp"

namespace circlesys {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotThreeConnected:
    case Errc::NoClassMatch:
    case Errc::NotTangent:
    case Errc::NoInnermostFace:
      return 1;
    case Errc::NoConvergence:
    case Errc::DegenerateRadius:
    case Errc::DegenerateArc:
    case Errc::ILNotSimple:
      return 3;
    default:
      return 2;
  }
}

namespace {

struct Common {
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--tol", c.tol, "numeric tolerance (default 1e-9; verify defaults to 1e-8)");
  sub->add_option("--seed", c.seed, "seed for sampling commands");
  sub->add_option("--out", c.out_path, "write data here instead of standard output");
  sub->add_option("--format", c.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

Solid solid_from(const std::string& name) {
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron, Solid::Icosahedron})
    if (solid_name(s) == name) return s;
  throw UsageError("unknown solid " + name);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Systems of circles for 4-regular planar graphs", "circlesys"};
  app.require_subcommand(1);
  Common common;

  // Shared positional inputs and command-specific options.
  std::string input, input2;
  std::string family, cls = "THREE_CROSSING", kind = "gadget", geom_op;
  int c = 4, pairs = 2, n = 0, grid = 60, width = 800, height = 800;
  bool use_medial = false, no_labels = false, no_points = false, no_arcs = false, no_circles = false, shade = false;
  double r1 = 1.0, r2 = 0.5, phi = 1.0;
  std::string side = "interior";
  long count = 10000;

  auto* generate = app.add_subcommand("generate", "emit a graph, or a graph with a reference realization");
  generate
      ->add_option("family", family,
                   "octahedron, tetrahedron, cube, dodecahedron, icosahedron, flower, upper, canonical, gadget, "
                   "bigadget, augmented")
      ->required();
  generate->add_option("--c", c, "circle count for flower/upper");
  generate->add_option("--class", cls, "canonical realization class");
  generate->add_option("--kind", kind, "gadget or bigadget for augmented")->check(CLI::IsMember({"gadget", "bigadget"}));
  generate->add_option("--pairs", pairs, "gadget pairs per edge for augmented");
  generate->add_flag("--medial", use_medial, "emit the medial graph of the chosen solid");

  auto* realize_cmd = app.add_subcommand("realize", "touching-circle realization of a graph");
  realize_cmd->add_option("input", input, "graph JSON (default: standard input)");
  auto* verify_cmd = app.add_subcommand("verify", "check a realization against the structural rules");
  verify_cmd->add_option("input", input, "realization or bundle JSON");
  auto* bounds_cmd = app.add_subcommand("bounds", "circle-count bounds for n vertices");
  bounds_cmd->add_option("--n", n, "vertex count")->required();
  auto* equiv_cmd = app.add_subcommand("equiv", "are two realizations equivalent?");
  equiv_cmd->add_option("first", input, "realization JSON")->required();
  equiv_cmd->add_option("second", input2, "realization JSON")->required();
  auto* classify_cmd = app.add_subcommand("classify", "class of an octahedron realization");
  classify_cmd->add_option("input", input, "realization JSON");
  auto* geom_cmd = app.add_subcommand("geom", "tangent-circle oracles");
  geom_cmd
      ->add_option("op", geom_op, "inner-mate, outer-mate, phi-max, lemma, arc-search, descartes")
      ->required()
      ->check(CLI::IsMember({"inner-mate", "outer-mate", "phi-max", "lemma", "arc-search", "descartes"}));
  geom_cmd->add_option("--r1", r1);
  geom_cmd->add_option("--r2", r2);
  geom_cmd->add_option("--phi", phi);
  geom_cmd->add_option("--side", side)->check(CLI::IsMember({"interior", "exterior"}));
  geom_cmd->add_option("--count", count, "valid configurations for lemma");
  geom_cmd->add_option("--grid", grid, "grid resolution for arc-search");
  geom_cmd->add_option("--input", input, "packing or realization JSON for descartes");
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a realization or packing");
  render_cmd->add_option("input", input, "realization, bundle or packing JSON");
  render_cmd->add_option("--width", width);
  render_cmd->add_option("--height", height);
  render_cmd->add_flag("--no-labels", no_labels);
  render_cmd->add_flag("--no-points", no_points);
  render_cmd->add_flag("--no-arcs", no_arcs);
  render_cmd->add_flag("--no-circles", no_circles);
  render_cmd->add_flag("--shade", shade);

  for (CLI::App* sub : app.get_subcommands({})) add_common(sub, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RenderOptions render_opts;
  auto emit = [&](const std::string& text) {
    if (common.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(common.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write " + common.out_path);
      f << text;
    }
  };
  auto emit_json = [&](const Json& j) { emit(j.dump() + "\n"); };
  auto emit_realization = [&](const Json& j, const Realization& r) {
    if (common.format == "svg")
      emit(render_svg(r, render_opts));
    else
      emit_json(j);
  };
  auto json_only = [&] {
    if (common.format != "json") throw UsageError("this command only writes JSON");
  };
  const double tol = common.tol.value_or(1e-9);

  try {
    if (generate->parsed()) {
      std::optional<GraphWithRealization> with;
      std::optional<EmbeddedGraph> graph;
      if (family == "flower") {
        with = flower(c);
      } else if (family == "upper") {
        with = upper_bound_family(c, tol);
      } else if (family == "canonical") {
        Realization r = canonical_octahedron_realization(class_from_name(cls));
        EmbeddedGraph g = extract_abstract_graph(r);
        with = GraphWithRealization{std::move(g), std::move(r)};
      } else if (family == "gadget" || family == "bigadget") {
        graph = (family == "gadget" ? gadget() : bigadget()).graph;
      } else if (family == "augmented") {
        graph = augment_octahedron(kind == "gadget" ? GadgetKind::Gadget : GadgetKind::Bigadget, pairs);
      } else if (family == "octahedron" && !use_medial) {
        graph = octahedron();
      } else {
        graph = platonic(solid_from(family));
      }
      if (with) {
        emit_realization(bundle_json(with->graph, with->realization), with->realization);
      } else {
        json_only();
        emit_json(to_json(use_medial ? medial(*graph) : *graph));
      }
    } else if (realize_cmd->parsed()) {
      const EmbeddedGraph g = graph_from_json(parse_document(slurp(input, in)));
      const Realization r = realize(g, tol);
      emit_realization(to_json(r), r);
    } else if (verify_cmd->parsed()) {
      json_only();
      const Json doc = parse_document(slurp(input, in));
      const Realization r = realization_from_json(doc);
      std::optional<EmbeddedGraph> g;
      if (document_type(doc) == "bundle") g = graph_from_json(doc.at("graph"));
      const VerifyReport rep = verify_realization(r, g ? &*g : nullptr, common.tol.value_or(1e-8));
      emit_json(to_json(rep));
      for (const Violation& v : rep.violations) err << v.rule << ": " << v.detail << "\n";
      return rep.ok ? 0 : 1;
    } else if (bounds_cmd->parsed()) {
      json_only();
      const BoundsResult b = circle_count_bounds(n);
      Json j = Json::object();
      j["lower"] = b.lower;
      j["upper"] = b.upper;
      emit_json(j);
    } else if (equiv_cmd->parsed()) {
      json_only();
      if (input == "-" && input2 == "-") throw UsageError("only one input can be standard input");
      const Realization a = realization_from_json(parse_document(slurp(input, in)));
      const Realization b = realization_from_json(parse_document(slurp(input2, in)));
      emit_json(Json{{"equivalent", equivalent(a, b)}});
    } else if (classify_cmd->parsed()) {
      json_only();
      const Realization r = realization_from_json(parse_document(slurp(input, in)));
      emit_json(Json{{"class", class_name(classify_octahedron(r))}});
    } else if (geom_cmd->parsed()) {
      json_only();
      const Side which = side == "interior" ? Side::Interior : Side::Exterior;
      Json j = Json::object();
      if (geom_op == "inner-mate") {
        j["radius"] = inner_mate_radius(r1, r2, phi);
        j["defect"] = inner_mate_construction_defect(r1, r2, phi);
      } else if (geom_op == "outer-mate") {
        j["radius"] = outer_mate_radius(r1, r2, phi);
        j["defect"] = outer_mate_construction_defect(r1, r2, phi);
      } else if (geom_op == "phi-max") {
        j["phi_max"] = outer_phi_max(r1, r2);
      } else if (geom_op == "lemma") {
        const LemmaSweep s = sweep_arc_lemma(which, common.seed, count);
        j = {{"valid", s.valid}, {"rejected", s.rejected}, {"violations", s.violations}};
      } else if (geom_op == "arc-search") {
        const InfeasibilityReport rep = gadget_arc_infeasibility(phi, grid);
        j = {{"feasible_found", rep.feasible_found}, {"tested", rep.tested}, {"evaluated", rep.evaluated}};
        j["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
      } else {
        const Json doc = parse_document(slurp(input, in));
        const std::vector<Circle> circles =
            document_type(doc) == "packing" ? packing_from_json(doc).circles : realization_from_json(doc).circles;
        if (circles.size() < 4) throw UsageError("descartes needs four circles");
        j["defect"] = descartes_check(circles[0], circles[1], circles[2], circles[3], common.tol.value_or(1e-6));
      }
      emit_json(j);
    } else if (render_cmd->parsed()) {
      if (common.format != "svg" && app.get_subcommand("render")->get_option("--format")->count() > 0)
        throw UsageError("render only writes SVG");
      render_opts.width = width;
      render_opts.height = height;
      render_opts.labels = !no_labels;
      render_opts.points = !no_points;
      render_opts.arcs = !no_arcs;
      render_opts.circles = !no_circles;
      render_opts.shading = shade;
      const Json doc = parse_document(slurp(input, in));
      if (document_type(doc) == "packing")
        emit(render_svg(packing_from_json(doc), render_opts));
      else
        emit(render_svg(realization_from_json(doc), render_opts));
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace circlesys
