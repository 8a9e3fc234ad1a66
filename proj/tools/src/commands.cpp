#include "commands.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "json.hpp"
#include "render.hpp"
#include "twoouter/forest2.hpp"
#include "twoouter/gen.hpp"
#include "twoouter/oracle.hpp"
#include "twoouter/outerplane.hpp"
#include "twoouter/plane.hpp"

namespace twoouter::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InfeasibleSpec: return kParse;
    case ErrorKind::InvalidEmbedding:
    case ErrorKind::UnknownVertex: return kEmbedding;
    case ErrorKind::NotTwoOuterplanar:
    case ErrorKind::LayerTooDeep: return kOuterplanarity;
    case ErrorKind::TooLarge: return kSizeCap;
    default: return kInternal;
  }
}

namespace {

std::string join(const std::vector<VertexId>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

EmbeddedGraph load(const std::string& path) { return parse_document(read_input(path)).graph; }

nlohmann::json trace_json(const ReductionTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : trace.steps) {
    nlohmann::json after = nlohmann::json::array();
    for (auto h : s.hashes_after) after.push_back(hex(h));
    steps.push_back({{"kind", std::string(to_string(s.witness.kind))},
                     {"named", s.witness.named},
                     {"surgery", s.surgery.describe()},
                     {"hash_before", hex(s.hash_before)},
                     {"hashes_after", after},
                     {"repaired", s.repaired}});
  }
  return {{"steps", steps}};
}

struct Options {
  std::string input = "-", output, spec, family, overlay, trace_file, bound = "2/3";
  bool validate = false, k_pairwise = false, dot = false, svg = false;
  bool forest = false, arboricity = false, outerplane = false, compare = false;
  int cap = 0;
};

int cmd_layers(const Options& o, std::ostream& out) {
  EmbeddedGraph g = load(o.input);
  LayerAssignment la = layers(g);
  out << "k=" << la.depth;
  for (int i = 1; i <= la.depth; ++i) out << "; L" << i << ": " << join(la.layer(i));
  out << '\n';
  return kOk;
}

int cmd_forests(const Options& o, std::ostream& out, std::ostream& err) {
  EmbeddedGraph g = load(o.input);
  std::optional<EmbeddedGraph> last;
  std::size_t graphs = 0;
  ForestOptions opts;
  opts.on_graph = [&](const EmbeddedGraph& h) {
    last = h;
    ++graphs;
  };
  ForestResult r;
  try {
    r = partition_two_forests(g, opts);
  } catch (const Error& e) {
    if (exit_code_for(e.kind()) == kInternal && last) {
      err << "failed after " << graphs << " intermediate graphs; last one:\n" << serialize_document(*last);
    }
    throw;
  }
  const auto& p = r.partition;
  int repaired = 0;
  for (const auto& s : r.trace.steps) repaired += s.repaired;
  out << "f0: " << join(p.f0) << '\n' << "f1: " << join(p.f1) << '\n';
  out << "sizes: " << p.f0.size() << '/' << p.f1.size() << '\n';
  out << "steps: " << r.trace.steps.size() << " (repaired: " << repaired << ")\n";
  bool valid = validate_partition(g, p);
  if (o.validate) {
    std::string replay = replay_trace(g, r.trace);
    out << "replay=" << (replay.empty() ? "ok" : replay) << '\n';
    valid = valid && replay.empty();
  }
  out << "valid=" << (valid ? "true" : "false") << '\n';
  if (!o.trace_file.empty()) write_output(o.trace_file, trace_json(r.trace).dump(2) + "\n");
  return valid ? kOk : kInternal;
}

int cmd_outerplane(const Options& o, std::ostream& out) {
  EmbeddedGraph g = load(o.input);
  const std::size_t n = g.num_vertices();
  if (o.k_pairwise) {
    VertexSet kept = extract_k_pairwise(g);
    out << "kept: " << join(kept) << '\n';
    out << "|kept|=" << kept.size() << " n=" << n << " depth=" << layers(induced_subgraph(g, kept)).depth << '\n';
    return kOk;
  }
  ExtractionResult r = extract_outerplane(g);
  const std::size_t bound = (2 * n + 2) / 3;
  out << "kept: " << join(r.kept) << '\n';
  out << "|kept|=" << r.kept.size() << " bound=" << bound << " n=" << n << '\n';
  out << "deleted:";
  for (auto [v, phase] : r.deleted) out << ' ' << v << "(phase " << phase << ')';
  out << '\n' << "matching:";
  for (auto [a, b] : r.matching.edges) out << ' ' << a << '-' << b;
  out << '\n';
  return r.kept.size() >= bound ? kOk : kInternal;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  EmbeddedGraph g = load(o.input);
  bool ok = true;
  if (!o.forest && !o.arboricity && !o.outerplane) fail(ErrorKind::ParseError, "oracle: pick --forest, --arboricity or --outerplane");
  if (o.forest) {
    OracleResult r = max_induced_forest_exact(g, o.cap ? o.cap : default_forest_cap());
    out << "forest: optimum=" << r.optimum << " witness: " << join(r.witness) << " explored=" << r.explored << '\n';
    if (o.compare) {
      auto p = partition_two_forests(g).partition;
      std::size_t alg = std::max(p.f0.size(), p.f1.size());
      bool good = static_cast<int>(alg) <= r.optimum;
      out << "compare: largest forest class " << alg << " <= " << r.optimum << (good ? " ok" : " VIOLATED") << '\n';
      ok = ok && good;
    }
  }
  if (o.arboricity) {
    auto parts = arboricity_partition_exact(g, o.cap ? o.cap : default_arboricity_cap());
    out << "arboricity: " << parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " | " : " classes: ") << join(parts[i]);
    out << '\n';
    if (o.compare) {
      bool good = parts.size() <= 2 || outerplanarity_index(g) > 2;
      out << "compare: arboricity " << parts.size() << " <= 2" << (good ? " ok" : " VIOLATED") << '\n';
      ok = ok && good;
    }
  }
  if (o.outerplane) {
    OracleResult r = max_induced_outerplane_exact(g, o.cap ? o.cap : default_outerplane_cap());
    out << "outerplane: optimum=" << r.optimum << " witness: " << join(r.witness) << " explored=" << r.explored << '\n';
    if (o.compare) {
      std::size_t alg = extract_outerplane(g).kept.size();
      bool good = static_cast<int>(alg) <= r.optimum;
      out << "compare: extraction " << alg << " <= " << r.optimum << (good ? " ok" : " VIOLATED") << '\n';
      ok = ok && good;
    }
  }
  return ok ? kOk : kInternal;
}

int cmd_gen(const Options& o) {
  write_output(o.output, serialize_document(gen::generate(gen::parse_spec(o.spec))));
  return kOk;
}

int cmd_render(const Options& o) {
  EmbeddedGraph g = load(o.input);
  Overlay ov;
  if (o.overlay == "forests") {
    auto p = partition_two_forests(g).partition;
    for (VertexId v : p.f0) ov[v] = "f0";
    for (VertexId v : p.f1) ov[v] = "f1";
  } else if (o.overlay == "outerplane") {
    auto r = extract_outerplane(g);
    for (VertexId v : g.vertices()) ov[v] = "deleted";
    for (VertexId v : r.kept) ov[v] = "kept";
  } else if (!o.overlay.empty()) {
    fail(ErrorKind::ParseError, "overlay must be forests or outerplane");
  }
  write_output(o.output, o.svg ? to_svg(g, ov) : to_dot(g, ov));
  return kOk;
}

Ratio parse_ratio(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) fail(ErrorKind::ParseError, "bound must look like a/b");
    std::size_t used = 0;
    Ratio r{std::stoll(s.substr(0, slash), &used), 1};
    if (used != slash) fail(ErrorKind::ParseError, "bad bound " + s);
    std::string rest = s.substr(slash + 1);
    r.den = std::stoll(rest, &used);
    if (used != rest.size() || r.num < 0 || r.den <= 0) fail(ErrorKind::ParseError, "bad bound " + s);
    return r;
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad bound " + s);
  }
}

int cmd_scan(const Options& o, std::ostream& out) {
  Ratio bound = parse_ratio(o.bound);
  ScanReport rep = scan_conjecture(parse_family(o.family), bound, o.cap ? o.cap : default_outerplane_cap());
  out << "instances=" << rep.instances << " skipped=" << rep.skipped_too_large << '\n';
  if (rep.argmin) {
    out << "min_ratio=" << std::fixed << std::setprecision(4) << rep.min_ratio << " (" << rep.min_optimum << '/' << rep.min_n
        << ") at " << rep.argmin_spec << '\n';
  }
  out << "bound=" << bound.num << '/' << bound.den << " violation=" << (rep.violation ? "true" : "false") << '\n';
  if (rep.violation) out << "violating instance: " << rep.violating_spec << '\n';
  if (!o.output.empty()) {
    const auto& g = rep.violation ? rep.violating : rep.argmin;
    if (g) write_output(o.output, serialize_document(*g));
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forest partitions and outerplane extraction for 2-outerplanar graphs", "twoouter"};
  app.require_subcommand(1);
  Options o;

  auto* layers_cmd = app.add_subcommand("layers", "print the outerplanar layers");
  layers_cmd->add_option("input", o.input, "GraphDocument path or -")->required();

  auto* forests = app.add_subcommand("forests", "partition into two induced forests");
  forests->add_option("input", o.input)->required();
  forests->add_option("--trace", o.trace_file, "write the reduction trace (JSON)");
  forests->add_flag("--validate", o.validate, "replay the trace and recheck every hash");

  auto* outer = app.add_subcommand("outerplane", "extract an induced outerplane subgraph");
  outer->add_option("input", o.input)->required();
  outer->add_flag("--k-pairwise", o.k_pairwise, "work on layer pairs (any depth)");

  auto* oracle = app.add_subcommand("oracle", "exact solvers for small graphs");
  oracle->add_option("input", o.input)->required();
  oracle->add_flag("--forest", o.forest);
  oracle->add_flag("--arboricity", o.arboricity);
  oracle->add_flag("--outerplane", o.outerplane);
  oracle->add_flag("--compare", o.compare, "also run the algorithms and compare");
  oracle->add_option("--cap", o.cap, "size cap override")->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated GraphDocument");
  gen_cmd->add_option("spec", o.spec, "octahedron|k4|hexagon|nested_octahedra|linked_octahedra:M|random:n=N,k=K,seed=S|tree:n=N,seed=S")
      ->required();
  gen_cmd->add_option("-o,--output", o.output);

  auto* render = app.add_subcommand("render", "DOT or SVG rendering");
  render->add_option("input", o.input)->required();
  auto* dot = render->add_flag("--dot", o.dot);
  auto* svg = render->add_flag("--svg", o.svg);
  dot->excludes(svg);
  render->add_option("--overlay", o.overlay, "forests|outerplane");
  render->add_option("-o,--output", o.output);

  auto* scan = app.add_subcommand("scan", "conjecture scan with the outerplane oracle");
  scan->add_option("family", o.family, "octahedron|trees:count=C,max_n=N,seed=S|random:count=C,max_n=N,k=K,seed=S")
      ->required();
  scan->add_option("--bound", o.bound, "ratio a/b");
  scan->add_option("--cap", o.cap)->check(CLI::PositiveNumber);
  scan->add_option("-o,--output", o.output, "write the arg-min (or violating) instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*layers_cmd) return cmd_layers(o, out);
    if (*forests) return cmd_forests(o, out, err);
    if (*outer) return cmd_outerplane(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*gen_cmd) return cmd_gen(o);
    if (*render) {
      if (!o.dot && !o.svg) fail(ErrorKind::ParseError, "render: pick --dot or --svg");
      return cmd_render(o);
    }
    if (*scan) return cmd_scan(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kParse;
}

}  // namespace twoouter::cli
