// arrtool: line arrangements to incidence graphs, graph-manifold descriptors
// and fundamental-group presentations.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 internal
// consistency violation.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "arrtool/checks.hpp"
#include "arrtool/corpus.hpp"
#include "arrtool/errors.hpp"
#include "arrtool/graph_manifold.hpp"
#include "arrtool/incidence.hpp"
#include "arrtool/presentation.hpp"
#include "arrtool/serialize.hpp"
#include "arrtool/tietze.hpp"

namespace {

using namespace arrtool;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kInconsistent = 3;

struct RunConfig {
  std::string input;
  std::string corpus;
  std::string space = "complement";
  std::string convention = "geometric";
  std::string variant = "thm4";
  std::string format = "text";
  bool ordered = false;
  bool simplify = false;
  std::uint64_t seed = CheckOptions{}.seed;
};

// What the input document described: an arrangement, or a serialized
// ordered incidence graph.
struct Input {
  std::optional<Arrangement> arrangement;
  OrderedIncidenceGraph graph;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_graph(const std::string& text) {
  try {
    Json j = Json::parse(text);
    return j.is_object() && j.contains("pairs") && j.contains("order");
  } catch (const Json::exception&) {
    return false;
  }
}

Input load_input(const RunConfig& c) {
  Input in;
  if (!c.corpus.empty()) {
    try {
      in.arrangement = corpus_entry(c.corpus).arrangement;
    } catch (const std::out_of_range&) {
      throw ParseError("no built-in arrangement named '" + c.corpus + "'");
    }
  } else {
    if (c.input.empty()) throw ParseError("no input: pass --input FILE (or -) or --corpus NAME");
    std::string text = read_all(c.input);
    if (looks_like_graph(text)) {
      in.graph = ordered_graph_from_json(Json::parse(text));
      return in;
    }
    in.arrangement = parse_arrangement(text);
  }
  in.graph = build_ordered_graph(*in.arrangement);
  return in;
}

Json provenance(const RunConfig& c, const std::string& command, const std::vector<std::size_t>& tree = {}) {
  return {{"command", command},       {"convention", c.convention}, {"variant", c.variant},
          {"spanning_tree", tree},    {"seed", c.seed}};
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string degree_list(const IncidenceGraph& g, VertexKind kind) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == kind) out += (out.empty() ? "" : ",") + std::to_string(g.degree(v));
  return out.empty() ? "-" : out;
}

int cmd_info(const RunConfig& c) {
  Input in = load_input(c);
  const IncidenceGraph& g = in.graph.graph;
  const auto cls = in.arrangement ? in.arrangement->classification() : classify_graph(g);
  if (c.format == "structured") {
    Json j;
    j["lines"] = g.line_count();
    j["points"] = g.point_count();
    j["b1"] = betti1(g);
    j["components"] = component_count(g);
    j["class"] = std::string(to_string(cls));
    std::vector<std::size_t> pd, ld;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      (g.kind(v) == VertexKind::point ? pd : ld).push_back(g.degree(v));
    j["degrees"] = {{"points", pd}, {"lines", ld}};
    if (in.arrangement) j["arrangement"] = to_json(*in.arrangement);
    j["provenance"] = provenance(c, "info");
    print(j);
    return kOk;
  }
  std::cout << "lines=" << g.line_count() << " points=" << g.point_count() << " b1=" << betti1(g)
            << " class=" << to_string(cls) << '\n';
  std::cout << "point degrees: " << degree_list(g, VertexKind::point) << '\n';
  std::cout << "line degrees: " << degree_list(g, VertexKind::line) << '\n';
  return kOk;
}

int cmd_graph(const RunConfig& c) {
  Input in = load_input(c);
  if (c.format == "structured") {
    Json j = c.ordered ? to_json(in.graph) : to_json(in.graph.graph);
    j["provenance"] = provenance(c, "graph");
    print(j);
  } else {
    std::cout << (c.ordered ? export_dot(in.graph) : export_dot(in.graph.graph));
  }
  return kOk;
}

std::string matrix_text(const Matrix2& m) {
  std::ostringstream os;
  os << "[[" << m.m[0][0] << ',' << m.m[0][1] << "],[" << m.m[1][0] << ',' << m.m[1][1] << "]]";
  return os.str();
}

int cmd_manifold(const RunConfig& c) {
  Input in = load_input(c);
  const IncidenceGraph& g = in.graph.graph;
  GraphManifoldDescriptor d = build_descriptor(in.graph);
  std::vector<std::string> violations = validate_descriptor(d);
  std::optional<AbelianGroupDescription> h1;
  if (violations.empty()) h1 = h1_mayer_vietoris(d);

  if (c.format == "structured") {
    Json j = to_json(d);
    j["violations"] = violations;
    j["h1"] = h1 ? to_json(*h1) : Json(nullptr);
    j["provenance"] = provenance(c, "manifold");
    print(j);
  } else {
    std::size_t free_tori = 0;
    std::map<std::size_t, std::size_t> types;
    for (const auto& p : d.pieces) {
      free_tori += p.free_tori.size();
      ++types[p.hopf_components];
    }
    std::cout << "pieces=" << d.pieces.size() << " gluings=" << d.gluings.size() << " free_tori=" << free_tori
              << '\n';
    std::cout << "types:";
    for (auto it = types.rbegin(); it != types.rend(); ++it)
      std::cout << " S3-H" << it->first << " x" << it->second;
    std::cout << '\n';
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
      const VertexPiece& p = d.pieces[i];
      std::cout << "piece " << i << ' ' << g.vertex_name(p.vertex) << ' ' << to_string(p.kind) << " S3-H"
                << p.hopf_components;
      for (const auto& t : p.boundary_tori) std::cout << ' ' << t.label;
      for (const auto& t : p.free_tori) std::cout << ' ' << t.label;
      std::cout << '\n';
    }
    for (const Gluing& gl : d.gluings)
      std::cout << "gluing " << gl.pair << ' ' << d.pieces[gl.point_piece].boundary_tori[gl.point_torus].label
                << " ~ " << d.pieces[gl.line_piece].boundary_tori[gl.line_torus].label << " matrix "
                << matrix_text(gl.matrix) << " det " << gl.matrix.det() << '\n';
    if (h1) std::cout << "H1: " << h1->str() << '\n';
    std::cout << "violations: " << (violations.empty() ? "none" : std::to_string(violations.size())) << '\n';
    for (const auto& v : violations) std::cout << "  " << v << '\n';
  }
  return violations.empty() ? kOk : kInconsistent;
}

GroupPresentation make_presentation(const OrderedIncidenceGraph& og, Space space, Convention conv, Variant var,
                                    bool simplify) {
  GroupPresentation p = space == Space::boundary ? boundary_presentation(og, conv) : complement_presentation(og, conv, var);
  return simplify ? tietze_simplify(p) : p;
}

int cmd_pi1(const RunConfig& c) {
  const Space space = parse_space(c.space);
  if (space == Space::vertex) throw ParseError("--space must be boundary or complement");
  const Convention conv = parse_convention(c.convention);
  const Variant var = parse_variant(c.variant);
  Input in = load_input(c);

  // Components become free-product factors of the complement group.
  std::vector<OrderedIncidenceGraph> factors{in.graph};
  if (space == Space::complement && in.graph.graph.pair_count() > 0 && !is_connected(in.graph.graph))
    factors = split_components(in.graph);

  std::vector<GroupPresentation> parts;
  for (const auto& f : factors) parts.push_back(make_presentation(f, space, conv, var, c.simplify));

  if (c.format == "structured") {
    Json j;
    j["space"] = c.space;
    j["factors"] = Json::array();
    for (const auto& p : parts) {
      Json pj = to_json(p);
      pj["abelianization"] = to_json(abelianize(p));
      j["factors"].push_back(pj);
    }
    j["provenance"] = provenance(c, "pi1", parts.size() == 1 ? parts[0].provenance.spanning_tree
                                                             : std::vector<std::size_t>{});
    print(j);
    return kOk;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const GroupPresentation& p = parts[i];
    std::cout << "# space=" << c.space << " convention=" << c.convention << " variant=" << c.variant
              << " seed=" << c.seed << " spanning_tree=";
    for (std::size_t k = 0; k < p.provenance.spanning_tree.size(); ++k)
      std::cout << (k ? "," : "") << p.provenance.spanning_tree[k];
    if (p.provenance.simplified) std::cout << " simplified";
    std::cout << '\n';
    if (parts.size() > 1) std::cout << "factor " << i + 1 << " of " << parts.size() << '\n';
    std::cout << p.str();
    std::cout << "abelianization: " << abelianize(p).str() << '\n';
  }
  return kOk;
}

int cmd_check(const RunConfig& c) {
  CheckOptions o;
  o.convention = parse_convention(c.convention);
  o.variant = parse_variant(c.variant);
  o.seed = c.seed;
  std::vector<CorpusEntry> corpus = builtin_corpus();
  if (!c.input.empty() || !c.corpus.empty()) {
    Input in = load_input(c);
    if (!in.arrangement) throw ParseError("check needs an arrangement document, not a graph");
    corpus.push_back({c.input.empty() ? c.corpus : "input", "", *in.arrangement});
  }
  const std::vector<CheckResult> results = run_acceptance(corpus, o);
  bool all = true;
  for (const CheckResult& r : results) {
    all = all && r.passed;
    if (c.format != "structured") std::cout << format_result(r, false) << '\n';
  }
  if (c.format == "structured") {
    Json j;
    j["results"] = Json::array();
    for (const CheckResult& r : results)
      j["results"].push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["passed"] = all;
    j["provenance"] = provenance(c, "check");
    print(j);
  }
  return all ? kOk : kCheckFailed;
}

int guarded(int (*fn)(const RunConfig&), const RunConfig& c) {
  try {
    return fn(c);
  } catch (const InconsistentDescriptor& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return kInconsistent;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line arrangements: incidence graphs, graph manifolds, fundamental groups"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "Arrangement or graph document (- for stdin)");
    sub->add_option("--corpus", c.corpus, "Use a built-in arrangement by name");
    sub->add_option("--convention", c.convention, "geometric | paper-literal")
        ->check(CLI::IsMember({"geometric", "paper-literal"}));
    sub->add_option("--variant", c.variant, "thm4 | lemma32")->check(CLI::IsMember({"thm4", "lemma32"}));
    sub->add_option("--format", c.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--seed", c.seed, "Seed for randomized checks");
  };
  auto* info = app.add_subcommand("info", "Counts, classification, degrees, b1");
  auto* graph = app.add_subcommand("graph", "Incidence graph as DOT or structured text");
  auto* manifold = app.add_subcommand("manifold", "Graph-manifold descriptor of the boundary manifold");
  auto* pi1 = app.add_subcommand("pi1", "Presentation of the boundary or complement group");
  auto* check = app.add_subcommand("check", "Run the acceptance checks");
  for (auto* sub : {info, graph, manifold, pi1, check}) common(sub);
  graph->add_flag("--ordered", c.ordered, "Include per-vertex edge orders");
  pi1->add_option("--space", c.space, "boundary | complement")->check(CLI::IsMember({"boundary", "complement"}));
  pi1->add_flag("--simplify", c.simplify, "Apply Tietze simplification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (info->parsed()) return guarded(cmd_info, c);
  if (graph->parsed()) return guarded(cmd_graph, c);
  if (manifold->parsed()) return guarded(cmd_manifold, c);
  if (pi1->parsed()) return guarded(cmd_pi1, c);
  return guarded(cmd_check, c);
}
