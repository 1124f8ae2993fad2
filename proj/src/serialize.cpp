#include "arrtool/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "arrtool/errors.hpp"

namespace arrtool {

namespace {

std::string scalar(const YAML::Node& n, const char* what, std::size_t index) {
  if (!n || !n.IsScalar())
    throw ParseError("line " + std::to_string(index) + ": '" + what + "' must be a number or \"p/q\" string");
  return n.Scalar();
}

}  // namespace

Arrangement parse_arrangement(std::string_view document) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(document));
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!root.IsMap() || !root["lines"]) throw ParseError("document needs a top-level 'lines' list");
  const YAML::Node lines = root["lines"];
  if (!lines.IsSequence()) throw ParseError("'lines' must be a list");
  if (lines.size() == 0) throw ParseError("'lines' is empty");
  std::vector<LineSpec> specs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const YAML::Node entry = lines[i];
    if (!entry.IsMap()) throw ParseError("line " + std::to_string(i) + " is not a map with keys a and b");
    LineSpec s;
    if (entry["vertical"]) {
      try {
        s.vertical = entry["vertical"].as<bool>();
      } catch (const YAML::Exception&) {
        throw ParseError("line " + std::to_string(i) + ": 'vertical' must be true or false");
      }
    }
    if (s.vertical) {
      specs.push_back(s);
      continue;
    }
    s.slope = scalar(entry["a"], "a", i);
    s.intercept = scalar(entry["b"], "b", i);
    specs.push_back(std::move(s));
  }
  return make_arrangement(specs);
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

Json to_json(const Arrangement& a) {
  Json j;
  j["lines"] = Json::array();
  for (const Line& l : a.lines()) j["lines"].push_back({{"a", l.slope.str()}, {"b", l.intercept.str()}});
  j["points"] = Json::array();
  for (const Point& p : a.points())
    j["points"].push_back({{"id", p.id}, {"x", p.x.str()}, {"y", p.y.str()}, {"lines", p.incident_lines}});
  j["classification"] = std::string(to_string(a.classification()));
  return j;
}

Json to_json(const IncidenceGraph& g) {
  Json j;
  j["points"] = g.point_count();
  j["lines"] = g.line_count();
  j["vertices"] = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    j["vertices"].push_back(
        {{"id", v}, {"name", g.vertex_name(v)}, {"kind", g.kind(v) == VertexKind::point ? "point" : "line"}});
  j["pairs"] = Json::array();
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    const Edge& e = g.edge(point_to_line(i));
    j["pairs"].push_back({{"pair", i},
                          {"point", g.index_of(e.from)},
                          {"line", g.index_of(e.to)},
                          {"edges", {point_to_line(i), line_to_point(i)}}});
  }
  j["betti1"] = betti1(g);
  j["components"] = component_count(g);
  return j;
}

Json to_json(const OrderedIncidenceGraph& og) {
  Json j = to_json(og.graph);
  Json order = Json::object();
  for (VertexId v = 0; v < og.graph.vertex_count(); ++v) order[og.graph.vertex_name(v)] = og.order[v];
  j["order"] = order;
  return j;
}

OrderedIncidenceGraph ordered_graph_from_json(const Json& j) {
  try {
    const std::size_t points = j.at("points").get<std::size_t>();
    const std::size_t lines = j.at("lines").get<std::size_t>();
    IncidenceGraph g(points, lines);
    const Json& pairs = j.at("pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Json& p = pairs[i];
      if (p.at("pair").get<std::size_t>() != i) throw ParseError("pairs must be listed in index order");
      const std::size_t pt = p.at("point").get<std::size_t>();
      const std::size_t ln = p.at("line").get<std::size_t>();
      if (pt >= points || ln >= lines) throw ParseError("pair " + std::to_string(i) + " names a missing vertex");
      g.add_incidence(pt, ln);
    }
    OrderedIncidenceGraph og{g, std::vector<std::vector<EdgeId>>(g.vertex_count())};
    const Json& order = j.at("order");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<EdgeId> list = order.at(g.vertex_name(v)).get<std::vector<EdgeId>>();
      std::vector<EdgeId> expected = g.outgoing(v);
      std::vector<EdgeId> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      std::sort(expected.begin(), expected.end());
      if (sorted != expected)
        throw ParseError("order at " + g.vertex_name(v) + " is not a permutation of its outgoing edges");
      og.order[v] = std::move(list);
    }
    return og;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

Json to_json(const GraphManifoldDescriptor& d) {
  Json j;
  auto torus = [](const FramedTorus& t) {
    Json o{{"label", t.label}, {"meridian", t.meridian}, {"longitude", t.longitude}};
    o["edge"] = t.edge ? Json(*t.edge) : Json(nullptr);
    return o;
  };
  j["pieces"] = Json::array();
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const VertexPiece& p = d.pieces[i];
    Json o{{"id", i},
           {"vertex", p.vertex},
           {"kind", std::string(to_string(p.kind))},
           {"d", p.hopf_components},
           {"type", "S3-H" + std::to_string(p.hopf_components)}};
    o["boundary_tori"] = Json::array();
    for (const auto& t : p.boundary_tori) o["boundary_tori"].push_back(torus(t));
    o["free_tori"] = Json::array();
    for (const auto& t : p.free_tori) o["free_tori"].push_back(torus(t));
    j["pieces"].push_back(o);
  }
  j["gluings"] = Json::array();
  for (const Gluing& g : d.gluings) {
    j["gluings"].push_back({{"pair", g.pair},
                            {"point_piece", g.point_piece},
                            {"point_torus", g.point_torus},
                            {"line_piece", g.line_piece},
                            {"line_torus", g.line_torus},
                            {"matrix", {g.matrix.m[0], g.matrix.m[1]}},
                            {"det", g.matrix.det()}});
  }
  j["metadata"] = {{"haken", d.haken}, {"seifert_pieces", d.seifert_pieces}};
  return j;
}

Json to_json(const AbelianGroupDescription& a) {
  Json t = Json::array();
  for (const BigInt& d : a.torsion) t.push_back(d.str());
  return {{"free_rank", a.free_rank}, {"torsion", t}, {"text", a.str()}};
}

Json to_json(const GroupPresentation& p) {
  Json j;
  j["generators"] = Json::array();
  for (const Symbol& s : p.generators) j["generators"].push_back(s.name);
  j["relators"] = Json::array();
  for (const Word& r : p.relators) j["relators"].push_back(r.str());
  j["provenance"] = {{"space", std::string(to_string(p.provenance.space))},
                     {"convention", std::string(to_string(p.provenance.convention))},
                     {"variant", std::string(to_string(p.provenance.variant))},
                     {"spanning_tree", p.provenance.spanning_tree},
                     {"simplified", p.provenance.simplified}};
  return j;
}

}  // namespace arrtool
