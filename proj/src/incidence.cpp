#include "arrtool/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrtool {

IncidenceGraph::IncidenceGraph(std::size_t point_count, std::size_t line_count)
    : point_count_(point_count), line_count_(line_count), out_(point_count + line_count) {}

std::size_t IncidenceGraph::add_incidence(std::size_t point, std::size_t line) {
  if (point >= point_count_ || line >= line_count_) throw std::out_of_range("incidence endpoint out of range");
  std::size_t pair = pair_count();
  VertexId vp = point_vertex(point);
  VertexId vl = line_vertex(line);
  edges_.push_back({vp, vl, line_to_point(pair)});
  edges_.push_back({vl, vp, point_to_line(pair)});
  out_[vp].push_back(point_to_line(pair));
  out_[vl].push_back(line_to_point(pair));
  return pair;
}

std::optional<std::size_t> IncidenceGraph::find_pair(std::size_t point, std::size_t line) const {
  VertexId vl = line_vertex(line);
  for (EdgeId e : out_[point_vertex(point)])
    if (edges_[e].to == vl) return pair_of(e);
  return std::nullopt;
}

std::string IncidenceGraph::vertex_name(VertexId v) const {
  return (kind(v) == VertexKind::point ? "P" : "L") + std::to_string(index_of(v));
}

bool operator==(const IncidenceGraph& a, const IncidenceGraph& b) {
  if (a.point_count_ != b.point_count_ || a.line_count_ != b.line_count_) return false;
  auto pairs = [](const IncidenceGraph& g) {
    std::set<std::pair<VertexId, VertexId>> s;
    for (std::size_t i = 0; i < g.pair_count(); ++i) s.insert({g.edges_[2 * i].from, g.edges_[2 * i].to});
    return s;
  };
  return a.pair_count() == b.pair_count() && pairs(a) == pairs(b);
}

std::size_t OrderedIncidenceGraph::rank_of(EdgeId e) const {
  const auto& at = order[graph.initial(e)];
  auto it = std::find(at.begin(), at.end(), e);
  if (it == at.end()) throw std::logic_error("edge missing from vertex order");
  return static_cast<std::size_t>(it - at.begin());
}

IncidenceGraph build_incidence_graph(const Arrangement& arrangement) {
  IncidenceGraph g(arrangement.point_count(), arrangement.line_count());
  for (const Point& p : arrangement.points())
    for (std::size_t l : p.incident_lines) g.add_incidence(p.id, l);
  return g;
}

OrderedIncidenceGraph build_ordered_graph(const Arrangement& arrangement) {
  OrderedIncidenceGraph og{build_incidence_graph(arrangement), {}};
  const IncidenceGraph& g = og.graph;
  og.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto edges = g.outgoing(v);
    if (g.kind(v) == VertexKind::point) {
      auto slope = [&](EdgeId e) -> const Rational& { return arrangement.lines()[g.index_of(g.terminal(e))].slope; };
      std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) { return slope(a) > slope(b); });
      for (std::size_t i = 1; i < edges.size(); ++i)
        if (slope(edges[i - 1]) == slope(edges[i])) throw std::logic_error("two lines through one point share a slope");
    } else {
      auto abscissa = [&](EdgeId e) -> const Rational& { return arrangement.points()[g.index_of(g.terminal(e))].x; };
      std::sort(edges.begin(), edges.end(), [&](EdgeId a, EdgeId b) { return abscissa(a) > abscissa(b); });
      for (std::size_t i = 1; i < edges.size(); ++i)
        if (abscissa(edges[i - 1]) == abscissa(edges[i])) throw std::logic_error("two points on one line share x");
    }
    og.order[v] = std::move(edges);
  }
  return og;
}

OrderedIncidenceGraph order_as_inserted(const IncidenceGraph& graph) {
  OrderedIncidenceGraph og{graph, {}};
  og.order.resize(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) og.order[v] = graph.outgoing(v);
  return og;
}

namespace {

std::vector<std::size_t> component_labels(const IncidenceGraph& g, std::size_t& count) {
  std::vector<std::size_t> label(g.vertex_count(), SIZE_MAX);
  count = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != SIZE_MAX) continue;
    std::queue<VertexId> q;
    q.push(s);
    label[s] = count;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.outgoing(v)) {
        VertexId w = g.terminal(e);
        if (label[w] == SIZE_MAX) {
          label[w] = count;
          q.push(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::size_t component_count(const IncidenceGraph& graph) {
  std::size_t count = 0;
  component_labels(graph, count);
  return count;
}

bool is_connected(const IncidenceGraph& graph) { return component_count(graph) <= 1; }

std::size_t betti1(const IncidenceGraph& graph) {
  return graph.pair_count() + component_count(graph) - graph.vertex_count();
}

Classification classify_graph(const IncidenceGraph& graph) {
  if (graph.line_count() == 0) return Classification::empty;
  if (graph.point_count() == 0) return Classification::all_parallel;
  return is_connected(graph) ? Classification::connected_incidence : Classification::general;
}

std::vector<OrderedIncidenceGraph> split_components(const OrderedIncidenceGraph& og) {
  const IncidenceGraph& g = og.graph;
  std::size_t count = 0;
  auto label = component_labels(g, count);
  std::vector<std::size_t> local(g.vertex_count());
  std::vector<std::size_t> points(count, 0), lines(count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    local[v] = g.kind(v) == VertexKind::point ? points[label[v]]++ : lines[label[v]]++;
  std::vector<OrderedIncidenceGraph> out;
  for (std::size_t c = 0; c < count; ++c) out.push_back({IncidenceGraph(points[c], lines[c]), {}});
  std::vector<EdgeId> edge_image(g.edges().size());
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    const Edge& e = g.edge(point_to_line(i));
    std::size_t pair = out[label[e.from]].graph.add_incidence(local[e.from], local[e.to]);
    edge_image[point_to_line(i)] = point_to_line(pair);
    edge_image[line_to_point(i)] = line_to_point(pair);
  }
  for (auto& part : out) part.order.resize(part.graph.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    OrderedIncidenceGraph& part = out[label[v]];
    VertexId w = g.kind(v) == VertexKind::point ? part.graph.point_vertex(local[v]) : part.graph.line_vertex(local[v]);
    for (EdgeId e : og.order[v]) part.order[w].push_back(edge_image[e]);
  }
  return out;
}

namespace {

// Pairs of the relabeled graph, listed in the order they are re-inserted.
std::vector<std::pair<std::size_t, std::size_t>> relabeled_pairs(const IncidenceGraph& g,
                                                                 const std::vector<std::size_t>& pp,
                                                                 const std::vector<std::size_t>& lp) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    const Edge& e = g.edge(point_to_line(i));
    out.push_back({pp[g.index_of(e.from)], lp[g.index_of(e.to)]});
  }
  return out;
}

void check_perm(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t x : perm) {
    if (x >= n || seen[x]) throw std::invalid_argument("relabel: not a permutation");
    seen[x] = true;
  }
}

}  // namespace

IncidenceGraph relabel(const IncidenceGraph& graph, const std::vector<std::size_t>& point_perm,
                       const std::vector<std::size_t>& line_perm) {
  check_perm(point_perm, graph.point_count());
  check_perm(line_perm, graph.line_count());
  auto pairs = relabeled_pairs(graph, point_perm, line_perm);
  std::sort(pairs.begin(), pairs.end());
  IncidenceGraph out(graph.point_count(), graph.line_count());
  for (auto [p, l] : pairs) out.add_incidence(p, l);
  return out;
}

OrderedIncidenceGraph relabel(const OrderedIncidenceGraph& graph, const std::vector<std::size_t>& point_perm,
                              const std::vector<std::size_t>& line_perm) {
  const IncidenceGraph& g = graph.graph;
  OrderedIncidenceGraph out{relabel(g, point_perm, line_perm), {}};
  auto image = [&](VertexId v) {
    return g.kind(v) == VertexKind::point ? out.graph.point_vertex(point_perm[g.index_of(v)])
                                          : out.graph.line_vertex(line_perm[g.index_of(v)]);
  };
  auto image_edge = [&](EdgeId e) {
    VertexId from = image(g.initial(e));
    VertexId to = image(g.terminal(e));
    for (EdgeId f : out.graph.outgoing(from))
      if (out.graph.terminal(f) == to) return f;
    throw std::logic_error("relabel: missing edge image");
  };
  out.order.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& dst = out.order[image(v)];
    for (EdgeId e : graph.order[v]) dst.push_back(image_edge(e));
  }
  return out;
}

namespace {

void dot_nodes(std::ostringstream& os, const IncidenceGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool point = g.kind(v) == VertexKind::point;
    os << "  " << g.vertex_name(v) << " [shape=" << (point ? "box" : "ellipse")
       << ", kind=" << (point ? "point" : "line") << "];\n";
  }
}

}  // namespace

std::string export_dot(const IncidenceGraph& g) {
  std::ostringstream os;
  os << "graph incidence {\n";
  dot_nodes(os, g);
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    const Edge& e = g.edge(point_to_line(i));
    os << "  " << g.vertex_name(e.from) << " -- " << g.vertex_name(e.to) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const OrderedIncidenceGraph& og) {
  const IncidenceGraph& g = og.graph;
  std::ostringstream os;
  os << "graph ordered_incidence {\n";
  dot_nodes(os, g);
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    EdgeId pl = point_to_line(i);
    EdgeId lp = line_to_point(i);
    os << "  " << g.vertex_name(g.initial(pl)) << " -- " << g.vertex_name(g.terminal(pl))
       << " [taillabel=" << og.rank_of(pl) + 1 << ", headlabel=" << og.rank_of(lp) + 1 << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arrtool
