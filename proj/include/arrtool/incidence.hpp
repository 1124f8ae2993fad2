#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrtool/arrangement.hpp"

namespace arrtool {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class VertexKind { point, line };

/// Directed edge of the incidence graph. Edges come in conjugate pairs:
/// pair i is stored as edge 2i = e(p, L) and edge 2i + 1 = e(L, p).
struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  EdgeId conjugate = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline EdgeId conjugate_of(EdgeId e) { return e ^ 1U; }
inline std::size_t pair_of(EdgeId e) { return e / 2; }
inline EdgeId point_to_line(std::size_t pair) { return 2 * pair; }
inline EdgeId line_to_point(std::size_t pair) { return 2 * pair + 1; }

/// Bipartite point/line incidence graph. Vertices 0..P-1 are point-vertices
/// (in point-id order), vertices P..P+K-1 are line-vertices (in line-id order).
class IncidenceGraph {
 public:
  IncidenceGraph() = default;
  IncidenceGraph(std::size_t point_count, std::size_t line_count);

  /// Adds the conjugate pair e(p, L), e(L, p); returns the pair index.
  std::size_t add_incidence(std::size_t point, std::size_t line);

  std::size_t point_count() const { return point_count_; }
  std::size_t line_count() const { return line_count_; }
  std::size_t vertex_count() const { return point_count_ + line_count_; }
  std::size_t pair_count() const { return edges_.size() / 2; }

  VertexId point_vertex(std::size_t p) const { return p; }
  VertexId line_vertex(std::size_t l) const { return point_count_ + l; }
  VertexKind kind(VertexId v) const { return v < point_count_ ? VertexKind::point : VertexKind::line; }
  /// Point id or line id behind a vertex.
  std::size_t index_of(VertexId v) const { return v < point_count_ ? v : v - point_count_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  VertexId initial(EdgeId e) const { return edges_[e].from; }
  VertexId terminal(EdgeId e) const { return edges_[e].to; }
  /// Outgoing edges in insertion order.
  const std::vector<EdgeId>& outgoing(VertexId v) const { return out_[v]; }
  std::size_t degree(VertexId v) const { return out_[v].size(); }

  /// Returns the pair joining point p and line l, if any.
  std::optional<std::size_t> find_pair(std::size_t point, std::size_t line) const;

  std::string vertex_name(VertexId v) const;

  /// Same vertex sets, same conjugate pairs (edge numbering may differ).
  friend bool operator==(const IncidenceGraph& a, const IncidenceGraph& b);

 private:
  std::size_t point_count_ = 0;
  std::size_t line_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
};

/// Incidence graph plus a total order of the outgoing edges at every vertex.
struct OrderedIncidenceGraph {
  IncidenceGraph graph;
  std::vector<std::vector<EdgeId>> order;

  /// 0-based position of outgoing edge `e` in the order at its initial vertex.
  std::size_t rank_of(EdgeId e) const;
};

IncidenceGraph build_incidence_graph(const Arrangement& arrangement);

/// Orders edges at point-vertices by strictly decreasing slope of the line and
/// at line-vertices by strictly decreasing x-coordinate of the point.
OrderedIncidenceGraph build_ordered_graph(const Arrangement& arrangement);

/// Uses the stored outgoing order as the edge order (for graphs that did not
/// come from coordinates).
OrderedIncidenceGraph order_as_inserted(const IncidenceGraph& graph);

std::size_t component_count(const IncidenceGraph& graph);
bool is_connected(const IncidenceGraph& graph);

/// |undirected edges| - |vertices| + #components.
std::size_t betti1(const IncidenceGraph& graph);

Classification classify_graph(const IncidenceGraph& graph);

/// Connected components as standalone ordered graphs, ordered by their least
/// vertex; vertices keep their relative order within a component.
std::vector<OrderedIncidenceGraph> split_components(const OrderedIncidenceGraph& graph);

/// Graph with point p renamed to point_perm[p] and line l to line_perm[l];
/// pairs are re-inserted sorted by their new (point, line) labels.
IncidenceGraph relabel(const IncidenceGraph& graph, const std::vector<std::size_t>& point_perm,
                       const std::vector<std::size_t>& line_perm);

/// Relabels an ordered graph, carrying the edge orders along.
OrderedIncidenceGraph relabel(const OrderedIncidenceGraph& graph, const std::vector<std::size_t>& point_perm,
                              const std::vector<std::size_t>& line_perm);

/// Graphviz text: one node per vertex (points as boxes, lines as ellipses),
/// one undirected edge per conjugate pair.
std::string export_dot(const IncidenceGraph& graph);
/// Ordered variant; each edge is annotated with its rank at both ends.
std::string export_dot(const OrderedIncidenceGraph& graph);

}  // namespace arrtool
