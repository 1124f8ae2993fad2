#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "arrtool/incidence.hpp"
#include "arrtool/presentation.hpp"
#include "arrtool/word.hpp"

namespace arrtool {

/// Element of a vertex group in normal form: lambda^central * free_part.
struct VertexElement {
  long long central = 0;
  Word free_part;

  bool is_trivial() const { return central == 0 && free_part.empty(); }
  friend bool operator==(const VertexElement&, const VertexElement&) = default;
};

/// gamma_0 e_1 gamma_1 ... e_k gamma_k with gamma_0 at `start` and gamma_i at
/// the terminal vertex of e_i.
struct GraphWord {
  VertexId start = 0;
  std::vector<EdgeId> edges;
  std::vector<VertexElement> elements{VertexElement{}};

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const GraphWord&, const GraphWord&) = default;
};

/// Coordinates (a, b) of an edge-subgroup element in the slot's framing
/// basis: point slots use (mu_j, lambda mu_j^-1), line slots (mu_k, lambda mu_k).
using SlotCoordinates = std::pair<long long, long long>;

/// Graph of groups over an ordered incidence graph: vertex groups
/// Z x F_n, edge groups Z^2, gluings by the universal matrix.
class GraphOfGroups {
 public:
  GraphOfGroups(OrderedIncidenceGraph graph, Convention convention);
  GraphOfGroups(OrderedIncidenceGraph graph, Convention convention, SpanningTree tree);

  const OrderedIncidenceGraph& ordered() const { return graph_; }
  const IncidenceGraph& graph() const { return graph_.graph; }
  Convention convention() const { return convention_; }
  const SpanningTree& tree() const { return tree_; }

  /// Collects the central lambda-power and, at geometric point-vertices,
  /// eliminates the last meridian through the product relation.
  /// Throws ForeignGenerator.
  VertexElement normal_form(VertexId v, const Word& w) const;
  VertexElement multiply(VertexId v, const VertexElement& x, const VertexElement& y) const;
  VertexElement inverse(VertexId v, const VertexElement& x) const;
  Word to_word(VertexId v, const VertexElement& x) const;

  /// Coordinates of `x` in the edge subgroup of the given 1-based slot, or
  /// nothing if `x` is outside it.
  std::optional<SlotCoordinates> edge_subgroup_membership(VertexId v, std::size_t slot,
                                                          const VertexElement& x) const;
  VertexElement slot_element(VertexId v, std::size_t slot, SlotCoordinates c) const;
  /// Image at i(e) of an edge-subgroup element at t(e) (the pinch e x e^-1).
  /// Throws std::invalid_argument if `x` is outside the edge subgroup.
  VertexElement transport(EdgeId e, const VertexElement& at_terminal) const;

  /// Throws MalformedWord unless consecutive edges chain up and the element
  /// count matches.
  void validate(const GraphWord& w) const;
  VertexId end_vertex(const GraphWord& w) const;

  /// Britton reduction: pinches e x e^-1 with x in the edge subgroup until
  /// none remain.
  GraphWord reduce(const GraphWord& w) const;
  /// Closed words only; true iff the reduced word has length 0 and a trivial
  /// element.
  bool is_identity(const GraphWord& w) const;
  GraphWord inverse(const GraphWord& w) const;
  GraphWord concat(const GraphWord& a, const GraphWord& b) const;

  /// Stable letter (or its inverse) of a non-tree edge; empty for tree edges.
  Word edge_letter(EdgeId e) const;
  /// The word in boundary-presentation generators.
  Word expand(const GraphWord& w) const;

 private:
  bool eliminates_last(VertexId v) const;
  /// mu_{d-1}^-1 ... mu_1^-1, so that mu_d = u lambda.
  Word product_complement(VertexId v) const;

  OrderedIncidenceGraph graph_;
  Convention convention_;
  SpanningTree tree_;
  std::vector<std::string> names_;
};

/// Random closed word at `base`: a random walk of `steps` edges, closed up
/// through the tree. Each element is, with equal chance, a random edge-subgroup
/// element of the edge just traversed (inviting pinches) or a random short
/// word in the vertex generators.
GraphWord random_closed_word(const GraphOfGroups& gg, VertexId base, std::size_t steps, std::mt19937_64& rng);

}  // namespace arrtool
