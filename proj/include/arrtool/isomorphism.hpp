#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrtool/incidence.hpp"

namespace arrtool {

/// Label-preserving bijection between two incidence graphs. Point-vertices go
/// to point-vertices, line-vertices to line-vertices, and edge_map commutes
/// with conjugation.
struct Isomorphism {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

/// Exhaustive search with colour-refinement pruning; intended for desk-scale
/// graphs (up to roughly 15 lines).
std::optional<Isomorphism> are_isomorphic(const IncidenceGraph& a, const IncidenceGraph& b);

/// With `preserve_order`, the bijection must also carry the i-th edge at each
/// vertex to the i-th edge at its image.
std::optional<Isomorphism> are_isomorphic(const OrderedIncidenceGraph& a, const OrderedIncidenceGraph& b,
                                          bool preserve_order);

/// True when `iso` really is a label-preserving isomorphism a -> b.
bool verify_isomorphism(const IncidenceGraph& a, const IncidenceGraph& b, const Isomorphism& iso);

struct CanonicalForm {
  /// labeling[v] = canonical position of vertex v.
  std::vector<std::size_t> labeling;
  /// Label-independent text; equal iff the coloured graphs are isomorphic.
  std::string certificate;
};

/// Canonical form of the graph with an extra per-vertex label. Colour
/// refinement to a fixpoint, then individualisation with automorphism
/// pruning; the lexicographically least leaf encoding wins.
CanonicalForm canonical_form(const IncidenceGraph& graph, const std::vector<std::string>& vertex_labels);

}  // namespace arrtool
