#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "arrtool/graph_of_groups.hpp"

namespace arrtool {

/// Conjugation word in the meridians of point p for the line L through it.
/// With L the j-th of r lines at p (decreasing slope):
///   thm4:    mu_1 ... mu_j mu_{j-1}^-1 ... mu_1^-1
///   lemma32: mu_r^-1 ... mu_{j+1}^-1 mu_j mu_{j+1} ... mu_r
/// Throws IncidenceMismatch if p is not on L.
Word g_word(const OrderedIncidenceGraph& g, std::size_t line, std::size_t point, Variant variant);

/// f(e) as a graph path from i(e) to t(e). For e = e(L, p_j), j > 2, the
/// path detours through p_2, ..., p_{j-1} carrying their g-words; f(e(p, L))
/// is the inverse of f(e(L, p)).
GraphWord f_edge_path(const GraphOfGroups& gg, EdgeId e, Variant variant);

/// f(e) written in boundary-presentation generators; f(e(p, L)) is the
/// inverse word of f(e(L, p)).
Word f_edge_word(const GraphOfGroups& gg, EdgeId e, Variant variant);

/// Concatenated f-images along an edge path starting at `start`.
GraphWord f_path(const GraphOfGroups& gg, VertexId start, const std::vector<EdgeId>& path, Variant variant);

/// Closed edge path root -> p -> L -> root through the given pair.
std::vector<EdgeId> fundamental_cycle(const IncidenceGraph& g, const SpanningTree& tree, std::size_t pair);

/// Random closed edge path at `base` that is nontrivial in the fundamental
/// group of the graph: a non-backtracking walk closed through the tree, then
/// freely reduced; retried with longer walks until nonempty. The graph must have a cycle.
std::vector<EdgeId> random_nontrivial_cycle(const IncidenceGraph& g, const SpanningTree& tree, VertexId base,
                                            std::size_t steps, std::mt19937_64& rng);

/// Cancels adjacent e, conj(e) pairs.
std::vector<EdgeId> reduce_path(const std::vector<EdgeId>& path);

}  // namespace arrtool
