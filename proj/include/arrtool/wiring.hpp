#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrtool/arrangement.hpp"

namespace arrtool {

/// Vertex of the skeleton 1-complex: a point of some line over an abscissa.
struct WiringVertex {
  Rational x;
  Rational y;
  /// Intersection point id when the vertex is a multiple point.
  std::optional<std::size_t> point;
  /// Lines passing through the vertex, sorted.
  std::vector<std::size_t> lines;
};

/// Piece of one line between two vertices of the complex.
struct WiringSegment {
  std::size_t line = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  /// Formal braid data for arcs through the complex x-plane; real
  /// arrangements over real segments leave it empty.
  std::vector<int> braid;
};

/// Skeleton of an arrangement over a path through the projected intersection
/// abscissae (a braided wiring diagram).
struct WiringDiagram {
  /// Distinct abscissae of the intersection points, increasing.
  std::vector<Rational> abscissae;
  /// Visiting order as indices into `abscissae`.
  std::vector<std::size_t> base_order;
  std::vector<WiringVertex> vertices;
  std::vector<WiringSegment> segments;

  std::size_t component_count() const;
  std::size_t betti1() const;
};

/// Builds the skeleton over the given visiting order (default: increasing,
/// the standard skeleton). With `prune`, dangling ends are removed and
/// degree-2 vertices that are not intersection points are smoothed away.
/// Throws AmbiguousOrder if `base_order` is not a permutation of the
/// distinct abscissae.
WiringDiagram build_wiring_diagram(const Arrangement& arrangement,
                                   const std::optional<std::vector<std::size_t>>& base_order = std::nullopt,
                                   bool prune = true);

}  // namespace arrtool
