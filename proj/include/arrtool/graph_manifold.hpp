#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrtool/incidence.hpp"
#include "arrtool/smith.hpp"

namespace arrtool {

/// 2x2 integer matrix acting on framing coordinates (column vectors).
struct Matrix2 {
  std::array<std::array<long long, 2>, 2> m{};

  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  static Matrix2 identity() { return {{{{1, 0}, {0, 1}}}}; }
};

enum class GluingDirection { from_line_side, from_point_side };

/// from_line_side: [[0,1],[1,1]], so mu_{p,L} = lambda_{L,p} and
/// lambda_{p,L} = mu_{L,p} + lambda_{L,p}, where T_{p,L} is the torus of the
/// line piece facing p and T_{L,p} the torus of the point piece facing L.
/// from_point_side is its inverse.
Matrix2 gluing_matrix(GluingDirection direction);

enum class PieceKind { point, line };

struct FramedTorus {
  std::size_t owner = 0;
  /// Opposing incidence first: the torus of P0 facing L1 is "T(L1,P0)".
  /// "infinity" for a free torus.
  std::string label;
  /// Outgoing edge of the owner's vertex; empty for free tori.
  std::optional<EdgeId> edge;
  std::string meridian;
  std::string longitude;
};

/// S^3 minus a d-component Hopf link.
struct VertexPiece {
  VertexId vertex = 0;
  PieceKind kind = PieceKind::point;
  std::size_t hopf_components = 1;
  std::vector<FramedTorus> boundary_tori;
  std::vector<FramedTorus> free_tori;
};

struct Gluing {
  std::size_t pair = 0;
  std::size_t point_piece = 0;
  std::size_t point_torus = 0;  // index into boundary_tori
  std::size_t line_piece = 0;
  std::size_t line_torus = 0;
  /// Framing of the line piece's torus in the basis of the point piece's.
  Matrix2 matrix;
};

struct GraphManifoldDescriptor {
  std::vector<VertexPiece> pieces;
  std::vector<Gluing> gluings;
  /// Recorded, not computed.
  bool haken = true;
  bool seifert_pieces = true;
};

/// Point-vertex of degree r: S^3 minus H_r, all tori glued. Line-vertex of
/// degree s: S^3 minus H_{s+1}, one free torus. Isolated lines are solid tori.
/// Boundary tori of a piece follow the vertex's outgoing edge order.
GraphManifoldDescriptor build_descriptor(const IncidenceGraph& graph);
/// Same, with boundary tori in the ordered graph's edge order.
GraphManifoldDescriptor build_descriptor(const OrderedIncidenceGraph& graph);

/// H_1 by Mayer-Vietoris over the torus decomposition: meridian classes of
/// every piece plus one class per independent cycle of the piece graph,
/// modulo the two framing identifications of every gluing. Throws
/// InconsistentDescriptor if a torus is glued twice.
AbelianGroupDescription h1_mayer_vietoris(const GraphManifoldDescriptor& d);

/// Human-readable list of invariant violations; empty when valid.
std::vector<std::string> validate_descriptor(const GraphManifoldDescriptor& d);

/// Label-independent text; equal for descriptors of isomorphic graphs.
std::string descriptor_canonical_form(const GraphManifoldDescriptor& d);

std::string_view to_string(PieceKind k);

}  // namespace arrtool
