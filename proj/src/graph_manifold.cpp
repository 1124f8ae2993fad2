#include "arrtool/graph_manifold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "arrtool/errors.hpp"
#include "arrtool/isomorphism.hpp"

namespace arrtool {

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return c;
}

Matrix2 gluing_matrix(GluingDirection direction) {
  if (direction == GluingDirection::from_line_side) return {{{{0, 1}, {1, 1}}}};
  return {{{{-1, 1}, {1, 0}}}};
}

std::string_view to_string(PieceKind k) { return k == PieceKind::point ? "point" : "line"; }

namespace {

GraphManifoldDescriptor build_from_orders(const IncidenceGraph& g, const std::vector<std::vector<EdgeId>>& order) {
  GraphManifoldDescriptor d;
  // torus_of[e] = (piece, torus index) for the torus facing outgoing edge e.
  std::vector<std::pair<std::size_t, std::size_t>> torus_of(g.edges().size());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexPiece piece;
    piece.vertex = v;
    const std::string name = g.vertex_name(v);
    const bool point = g.kind(v) == VertexKind::point;
    piece.kind = point ? PieceKind::point : PieceKind::line;
    piece.hopf_components = point ? g.degree(v) : g.degree(v) + 1;
    for (EdgeId e : order[v]) {
      const std::size_t slot = piece.boundary_tori.size() + 1;
      const std::string mu = "mu_" + name + "_" + std::to_string(slot);
      FramedTorus t;
      t.owner = d.pieces.size();
      t.label = "T(" + g.vertex_name(g.terminal(e)) + "," + name + ")";
      t.edge = e;
      t.meridian = mu;
      t.longitude = "lam_" + name + (point ? " " + mu + "^-1" : " " + mu);
      torus_of[e] = {d.pieces.size(), piece.boundary_tori.size()};
      piece.boundary_tori.push_back(std::move(t));
    }
    if (!point) {
      FramedTorus t;
      t.owner = d.pieces.size();
      t.label = "infinity";
      t.meridian = "mu_" + name + "_inf";
      t.longitude = "lam_" + name + " mu_" + name + "_inf";
      piece.free_tori.push_back(std::move(t));
    }
    d.pieces.push_back(std::move(piece));
  }
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    Gluing gl;
    gl.pair = i;
    std::tie(gl.point_piece, gl.point_torus) = torus_of[point_to_line(i)];
    std::tie(gl.line_piece, gl.line_torus) = torus_of[line_to_point(i)];
    gl.matrix = gluing_matrix(GluingDirection::from_line_side);
    d.gluings.push_back(gl);
  }
  return d;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

GraphManifoldDescriptor build_descriptor(const IncidenceGraph& graph) {
  std::vector<std::vector<EdgeId>> order(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) order[v] = graph.outgoing(v);
  return build_from_orders(graph, order);
}

GraphManifoldDescriptor build_descriptor(const OrderedIncidenceGraph& graph) {
  return build_from_orders(graph.graph, graph.order);
}

AbelianGroupDescription h1_mayer_vietoris(const GraphManifoldDescriptor& d) {
  // Column layout: the meridian classes of each piece, then cycle classes.
  std::vector<std::size_t> offset(d.pieces.size() + 1, 0);
  for (std::size_t i = 0; i < d.pieces.size(); ++i) offset[i + 1] = offset[i] + d.pieces[i].hopf_components;

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> use;
  for (const Gluing& gl : d.gluings) {
    for (auto key : {std::pair{gl.point_piece, gl.point_torus}, std::pair{gl.line_piece, gl.line_torus}}) {
      if (key.first >= d.pieces.size() || key.second >= d.pieces[key.first].boundary_tori.size() ||
          key.second >= d.pieces[key.first].hopf_components)
        throw InconsistentDescriptor("gluing " + std::to_string(gl.pair) + " names a torus that does not exist");
      if (++use[key] > 1)
        throw InconsistentDescriptor("torus " + std::to_string(key.second) + " of piece " +
                                     std::to_string(key.first) + " is glued twice");
    }
  }

  std::vector<std::size_t> parent(d.pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = d.pieces.size();
  for (const Gluing& gl : d.gluings) {
    std::size_t a = find_root(parent, gl.point_piece);
    std::size_t b = find_root(parent, gl.line_piece);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  const std::size_t cycles = d.gluings.size() + components - d.pieces.size();
  const std::size_t cols = offset.back() + cycles;

  IntMatrix rel(2 * d.gluings.size(), cols);
  // Framing classes as integer vectors over the meridian columns.
  //   point slot j: mu = m_j,  lambda = F - m_j
  //   line slot i:  mu = -n_i, lambda = F - n_i
  auto framing = [&](std::size_t piece, std::size_t torus, bool point) {
    std::vector<long long> mu(cols, 0), lambda(cols, 0);
    for (std::size_t c = offset[piece]; c < offset[piece + 1]; ++c) lambda[c] = 1;
    const std::size_t col = offset[piece] + torus;
    mu[col] = point ? 1 : -1;
    lambda[col] -= 1;
    return std::pair{mu, lambda};
  };
  for (std::size_t r = 0; r < d.gluings.size(); ++r) {
    const Gluing& gl = d.gluings[r];
    auto [mp, lp] = framing(gl.point_piece, gl.point_torus, true);
    auto [ml, ll] = framing(gl.line_piece, gl.line_torus, false);
    // Line-owned framing = matrix * point-owned framing.
    const auto& m = gl.matrix.m;
    for (std::size_t c = 0; c < cols; ++c) {
      rel(2 * r, c) = ml[c] - (m[0][0] * mp[c] + m[0][1] * lp[c]);
      rel(2 * r + 1, c) = ll[c] - (m[1][0] * mp[c] + m[1][1] * lp[c]);
    }
  }
  return cokernel(rel);
}

std::vector<std::string> validate_descriptor(const GraphManifoldDescriptor& d) {
  std::vector<std::string> out;
  std::size_t line_pieces = 0;
  std::size_t free_tori = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const VertexPiece& p = d.pieces[i];
    const std::size_t glued = p.boundary_tori.size();
    free_tori += p.free_tori.size();
    if (p.kind == PieceKind::point) {
      if (p.hopf_components != glued || !p.free_tori.empty())
        out.push_back("point piece " + std::to_string(i) + ": d=" + std::to_string(p.hopf_components) + " with " +
                      std::to_string(glued) + " glued and " + std::to_string(p.free_tori.size()) + " free tori");
    } else {
      ++line_pieces;
      if (p.hopf_components != glued + 1 || p.free_tori.size() != 1)
        out.push_back("line piece " + std::to_string(i) + ": d=" + std::to_string(p.hopf_components) + " with " +
                      std::to_string(glued) + " glued and " + std::to_string(p.free_tori.size()) + " free tori");
    }
    if (p.hopf_components < 1) out.push_back("piece " + std::to_string(i) + " has d=0");
  }
  if (free_tori != line_pieces)
    out.push_back(std::to_string(free_tori) + " free tori for " + std::to_string(line_pieces) + " line pieces");

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> use;
  for (std::size_t g = 0; g < d.gluings.size(); ++g) {
    const Gluing& gl = d.gluings[g];
    const bool in_range = gl.point_piece < d.pieces.size() && gl.line_piece < d.pieces.size();
    if (!in_range) {
      out.push_back("gluing " + std::to_string(g) + " names a missing piece");
      continue;
    }
    if (d.pieces[gl.point_piece].kind != PieceKind::point || d.pieces[gl.line_piece].kind != PieceKind::line)
      out.push_back("gluing " + std::to_string(g) + " does not join a point piece to a line piece");
    if (gl.matrix.det() != -1)
      out.push_back("gluing " + std::to_string(g) + " has determinant " + std::to_string(gl.matrix.det()));
    ++use[{gl.point_piece, gl.point_torus}];
    ++use[{gl.line_piece, gl.line_torus}];
  }
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    for (std::size_t t = 0; t < d.pieces[i].boundary_tori.size(); ++t) {
      auto it = use.find({i, t});
      std::size_t n = it == use.end() ? 0 : it->second;
      if (n != 1)
        out.push_back("torus " + std::to_string(t) + " of piece " + std::to_string(i) + " is glued " +
                      std::to_string(n) + " times");
    }
  for (const auto& [key, n] : use)
    if (key.first < d.pieces.size() && key.second >= d.pieces[key.first].boundary_tori.size())
      out.push_back("gluing names torus " + std::to_string(key.second) + " of piece " + std::to_string(key.first) +
                    ", which does not exist");
  return out;
}

std::string descriptor_canonical_form(const GraphManifoldDescriptor& d) {
  std::vector<std::size_t> point_index(d.pieces.size()), line_index(d.pieces.size());
  std::size_t points = 0, lines = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    (d.pieces[i].kind == PieceKind::point ? point_index[i] = points++ : line_index[i] = lines++);
  IncidenceGraph g(points, lines);
  for (const Gluing& gl : d.gluings) g.add_incidence(point_index[gl.point_piece], line_index[gl.line_piece]);

  std::vector<std::string> labels(g.vertex_count());
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const VertexPiece& p = d.pieces[i];
    VertexId v = p.kind == PieceKind::point ? g.point_vertex(point_index[i]) : g.line_vertex(line_index[i]);
    labels[v] = "d" + std::to_string(p.hopf_components) + "f" + std::to_string(p.free_tori.size());
  }
  CanonicalForm cf = canonical_form(g, labels);

  std::vector<std::string> matrices;
  for (const Gluing& gl : d.gluings) {
    std::ostringstream os;
    os << '[' << gl.matrix.m[0][0] << ',' << gl.matrix.m[0][1] << ';' << gl.matrix.m[1][0] << ','
       << gl.matrix.m[1][1] << ']';
    matrices.push_back(os.str());
  }
  std::sort(matrices.begin(), matrices.end());
  std::string out = cf.certificate + " g[";
  for (std::size_t i = 0; i < matrices.size(); ++i) out += (i ? "," : "") + matrices[i];
  return out + "] haken=" + (d.haken ? "1" : "0") + " seifert=" + (d.seifert_pieces ? "1" : "0");
}

}  // namespace arrtool
