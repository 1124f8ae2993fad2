#include "arrtool/wiring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arrtool/errors.hpp"

namespace arrtool {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

void validate_order(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n)
    throw AmbiguousOrder("base order has " + std::to_string(order.size()) + " entries for " + std::to_string(n) +
                         " distinct abscissae");
  std::vector<char> seen(n, 0);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw AmbiguousOrder("base order is not a permutation of the abscissae");
    seen[i] = 1;
  }
}

// Removes non-intersection vertices of degree <= 1 until none remain, then
// merges the two segments at each non-intersection vertex of degree 2.
void prune_complex(WiringDiagram& w) {
  const std::size_t n = w.vertices.size();
  std::vector<char> alive_v(n, 1);
  std::vector<char> alive_s(w.segments.size(), 1);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t s = 0; s < w.segments.size(); ++s) {
    incident[w.segments[s].from].push_back(s);
    incident[w.segments[s].to].push_back(s);
  }
  auto degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (std::size_t s : incident[v]) d += alive_s[s];
    return d;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive_v[v] || w.vertices[v].point || degree(v) > 1) continue;
      alive_v[v] = 0;
      for (std::size_t s : incident[v]) alive_s[s] = 0;
      changed = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive_v[v] || w.vertices[v].point || degree(v) != 2) continue;
    std::vector<std::size_t> two;
    for (std::size_t s : incident[v])
      if (alive_s[s]) two.push_back(s);
    WiringSegment& a = w.segments[two[0]];
    WiringSegment& b = w.segments[two[1]];
    std::size_t a_end = a.from == v ? a.to : a.from;
    std::size_t b_end = b.from == v ? b.to : b.from;
    // Orient a as a_end -> v and b as v -> b_end, then splice.
    if (a.from == v) {
      std::swap(a.from, a.to);
      std::reverse(a.braid.begin(), a.braid.end());
    }
    if (b.to == v) std::reverse(b.braid.begin(), b.braid.end());
    a.braid.insert(a.braid.end(), b.braid.begin(), b.braid.end());
    a.from = a_end;
    a.to = b_end;
    alive_s[two[1]] = 0;
    alive_v[v] = 0;
    auto& inc_b = incident[b_end];
    std::replace(inc_b.begin(), inc_b.end(), two[1], two[0]);
  }
  std::vector<std::size_t> remap(n, SIZE_MAX);
  std::vector<WiringVertex> vertices;
  for (std::size_t v = 0; v < n; ++v)
    if (alive_v[v]) {
      remap[v] = vertices.size();
      vertices.push_back(std::move(w.vertices[v]));
    }
  std::vector<WiringSegment> segments;
  for (std::size_t s = 0; s < w.segments.size(); ++s)
    if (alive_s[s]) {
      WiringSegment seg = std::move(w.segments[s]);
      seg.from = remap[seg.from];
      seg.to = remap[seg.to];
      segments.push_back(std::move(seg));
    }
  w.vertices = std::move(vertices);
  w.segments = std::move(segments);
}

}  // namespace

std::size_t WiringDiagram::component_count() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& s : segments) parent[find_root(parent, s.from)] = find_root(parent, s.to);
  std::size_t c = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) c += find_root(parent, v) == v;
  return c;
}

std::size_t WiringDiagram::betti1() const { return segments.size() + component_count() - vertices.size(); }

WiringDiagram build_wiring_diagram(const Arrangement& arrangement,
                                   const std::optional<std::vector<std::size_t>>& base_order, bool prune) {
  WiringDiagram w;
  std::set<Rational> xs;
  for (const Point& p : arrangement.points()) xs.insert(p.x);
  w.abscissae.assign(xs.begin(), xs.end());
  const std::size_t m = w.abscissae.size();
  if (base_order) {
    validate_order(*base_order, m);
    w.base_order = *base_order;
  } else {
    w.base_order.resize(m);
    std::iota(w.base_order.begin(), w.base_order.end(), 0);
  }

  if (m == 0) {
    // No intersections: each line is its own component, represented by its
    // point over x = 0.
    for (const Line& l : arrangement.lines()) w.vertices.push_back({Rational(0), l.intercept, std::nullopt, {l.id}});
    return w;
  }

  std::map<std::pair<Rational, Rational>, std::size_t> point_at;
  for (const Point& p : arrangement.points()) point_at[{p.x, p.y}] = p.id;

  // vertex_of[i][line] = vertex of `line` over the i-th visited abscissa.
  std::vector<std::vector<std::size_t>> vertex_of(m, std::vector<std::size_t>(arrangement.line_count()));
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& q = w.abscissae[w.base_order[i]];
    std::map<Rational, std::size_t> fiber;
    for (const Line& l : arrangement.lines()) {
      Rational y = l.at(q);
      auto [it, fresh] = fiber.emplace(y, w.vertices.size());
      if (fresh) {
        WiringVertex v{q, y, std::nullopt, {}};
        if (auto p = point_at.find({q, y}); p != point_at.end()) v.point = p->second;
        w.vertices.push_back(std::move(v));
      }
      w.vertices[it->second].lines.push_back(l.id);
      vertex_of[i][l.id] = it->second;
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (const Line& l : arrangement.lines())
      w.segments.push_back({l.id, vertex_of[i][l.id], vertex_of[i + 1][l.id], {}});

  if (prune) prune_complex(w);
  return w;
}

}  // namespace arrtool
