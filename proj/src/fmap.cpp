#include "arrtool/fmap.hpp"

#include <stdexcept>

#include "arrtool/errors.hpp"

namespace arrtool {

Word g_word(const OrderedIncidenceGraph& og, std::size_t line, std::size_t point, Variant variant) {
  const IncidenceGraph& g = og.graph;
  if (point >= g.point_count() || line >= g.line_count())
    throw IncidenceMismatch("g_word: vertex index out of range");
  auto pair = g.find_pair(point, line);
  if (!pair)
    throw IncidenceMismatch(g.vertex_name(g.point_vertex(point)) + " is not on " +
                            g.vertex_name(g.line_vertex(line)));
  const VertexId v = g.point_vertex(point);
  const std::string name = g.vertex_name(v);
  const std::size_t r = g.degree(v);
  const std::size_t j = og.rank_of(point_to_line(*pair)) + 1;
  auto mu = [&](std::size_t i) { return Symbol::mu(v, i, name); };

  Word conj;
  if (variant == Variant::thm4) {
    for (std::size_t i = 1; i < j; ++i) conj.append(mu(i));
  } else {
    for (std::size_t i = r; i > j; --i) conj.append(mu(i), -1);
  }
  return conj * Word(mu(j)) * conj.inverse();
}

GraphWord f_edge_path(const GraphOfGroups& gg, EdgeId e, Variant variant) {
  const IncidenceGraph& g = gg.graph();
  if (e >= g.edges().size()) throw IncidenceMismatch("f_edge_path: edge id out of range");
  if (g.kind(g.initial(e)) == VertexKind::point) return gg.inverse(f_edge_path(gg, conjugate_of(e), variant));

  const VertexId lv = g.initial(e);
  const auto& order = gg.ordered().order[lv];
  const std::size_t j = gg.ordered().rank_of(e) + 1;
  GraphWord w;
  w.start = lv;
  for (std::size_t i = 2; i < j; ++i) {
    const EdgeId ei = order[i - 1];
    const VertexId pv = g.terminal(ei);
    Word gi = g_word(gg.ordered(), g.index_of(lv), g.index_of(pv), variant);
    w.edges.push_back(ei);
    w.elements.push_back(gg.normal_form(pv, gi));
    w.edges.push_back(conjugate_of(ei));
    w.elements.push_back({});
  }
  w.edges.push_back(e);
  w.elements.push_back({});
  return w;
}

Word f_edge_word(const GraphOfGroups& gg, EdgeId e, Variant variant) {
  // Expanding the inverted path would move central lambda-powers around, so
  // f(e(p, L)) is taken as the inverse word of f(e(L, p)).
  if (e < gg.graph().edges().size() && gg.graph().kind(gg.graph().initial(e)) == VertexKind::point)
    return f_edge_word(gg, conjugate_of(e), variant).inverse();
  return gg.expand(f_edge_path(gg, e, variant));
}

GraphWord f_path(const GraphOfGroups& gg, VertexId start, const std::vector<EdgeId>& path, Variant variant) {
  GraphWord w;
  w.start = start;
  for (EdgeId e : path) w = gg.concat(w, f_edge_path(gg, e, variant));
  return w;
}

std::vector<EdgeId> fundamental_cycle(const IncidenceGraph& g, const SpanningTree& tree, std::size_t pair) {
  const EdgeId e = point_to_line(pair);
  std::vector<EdgeId> cycle = tree.path(g, tree.root, g.initial(e));
  cycle.push_back(e);
  auto back = tree.path(g, g.terminal(e), tree.root);
  cycle.insert(cycle.end(), back.begin(), back.end());
  return cycle;
}

std::vector<EdgeId> reduce_path(const std::vector<EdgeId>& path) {
  std::vector<EdgeId> out;
  for (EdgeId e : path) {
    if (!out.empty() && out.back() == conjugate_of(e)) out.pop_back();
    else out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> random_nontrivial_cycle(const IncidenceGraph& g, const SpanningTree& tree, VertexId base,
                                            std::size_t steps, std::mt19937_64& rng) {
  if (betti1(g) == 0) throw std::invalid_argument("random_nontrivial_cycle: graph is a forest");
  // A walk that stays inside the tree cancels completely; lengthen and retry.
  for (;; ++steps) {
    std::vector<EdgeId> walk;
    VertexId at = base;
    for (std::size_t i = 0; i < steps; ++i) {
      std::vector<EdgeId> choices;
      for (EdgeId e : g.outgoing(at))
        if (walk.empty() || e != conjugate_of(walk.back())) choices.push_back(e);
      if (choices.empty()) break;
      EdgeId e = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      walk.push_back(e);
      at = g.terminal(e);
    }
    auto home = tree.path(g, at, base);
    walk.insert(walk.end(), home.begin(), home.end());
    walk = reduce_path(walk);
    if (!walk.empty()) return walk;
  }
}

}  // namespace arrtool
