#include "arrtool/graph_of_groups.hpp"

#include <stdexcept>

#include "arrtool/errors.hpp"

namespace arrtool {

GraphOfGroups::GraphOfGroups(OrderedIncidenceGraph graph, Convention convention)
    : GraphOfGroups(graph, convention, bfs_spanning_tree(graph.graph)) {}

GraphOfGroups::GraphOfGroups(OrderedIncidenceGraph graph, Convention convention, SpanningTree tree)
    : graph_(std::move(graph)), convention_(convention), tree_(std::move(tree)) {
  for (VertexId v = 0; v < graph_.graph.vertex_count(); ++v) names_.push_back(graph_.graph.vertex_name(v));
}

bool GraphOfGroups::eliminates_last(VertexId v) const {
  return convention_ == Convention::geometric && graph().kind(v) == VertexKind::point && graph().degree(v) >= 1;
}

Word GraphOfGroups::product_complement(VertexId v) const {
  Word u;
  for (std::size_t j = graph().degree(v) - 1; j >= 1; --j) u.append(Symbol::mu(v, j, names_[v]), -1);
  return u;
}

VertexElement GraphOfGroups::normal_form(VertexId v, const Word& w) const {
  const std::size_t d = graph().degree(v);
  const bool eliminate = eliminates_last(v);
  VertexElement out;
  for (const Syllable& s : w.syllables()) {
    const Symbol& sym = s.symbol;
    if (sym.kind == SymbolKind::lambda && sym.index == v) {
      out.central += s.exponent;
    } else if (sym.kind == SymbolKind::mu && sym.index == v && sym.rank >= 1 && sym.rank <= d) {
      if (eliminate && sym.rank == d) {
        out.free_part *= product_complement(v).power(s.exponent);
        out.central += s.exponent;
      } else {
        out.free_part.append(sym, s.exponent);
      }
    } else {
      throw ForeignGenerator("generator " + sym.name + " is not in the vertex group of " + names_[v]);
    }
  }
  return out;
}

VertexElement GraphOfGroups::multiply(VertexId, const VertexElement& x, const VertexElement& y) const {
  return {x.central + y.central, x.free_part * y.free_part};
}

VertexElement GraphOfGroups::inverse(VertexId, const VertexElement& x) const {
  return {-x.central, x.free_part.inverse()};
}

Word GraphOfGroups::to_word(VertexId v, const VertexElement& x) const {
  Word w(Symbol::lambda(v, names_[v]), x.central);
  return w * x.free_part;
}

std::optional<SlotCoordinates> GraphOfGroups::edge_subgroup_membership(VertexId v, std::size_t slot,
                                                                       const VertexElement& x) const {
  const std::size_t d = graph().degree(v);
  if (slot < 1 || slot > d) throw std::invalid_argument("edge_subgroup_membership: slot out of range");
  const long long n = x.central;
  if (eliminates_last(v) && slot == d) {
    // lambda^a u^(a-b)
    Word u = product_complement(v);
    long long c = -x.free_part.exponent_sum(Symbol::mu(v, 1, names_[v]));
    if (x.free_part != u.power(c)) return std::nullopt;
    return SlotCoordinates{n, n - c};
  }
  const Symbol m = Symbol::mu(v, slot, names_[v]);
  const auto& syl = x.free_part.syllables();
  if (syl.size() > 1 || (syl.size() == 1 && syl[0].symbol != m)) return std::nullopt;
  const long long c = syl.empty() ? 0 : syl[0].exponent;
  if (graph().kind(v) == VertexKind::point) return SlotCoordinates{c + n, n};  // lambda^b mu^(a-b)
  return SlotCoordinates{c - n, n};                                             // lambda^b mu^(a+b)
}

VertexElement GraphOfGroups::slot_element(VertexId v, std::size_t slot, SlotCoordinates c) const {
  const auto [a, b] = c;
  const std::size_t d = graph().degree(v);
  if (slot < 1 || slot > d) throw std::invalid_argument("slot_element: slot out of range");
  if (eliminates_last(v) && slot == d) return {a, product_complement(v).power(a - b)};
  const Symbol m = Symbol::mu(v, slot, names_[v]);
  if (graph().kind(v) == VertexKind::point) return {b, Word(m, a - b)};
  return {b, Word(m, a + b)};
}

VertexElement GraphOfGroups::transport(EdgeId e, const VertexElement& at_terminal) const {
  const VertexId from = graph().initial(e);
  const VertexId to = graph().terminal(e);
  auto c = edge_subgroup_membership(to, graph_.rank_of(conjugate_of(e)) + 1, at_terminal);
  if (!c) throw std::invalid_argument("transport: element is outside the edge subgroup");
  const auto [a, b] = *c;
  SlotCoordinates image = graph().kind(to) == VertexKind::point ? SlotCoordinates{b - a, a}
                                                                : SlotCoordinates{b, a + b};
  return slot_element(from, graph_.rank_of(e) + 1, image);
}

void GraphOfGroups::validate(const GraphWord& w) const {
  if (w.elements.size() != w.edges.size() + 1)
    throw MalformedWord("graph word has " + std::to_string(w.edges.size()) + " edges but " +
                        std::to_string(w.elements.size()) + " elements");
  if (w.start >= graph().vertex_count()) throw MalformedWord("start vertex out of range");
  VertexId at = w.start;
  for (EdgeId e : w.edges) {
    if (e >= graph().edges().size()) throw MalformedWord("edge id out of range");
    if (graph().initial(e) != at)
      throw MalformedWord("edge " + std::to_string(e) + " does not start at " + names_[at]);
    at = graph().terminal(e);
  }
}

VertexId GraphOfGroups::end_vertex(const GraphWord& w) const {
  return w.edges.empty() ? w.start : graph().terminal(w.edges.back());
}

GraphWord GraphOfGroups::reduce(const GraphWord& w) const {
  validate(w);
  GraphWord out;
  out.start = w.start;
  out.elements = {w.elements[0]};
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    out.edges.push_back(w.edges[i]);
    out.elements.push_back(w.elements[i + 1]);
    for (;;) {
      const std::size_t n = out.edges.size();
      if (n < 2 || out.edges[n - 1] != conjugate_of(out.edges[n - 2])) break;
      const EdgeId e = out.edges[n - 2];
      const VertexId mid = graph().terminal(e);
      if (!edge_subgroup_membership(mid, graph_.rank_of(conjugate_of(e)) + 1, out.elements[n - 1])) break;
      const VertexId base = graph().initial(e);
      VertexElement merged = multiply(base, out.elements[n - 2], transport(e, out.elements[n - 1]));
      merged = multiply(base, merged, out.elements[n]);
      out.edges.resize(n - 2);
      out.elements.resize(n - 2);
      out.elements.push_back(std::move(merged));
    }
  }
  return out;
}

bool GraphOfGroups::is_identity(const GraphWord& w) const {
  validate(w);
  if (end_vertex(w) != w.start) throw MalformedWord("is_identity needs a closed word");
  GraphWord r = reduce(w);
  return r.edges.empty() && r.elements[0].is_trivial();
}

GraphWord GraphOfGroups::inverse(const GraphWord& w) const {
  validate(w);
  GraphWord out;
  out.start = end_vertex(w);
  out.elements.clear();
  VertexId at = out.start;
  for (std::size_t i = w.elements.size(); i-- > 0;) {
    out.elements.push_back(inverse(at, w.elements[i]));
    if (i > 0) {
      EdgeId e = conjugate_of(w.edges[i - 1]);
      out.edges.push_back(e);
      at = graph().terminal(e);
    }
  }
  return out;
}

GraphWord GraphOfGroups::concat(const GraphWord& a, const GraphWord& b) const {
  validate(a);
  validate(b);
  const VertexId join = end_vertex(a);
  if (join != b.start) throw MalformedWord("concat: words do not meet at a common vertex");
  GraphWord out = a;
  out.elements.back() = multiply(join, out.elements.back(), b.elements[0]);
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  out.elements.insert(out.elements.end(), b.elements.begin() + 1, b.elements.end());
  return out;
}

Word GraphOfGroups::edge_letter(EdgeId e) const {
  const std::size_t pair = pair_of(e);
  if (tree_.in_tree[pair]) return {};
  // The stable letter is the e(L, p) direction.
  return Word(Symbol::stable(pair), e == line_to_point(pair) ? 1 : -1);
}

Word GraphOfGroups::expand(const GraphWord& w) const {
  validate(w);
  Word out = to_word(w.start, w.elements[0]);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    out *= edge_letter(w.edges[i]);
    out *= to_word(graph().terminal(w.edges[i]), w.elements[i + 1]);
  }
  return out;
}

namespace {

VertexElement random_element(const GraphOfGroups& gg, VertexId v, std::optional<EdgeId> arrived_by,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> coord(-2, 2);
  const IncidenceGraph& g = gg.graph();
  if (arrived_by && std::bernoulli_distribution(0.5)(rng)) {
    const std::size_t slot = gg.ordered().rank_of(conjugate_of(*arrived_by)) + 1;
    return gg.slot_element(v, slot, {coord(rng), coord(rng)});
  }
  auto gens = vertex_generators(g, v);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<std::size_t> len(0, 3);
  Word w;
  for (std::size_t i = len(rng); i > 0; --i) w.append(gens[pick(rng)], coord(rng) < 0 ? -1 : 1);
  return gg.normal_form(v, w);
}

}  // namespace

GraphWord random_closed_word(const GraphOfGroups& gg, VertexId base, std::size_t steps, std::mt19937_64& rng) {
  const IncidenceGraph& g = gg.graph();
  std::vector<EdgeId> path;
  VertexId at = base;
  for (std::size_t i = 0; i < steps && g.degree(at) > 0; ++i) {
    const auto& out = g.outgoing(at);
    EdgeId e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    path.push_back(e);
    at = g.terminal(e);
  }
  auto home = gg.tree().path(g, at, base);
  path.insert(path.end(), home.begin(), home.end());

  GraphWord w;
  w.start = base;
  w.elements = {random_element(gg, base, std::nullopt, rng)};
  for (EdgeId e : path) {
    w.edges.push_back(e);
    w.elements.push_back(random_element(gg, g.terminal(e), e, rng));
  }
  return w;
}

}  // namespace arrtool
