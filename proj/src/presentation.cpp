#include "arrtool/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "arrtool/errors.hpp"
#include "arrtool/fmap.hpp"
#include "arrtool/graph_of_groups.hpp"

namespace arrtool {

std::string_view to_string(Convention c) { return c == Convention::geometric ? "geometric" : "paper-literal"; }

std::string_view to_string(Variant v) { return v == Variant::thm4 ? "thm4" : "lemma32"; }

std::string_view to_string(Space s) {
  switch (s) {
    case Space::vertex: return "vertex";
    case Space::boundary: return "boundary";
    case Space::complement: return "complement";
  }
  return "?";
}

Convention parse_convention(std::string_view s) {
  if (s == "geometric") return Convention::geometric;
  if (s == "paper-literal") return Convention::paper_literal;
  throw ParseError("unknown convention '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s) {
  if (s == "thm4") return Variant::thm4;
  if (s == "lemma32") return Variant::lemma32;
  throw ParseError("unknown variant '" + std::string(s) + "'");
}

Space parse_space(std::string_view s) {
  if (s == "boundary") return Space::boundary;
  if (s == "complement") return Space::complement;
  if (s == "vertex") return Space::vertex;
  throw ParseError("unknown space '" + std::string(s) + "'");
}

std::vector<EdgeId> SpanningTree::path(const IncidenceGraph& g, VertexId from, VertexId to) const {
  // Climb both ends to their common ancestor.
  auto ancestors = [&](VertexId v) {
    std::vector<VertexId> chain{v};
    while (parent_edge[v]) {
      v = g.initial(*parent_edge[v]);
      chain.push_back(v);
    }
    return chain;
  };
  std::vector<VertexId> a = ancestors(from);
  std::vector<VertexId> b = ancestors(to);
  if (a.back() != b.back()) throw DisconnectedGraph("tree path between different components");
  while (a.size() >= 2 && b.size() >= 2 && a[a.size() - 2] == b[b.size() - 2]) {
    a.pop_back();
    b.pop_back();
  }
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) out.push_back(conjugate_of(*parent_edge[a[i]]));
  for (std::size_t i = b.size() - 1; i-- > 0;) out.push_back(*parent_edge[b[i]]);
  return out;
}

std::vector<std::size_t> SpanningTree::tree_pairs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in_tree.size(); ++i)
    if (in_tree[i]) out.push_back(i);
  return out;
}

namespace {

template <class Shuffle>
SpanningTree bfs_tree(const IncidenceGraph& g, VertexId root, Shuffle shuffle) {
  SpanningTree t;
  t.root = root;
  t.in_tree.assign(g.pair_count(), 0);
  t.parent_edge.assign(g.vertex_count(), std::nullopt);
  std::vector<char> seen(g.vertex_count(), 0);
  auto grow = [&](VertexId r) {
    std::queue<VertexId> q;
    q.push(r);
    seen[r] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      std::vector<EdgeId> out = g.outgoing(v);
      shuffle(out);
      for (EdgeId e : out) {
        VertexId w = g.terminal(e);
        if (seen[w]) continue;
        seen[w] = 1;
        t.parent_edge[w] = e;
        t.in_tree[pair_of(e)] = 1;
        q.push(w);
      }
    }
  };
  if (g.vertex_count() == 0) return t;
  grow(root);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) grow(v);
  return t;
}

}  // namespace

SpanningTree bfs_spanning_tree(const IncidenceGraph& g, VertexId root) {
  return bfs_tree(g, root, [](std::vector<EdgeId>&) {});
}

SpanningTree random_spanning_tree(const IncidenceGraph& g, std::uint64_t seed, VertexId root) {
  std::mt19937_64 rng(seed);
  return bfs_tree(g, root, [&](std::vector<EdgeId>& edges) { std::shuffle(edges.begin(), edges.end(), rng); });
}

bool GroupPresentation::has_generator(const Symbol& s) const {
  return std::find(generators.begin(), generators.end(), s) != generators.end();
}

std::string GroupPresentation::str() const {
  std::ostringstream os;
  os << "gens:";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : " ") << generators[i].name;
  os << '\n';
  for (const Word& r : relators) os << "rel: " << r.str() << '\n';
  return os.str();
}

std::vector<Symbol> GroupPresentation::foreign_symbols() const {
  std::set<Symbol> known(generators.begin(), generators.end());
  std::set<Symbol> foreign;
  for (const Word& r : relators)
    for (const Syllable& s : r.syllables())
      if (!known.count(s.symbol)) foreign.insert(s.symbol);
  return {foreign.begin(), foreign.end()};
}

std::vector<Symbol> vertex_generators(const IncidenceGraph& g, VertexId v) {
  const std::string name = g.vertex_name(v);
  std::vector<Symbol> out{Symbol::lambda(v, name)};
  for (std::size_t j = 1; j <= g.degree(v); ++j) out.push_back(Symbol::mu(v, j, name));
  return out;
}

namespace {

std::vector<Word> vertex_relators(const IncidenceGraph& g, VertexId v, Convention convention) {
  const std::string name = g.vertex_name(v);
  const Word lambda(Symbol::lambda(v, name));
  std::vector<Word> out;
  Word product;
  for (std::size_t j = 1; j <= g.degree(v); ++j) {
    Word mu(Symbol::mu(v, j, name));
    out.push_back(commutator(lambda, mu));
    product *= mu;
  }
  if (convention == Convention::geometric && g.kind(v) == VertexKind::point && g.degree(v) > 0)
    out.push_back(product * lambda.inverse());
  return out;
}

GroupPresentation boundary_over_forest(const OrderedIncidenceGraph& og, Convention convention,
                                       const SpanningTree& tree);

void require_connected(const IncidenceGraph& g) {
  if (!is_connected(g))
    throw DisconnectedGraph("incidence graph has " + std::to_string(component_count(g)) + " components");
}

}  // namespace

GroupPresentation vertex_group(const OrderedIncidenceGraph& g, VertexId v, Convention convention) {
  GroupPresentation p;
  p.generators = vertex_generators(g.graph, v);
  p.relators = vertex_relators(g.graph, v, convention);
  p.provenance.space = Space::vertex;
  p.provenance.convention = convention;
  return p;
}

GroupPresentation boundary_presentation(const OrderedIncidenceGraph& g, Convention convention) {
  require_connected(g.graph);
  return boundary_presentation(g, convention, bfs_spanning_tree(g.graph));
}

GroupPresentation boundary_presentation(const OrderedIncidenceGraph& og, Convention convention,
                                        const SpanningTree& tree) {
  require_connected(og.graph);
  return boundary_over_forest(og, convention, tree);
}

GroupPresentation boundary_presentation_forest(const OrderedIncidenceGraph& g, Convention convention) {
  return boundary_over_forest(g, convention, bfs_spanning_tree(g.graph));
}

namespace {

GroupPresentation boundary_over_forest(const OrderedIncidenceGraph& og, Convention convention,
                                       const SpanningTree& tree) {
  const IncidenceGraph& g = og.graph;
  GroupPresentation p;
  p.provenance.space = Space::boundary;
  p.provenance.convention = convention;
  p.provenance.spanning_tree = tree.tree_pairs();

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto gens = vertex_generators(g, v);
    p.generators.insert(p.generators.end(), gens.begin(), gens.end());
    auto rels = vertex_relators(g, v, convention);
    p.relators.insert(p.relators.end(), rels.begin(), rels.end());
  }
  for (std::size_t i = 0; i < g.pair_count(); ++i)
    if (!tree.in_tree[i]) p.generators.push_back(Symbol::stable(i));

  // Per pair, with t the letter of e(L, p) (empty on tree edges):
  //   t mu_j t^-1 = lambda_L   and   t lambda_p mu_j^-1 t^-1 = mu_k.
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    const EdgeId pl = point_to_line(i);
    const EdgeId lp = line_to_point(i);
    const VertexId pv = g.initial(pl);
    const VertexId lv = g.initial(lp);
    const std::string pn = g.vertex_name(pv);
    const std::string ln = g.vertex_name(lv);
    const Word mu_j(Symbol::mu(pv, og.rank_of(pl) + 1, pn));
    const Word mu_k(Symbol::mu(lv, og.rank_of(lp) + 1, ln));
    const Word lambda_p(Symbol::lambda(pv, pn));
    const Word lambda_l(Symbol::lambda(lv, ln));
    const Word t = tree.in_tree[i] ? Word() : Word(Symbol::stable(i));
    p.relators.push_back(t * mu_j * t.inverse() * lambda_l.inverse());
    p.relators.push_back(t * lambda_p * mu_j.inverse() * t.inverse() * mu_k.inverse());
  }
  return p;
}

}  // namespace

GroupPresentation complement_presentation(const OrderedIncidenceGraph& g, Convention convention,
                                          Variant variant) {
  if (g.graph.pair_count() == 0) return complement_presentation(g, convention, variant, SpanningTree{});
  require_connected(g.graph);
  return complement_presentation(g, convention, variant, bfs_spanning_tree(g.graph));
}

GroupPresentation complement_presentation(const OrderedIncidenceGraph& og, Convention convention,
                                          Variant variant, const SpanningTree& tree) {
  const IncidenceGraph& g = og.graph;
  if (g.pair_count() == 0) {
    // Parallel lines: free group on one meridian per line.
    GroupPresentation p;
    for (std::size_t l = 0; l < g.line_count(); ++l) {
      VertexId v = g.line_vertex(l);
      p.generators.push_back(Symbol::lambda(v, g.vertex_name(v)));
    }
    p.provenance.space = Space::complement;
    p.provenance.convention = convention;
    p.provenance.variant = variant;
    return p;
  }
  GroupPresentation p = boundary_presentation(og, convention, tree);
  p.provenance.space = Space::complement;
  p.provenance.variant = variant;
  GraphOfGroups gg(og, convention, tree);
  for (std::size_t i = 0; i < g.pair_count(); ++i) {
    if (tree.in_tree[i]) continue;
    GraphWord cycle = f_path(gg, tree.root, fundamental_cycle(g, tree, i), variant);
    p.relators.push_back(gg.expand(cycle));
  }
  return p;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  std::map<Symbol, std::size_t> column;
  for (const Symbol& s : p.generators) column.emplace(s, column.size());
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Syllable& s : p.relators[r].syllables()) {
      auto it = column.find(s.symbol);
      if (it == column.end()) throw ForeignGenerator("relator uses " + s.symbol.name + ", not a generator");
      m(r, it->second) += s.exponent;
    }
  return m;
}

AbelianGroupDescription abelianize(const GroupPresentation& p) { return cokernel(exponent_matrix(p)); }

AbelianizationMap::AbelianizationMap(const GroupPresentation& p) : generators_(p.generators) {
  IntMatrix rel = exponent_matrix(p);
  SmithForm s = smith_normal_form(rel);
  right_ = s.right;
  divisors_.assign(rel.cols(), 0);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) divisors_[i] = s.diagonal[i];
  group_ = cokernel(rel);
}

std::vector<BigInt> AbelianizationMap::image(const Word& w) const {
  // Row vector v of exponent sums; v * right_ has coordinate i determined
  // modulo divisors_[i].
  std::vector<BigInt> v(generators_.size());
  for (const Syllable& s : w.syllables()) {
    auto it = std::find(generators_.begin(), generators_.end(), s.symbol);
    if (it == generators_.end()) throw ForeignGenerator(s.symbol.name + " is not a generator");
    v[static_cast<std::size_t>(it - generators_.begin())] += s.exponent;
  }
  std::vector<BigInt> out;
  for (std::size_t c = 0; c < right_.cols(); ++c) {
    BigInt x = 0;
    for (std::size_t r = 0; r < v.size(); ++r) x += v[r] * right_(r, c);
    const BigInt& d = divisors_[c];
    if (d == 1) continue;
    if (d > 1) {
      x %= d;
      if (x < 0) x += d;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace arrtool
