#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrtool/incidence.hpp"
#include "arrtool/smith.hpp"
#include "arrtool/word.hpp"

namespace arrtool {

/// Vertex-group convention. `paper_literal` has only the commutators
/// [lambda, mu_j]; `geometric` adds mu_1 ... mu_d = lambda at point-vertices.
enum class Convention { geometric, paper_literal };

/// Which g-word formula the f-map uses.
enum class Variant { thm4, lemma32 };

enum class Space { vertex, boundary, complement };

std::string_view to_string(Convention c);
std::string_view to_string(Variant v);
std::string_view to_string(Space s);
/// Throws ParseError on unknown names.
Convention parse_convention(std::string_view s);
Variant parse_variant(std::string_view s);
Space parse_space(std::string_view s);

/// Rooted spanning forest of an incidence graph.
struct SpanningTree {
  VertexId root = 0;
  /// in_tree[pair] for every conjugate pair.
  std::vector<char> in_tree;
  /// Edge entering each vertex from its parent; absent at roots.
  std::vector<std::optional<EdgeId>> parent_edge;

  /// Edge path from `from` to `to` through the tree (both in one component).
  std::vector<EdgeId> path(const IncidenceGraph& g, VertexId from, VertexId to) const;
  /// Pair indices in the tree, increasing.
  std::vector<std::size_t> tree_pairs() const;
};

/// Breadth-first tree from `root`, visiting outgoing edges in stored order.
SpanningTree bfs_spanning_tree(const IncidenceGraph& g, VertexId root = 0);
/// Breadth-first tree with a seeded shuffle of the edges at each vertex.
SpanningTree random_spanning_tree(const IncidenceGraph& g, std::uint64_t seed, VertexId root = 0);

struct Provenance {
  Space space = Space::boundary;
  Convention convention = Convention::geometric;
  Variant variant = Variant::thm4;
  std::vector<std::size_t> spanning_tree;
  bool simplified = false;
};

struct GroupPresentation {
  std::vector<Symbol> generators;
  std::vector<Word> relators;
  Provenance provenance;

  bool has_generator(const Symbol& s) const;
  /// "gens: a, b" followed by one "rel: <word>" line per relator.
  std::string str() const;
  /// Symbols used by relators but not listed as generators.
  std::vector<Symbol> foreign_symbols() const;
};

/// lambda_v, mu_{v,1}, ..., mu_{v,deg v}.
std::vector<Symbol> vertex_generators(const IncidenceGraph& g, VertexId v);

GroupPresentation vertex_group(const OrderedIncidenceGraph& g, VertexId v, Convention convention);

/// Graph-of-groups presentation of the boundary manifold group. Throws
/// DisconnectedGraph.
GroupPresentation boundary_presentation(const OrderedIncidenceGraph& g, Convention convention);
GroupPresentation boundary_presentation(const OrderedIncidenceGraph& g, Convention convention,
                                        const SpanningTree& tree);
/// Boundary presentation of a possibly disconnected graph over a spanning
/// forest: the free product of the component presentations.
GroupPresentation boundary_presentation_forest(const OrderedIncidenceGraph& g, Convention convention);

/// Boundary presentation plus one f-image relator per non-tree pair. An
/// edgeless graph gives the free group on its lines. Throws DisconnectedGraph.
GroupPresentation complement_presentation(const OrderedIncidenceGraph& g, Convention convention, Variant variant);
GroupPresentation complement_presentation(const OrderedIncidenceGraph& g, Convention convention, Variant variant,
                                          const SpanningTree& tree);

/// Exponent-sum matrix, rows = relators, cols = generators.
IntMatrix exponent_matrix(const GroupPresentation& p);
AbelianGroupDescription abelianize(const GroupPresentation& p);

/// Map from words to the abelianization, in Smith coordinates: two words
/// have equal images iff they agree in H_1 of the presented group.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const GroupPresentation& p);

  const AbelianGroupDescription& group() const { return group_; }
  /// Torsion coordinates reduced modulo their divisor, free coordinates
  /// as is; coordinates killed by a unit divisor are dropped.
  std::vector<BigInt> image(const Word& w) const;

 private:
  std::vector<Symbol> generators_;
  IntMatrix right_;
  std::vector<BigInt> divisors_;  // one per column of right_; 0 = free
  AbelianGroupDescription group_;
};

}  // namespace arrtool
