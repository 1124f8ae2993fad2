#include <random>

#include "doctest.h"

#include "arrtool/batch.hpp"
#include "arrtool/checks.hpp"
#include "arrtool/errors.hpp"
#include "arrtool/fmap.hpp"
#include "arrtool/graph_manifold.hpp"
#include "arrtool/graph_of_groups.hpp"
#include "arrtool/presentation.hpp"
#include "arrtool/tietze.hpp"
#include "support.hpp"

using namespace arrtool;

namespace {

std::size_t stable_letters(const GroupPresentation& p) {
  std::size_t n = 0;
  for (const auto& s : p.generators) n += s.kind == SymbolKind::stable;
  return n;
}

// True if some rotation of r is lam u lam^-1 u^-1 with u free of lam.
bool commutes_with(const Word& r, const Symbol& lam) {
  const auto& syl = r.syllables();
  for (std::size_t k = 0; k < syl.size(); ++k) {
    Word rot;
    for (std::size_t i = 0; i < syl.size(); ++i) {
      const Syllable& x = syl[(k + i) % syl.size()];
      rot.append(x.symbol, x.exponent);
    }
    const auto& s = rot.syllables();
    if (s.size() < 4 || !(s.front().symbol == lam) || s.front().exponent != 1) continue;
    Word u;
    std::size_t i = 1;
    for (; i < s.size() && !(s[i].symbol == lam); ++i) u.append(s[i].symbol, s[i].exponent);
    if (i < s.size() && s[i].exponent == -1 && !u.empty() && !u.contains(lam) &&
        rot == Word(lam) * u * Word(lam, -1) * u.inverse())
      return true;
  }
  return false;
}

VertexElement element(long long central, Word free_part = {}) { return {central, std::move(free_part)}; }

}  // namespace

TEST_CASE("vertex groups") {
  OrderedIncidenceGraph t = test::ordered("triangle");
  GroupPresentation point = vertex_group(t, 0, Convention::geometric);
  CHECK(point.generators.size() == 3);
  CHECK(point.relators.size() == 3);
  CHECK(abelianize(point) == AbelianGroupDescription{2, {}});
  CHECK(abelianize(vertex_group(t, 0, Convention::paper_literal)) == AbelianGroupDescription{3, {}});

  const VertexId line = t.graph.line_vertex(0);
  for (Convention c : {Convention::geometric, Convention::paper_literal}) {
    GroupPresentation g = vertex_group(t, line, c);
    CHECK(g.generators.size() == 3);
    CHECK(g.relators.size() == 2);
    CHECK(abelianize(g) == AbelianGroupDescription{3, {}});
  }
}

TEST_CASE("boundary presentations") {
  CHECK(abelianize(boundary_presentation(test::ordered("two-generic"), Convention::geometric)) ==
        AbelianGroupDescription{2, {}});
  CHECK(abelianize(boundary_presentation(test::ordered("two-generic"), Convention::paper_literal)) ==
        AbelianGroupDescription{3, {}});
  CHECK(abelianize(boundary_presentation(test::ordered("pencil-3"), Convention::geometric)) ==
        AbelianGroupDescription{3, {}});

  OrderedIncidenceGraph t = test::ordered("triangle");
  GroupPresentation p = boundary_presentation(t, Convention::geometric);
  CHECK(stable_letters(p) == 1);
  CHECK(abelianize(p) == h1_mayer_vietoris(build_descriptor(t)));
  CHECK(p.foreign_symbols().empty());
  CHECK(p.provenance.space == Space::boundary);
  CHECK(p.provenance.spanning_tree.size() == 5);

  CHECK_THROWS_AS(boundary_presentation(test::ordered("parallel-pair"), Convention::geometric), DisconnectedGraph);
  CHECK(abelianize(boundary_presentation_forest(test::ordered("parallel-pair"), Convention::geometric)) ==
        AbelianGroupDescription{2, {}});
}

TEST_CASE("spanning tree independence") {
  for (const char* name : {"triangle", "generic-4", "near-pencil"}) {
    OrderedIncidenceGraph og = test::ordered(name);
    const auto b = abelianize(boundary_presentation(og, Convention::geometric));
    const auto c = abelianize(complement_presentation(og, Convention::geometric, Variant::thm4));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SpanningTree tree = random_spanning_tree(og.graph, seed);
      CHECK(tree.tree_pairs().size() == og.graph.vertex_count() - 1);
      GroupPresentation p = boundary_presentation(og, Convention::geometric, tree);
      CHECK(stable_letters(p) == betti1(og.graph));
      CHECK(abelianize(p) == b);
      CHECK(abelianize(complement_presentation(og, Convention::geometric, Variant::thm4, tree)) == c);
    }
  }
}

TEST_CASE("complement presentations") {
  OrderedIncidenceGraph t = test::ordered("triangle");
  for (Variant v : {Variant::thm4, Variant::lemma32}) {
    GroupPresentation c = complement_presentation(t, Convention::geometric, v);
    CHECK(abelianize(c) == AbelianGroupDescription{3, {}});
    CHECK(c.relators.size() == boundary_presentation(t, Convention::geometric).relators.size() + 1);
    CHECK(c.provenance.variant == v);
  }

  GroupPresentation two =
      tietze_simplify(complement_presentation(test::ordered("two-generic"), Convention::geometric, Variant::thm4));
  CHECK(two.generators.size() == 2);
  REQUIRE(two.relators.size() == 1);
  CHECK(is_generator_commutator(two.relators[0]));

  GroupPresentation pen =
      tietze_simplify(complement_presentation(test::ordered("pencil-3"), Convention::geometric, Variant::thm4));
  CHECK(abelianize(pen) == AbelianGroupDescription{3, {}});
  // Z x F_2: three generators, each relator making lam commute with a word
  // in the meridians.
  REQUIRE(pen.generators.size() == 3);
  const Symbol lam = pen.generators[0];
  CHECK(lam.kind == SymbolKind::lambda);
  CHECK(pen.relators.size() >= 2);
  for (const Word& r : pen.relators) CHECK(commutes_with(r, lam));
  CHECK(is_generator_commutator(pen.relators[0]));
  CHECK(is_generator_commutator(pen.relators[1]));

  GroupPresentation free = complement_presentation(test::ordered("parallel-pair"), Convention::geometric, Variant::thm4);
  CHECK(free.generators.size() == 2);
  CHECK(free.relators.empty());
}

TEST_CASE("vertex normal form") {
  OrderedIncidenceGraph og = test::ordered("two-generic");
  GraphOfGroups gg(og, Convention::geometric);
  auto gens = vertex_generators(og.graph, 0);
  const Word lam(gens[0]), mu1(gens[1]), mu2(gens[2]);
  CHECK(gg.normal_form(0, mu1 * lam * mu1.inverse()) == element(1));
  CHECK(gg.normal_form(0, mu1 * mu2) == element(1));
  CHECK(gg.normal_form(0, lam.power(2) * mu1 * mu2 * mu2.inverse()) == element(2, mu1));
  CHECK_THROWS_AS(gg.normal_form(0, Word(Symbol::named("x"))), ForeignGenerator);

  // Normal forms are a faithful model of the vertex group.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 2), exp(-2, 2);
  for (int i = 0; i < 200; ++i) {
    Word w;
    for (int k = 0; k < 6; ++k) w.append(gens[pick(rng)], exp(rng));
    VertexElement x = gg.normal_form(0, w);
    CHECK(gg.normal_form(0, gg.to_word(0, x)) == x);
    CHECK(gg.multiply(0, x, gg.inverse(0, x)).is_trivial());
  }
}

TEST_CASE("edge subgroup membership at line slots") {
  OrderedIncidenceGraph og = test::ordered("two-generic");
  GraphOfGroups gg(og, Convention::geometric);
  const VertexId l = og.graph.line_vertex(0);
  const Word mu(vertex_generators(og.graph, l)[1]);
  CHECK(gg.edge_subgroup_membership(l, 1, element(1, mu)) == SlotCoordinates{0, 1});
  CHECK(gg.edge_subgroup_membership(l, 1, element(0, mu.power(3))) == SlotCoordinates{3, 0});

  OrderedIncidenceGraph t = test::ordered("triangle");
  GraphOfGroups tg(t, Convention::geometric);
  const VertexId tl = t.graph.line_vertex(0);
  auto g = vertex_generators(t.graph, tl);
  CHECK_FALSE(tg.edge_subgroup_membership(tl, 2, element(0, Word(g[1]) * Word(g[2]))));
}

TEST_CASE("slot coordinates round trip at every slot") {
  for (Convention c : {Convention::geometric, Convention::paper_literal}) {
    OrderedIncidenceGraph og = test::ordered("near-pencil");
    GraphOfGroups gg(og, c);
    for (VertexId v = 0; v < og.graph.vertex_count(); ++v)
      for (std::size_t slot = 1; slot <= og.graph.degree(v); ++slot)
        for (SlotCoordinates xy : {SlotCoordinates{2, -1}, SlotCoordinates{0, 3}, SlotCoordinates{-4, 0}}) {
          VertexElement x = gg.slot_element(v, slot, xy);
          CHECK(gg.edge_subgroup_membership(v, slot, x) == xy);
        }
  }
}

TEST_CASE("transport follows the universal matrix") {
  OrderedIncidenceGraph og = test::ordered("two-generic");
  GraphOfGroups gg(og, Convention::geometric);
  // Point-side (a, b) becomes line-side (b - a, a) and back.
  const EdgeId e = point_to_line(0);
  const VertexId l = og.graph.terminal(e);
  const std::size_t line_slot = og.rank_of(conjugate_of(e)) + 1;
  const std::size_t point_slot = og.rank_of(e) + 1;
  VertexElement at_line = gg.slot_element(l, line_slot, {3, 5});
  VertexElement at_point = gg.transport(e, at_line);
  CHECK(gg.edge_subgroup_membership(0, point_slot, at_point) == SlotCoordinates{5, 8});
  CHECK(gg.transport(conjugate_of(e), at_point) == at_line);
  CHECK_THROWS_AS(gg.transport(e, element(0, Word(vertex_generators(og.graph, l)[0]) * Word(Symbol::named("x")))),
                  std::exception);
}

TEST_CASE("Britton reduction") {
  OrderedIncidenceGraph og = test::ordered("triangle");
  GraphOfGroups gg(og, Convention::geometric);
  const VertexId root = gg.tree().root;

  SUBCASE("pinch") {
    const EdgeId e = og.order[root][0];
    const VertexId l = og.graph.terminal(e);
    VertexElement x = gg.slot_element(l, og.rank_of(conjugate_of(e)) + 1, {2, 1});
    GraphWord w{root, {e, conjugate_of(e)}, {element(0), x, element(0)}};
    GraphWord r = gg.reduce(w);
    CHECK(r.length() == w.length() - 2);
    CHECK(r.elements[0] == gg.transport(e, x));
    CHECK(gg.reduce(r) == r);
  }

  SUBCASE("not a pinch") {
    const EdgeId e = og.order[root][0];
    const VertexId l = og.graph.terminal(e);
    auto g = vertex_generators(og.graph, l);
    GraphWord w{root, {e, conjugate_of(e)}, {element(0), element(0, Word(g[1]) * Word(g[2])), element(0)}};
    CHECK(gg.reduce(w).length() == 2);
    CHECK_FALSE(gg.is_identity(w));
  }

  SUBCASE("identity") {
    CHECK(gg.is_identity(GraphWord{root}));
    CHECK_FALSE(gg.is_identity(GraphWord{root, {}, {element(1)}}));
  }

  SUBCASE("f(c) f(c)^-1") {
    std::size_t nontree = 0;
    while (gg.tree().in_tree[nontree]) ++nontree;
    GraphWord w = f_path(gg, root, fundamental_cycle(og.graph, gg.tree(), nontree), Variant::thm4);
    CHECK_FALSE(gg.is_identity(w));
    GraphWord r = gg.reduce(gg.concat(w, gg.inverse(w)));
    CHECK(r.length() == 0);
    CHECK(r.elements[0].is_trivial());
  }

  SUBCASE("malformed words") {
    GraphWord w{root, {og.order[root][0]}, {element(0)}};
    CHECK_THROWS_AS(gg.validate(w), MalformedWord);
    GraphWord broken{root, {og.order[root][0], og.order[root][0]}, {element(0), element(0), element(0)}};
    CHECK_THROWS_AS(gg.validate(broken), MalformedWord);
  }
}

TEST_CASE("reduction properties on random words") {
  OrderedIncidenceGraph og = test::ordered("generic-4");
  GraphOfGroups gg(og, Convention::geometric);
  const AbelianizationMap ab(boundary_presentation(og, Convention::geometric, gg.tree()));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    GraphWord w = random_closed_word(gg, gg.tree().root, i % 9, rng);
    GraphWord r = gg.reduce(w);
    CHECK(gg.reduce(r) == r);
    CHECK(r.length() <= w.length());
    CHECK(gg.is_identity(r) == gg.is_identity(w));
    CHECK(ab.image(gg.expand(r)) == ab.image(gg.expand(w)));
    if (r.length() >= 2) CHECK_FALSE(gg.is_identity(r));
    CHECK(gg.is_identity(gg.concat(w, gg.inverse(w))));
  }
}

TEST_CASE("g words") {
  OrderedIncidenceGraph og = test::ordered("pencil-3");
  auto gens = vertex_generators(og.graph, 0);
  const Word mu1(gens[1]), mu2(gens[2]), mu3(gens[3]);
  // Slopes 2, 1, 0 in order, so L1 is the second line at the point.
  CHECK(g_word(og, 1, 0, Variant::thm4) == mu1 * mu2 * mu1.inverse());
  CHECK(g_word(og, 1, 0, Variant::lemma32) == mu3.inverse() * mu2 * mu3);
  CHECK(g_word(og, 2, 0, Variant::thm4) == mu1);
  CHECK(g_word(og, 0, 0, Variant::lemma32) == mu3);
  CHECK_THROWS_AS(g_word(test::ordered("triangle"), 0, 1, Variant::thm4), IncidenceMismatch);
}

TEST_CASE("f map on edges") {
  OrderedIncidenceGraph og = test::ordered("generic-4");
  GraphOfGroups gg(og, Convention::geometric);
  const VertexId l = og.graph.line_vertex(0);
  REQUIRE(og.order[l].size() == 3);
  CHECK(f_edge_path(gg, og.order[l][0], Variant::thm4).length() == 1);
  CHECK(f_edge_path(gg, og.order[l][1], Variant::thm4).length() == 1);
  CHECK(f_edge_word(gg, og.order[l][1], Variant::thm4) == gg.edge_letter(og.order[l][1]));
  GraphWord third = f_edge_path(gg, og.order[l][2], Variant::thm4);
  CHECK(third.length() == 3);
  CHECK(third.edges.back() == og.order[l][2]);

  for (const char* name : {"generic-4", "near-pencil", "pencil-4"}) {
    OrderedIncidenceGraph g = test::ordered(name);
    GraphOfGroups gg2(g, Convention::geometric);
    for (Variant v : {Variant::thm4, Variant::lemma32})
      for (EdgeId e = 0; e < g.graph.edges().size(); ++e) {
        CHECK(f_edge_word(gg2, conjugate_of(e), v) == f_edge_word(gg2, e, v).inverse());
        CHECK(gg2.is_identity(gg2.concat(f_edge_path(gg2, e, v), f_edge_path(gg2, conjugate_of(e), v))));
      }
  }
}

TEST_CASE("f map keeps nontrivial cycles nontrivial") {
  for (const char* name : {"generic-4", "near-pencil"}) {
    OrderedIncidenceGraph og = test::ordered(name);
    GraphOfGroups gg(og, Convention::geometric);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
      auto c = random_nontrivial_cycle(og.graph, gg.tree(), gg.tree().root, 2 + i % 8, rng);
      CHECK_FALSE(c.empty());
      CHECK(reduce_path(c) == c);
      for (Variant v : {Variant::thm4, Variant::lemma32})
        CHECK_FALSE(gg.is_identity(f_path(gg, gg.tree().root, c, v)));
    }
  }
  OrderedIncidenceGraph tree = test::ordered("pencil-3");
  std::mt19937_64 rng(1);
  CHECK_THROWS(random_nontrivial_cycle(tree.graph, bfs_spanning_tree(tree.graph), 0, 4, rng));
}

TEST_CASE("reduce_path cancels backtracks") {
  CHECK(reduce_path({0, 2, 3, 1}).empty());
  CHECK(reduce_path({0, 3, 2, 5}) == std::vector<EdgeId>{0, 5});
}

TEST_CASE("parallel trials match the serial reference") {
  auto fn = [](std::size_t t, std::mt19937_64& rng) { return static_cast<std::uint64_t>(rng() ^ t); };
  CHECK(run_trials<std::uint64_t>(500, 99, ExecutionMode::serial, fn) ==
        run_trials<std::uint64_t>(500, 99, ExecutionMode::parallel, fn));

  CheckOptions serial, parallel;
  serial.mode = ExecutionMode::serial;
  parallel.mode = ExecutionMode::parallel;
  CHECK(check_bass_serre(serial).detail == check_bass_serre(parallel).detail);
  CHECK(check_fmap_injectivity(serial).detail == check_fmap_injectivity(parallel).detail);

  auto throwing = [](std::size_t t, std::mt19937_64&) -> int {
    if (t == 7) throw std::runtime_error("trial 7");
    return 0;
  };
  CHECK_THROWS_AS(run_trials<int>(20, 1, ExecutionMode::parallel, throwing), std::runtime_error);
}
