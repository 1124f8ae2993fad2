#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "arrtool/errors.hpp"
#include "arrtool/isomorphism.hpp"
#include "arrtool/serialize.hpp"
#include "arrtool/wiring.hpp"
#include "support.hpp"

using namespace arrtool;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("3.5e2") == Rational(350));
  CHECK(Rational::parse("4/-6") == Rational(-2, 3));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK(Rational::parse("-007/014") == Rational(-1, 2));
  CHECK(Rational::parse("2/4").str() == Rational::parse("0.5").str());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("parse_arrangement") {
  Arrangement a = parse_arrangement("lines: [{a: 1, b: 0}, {a: -1, b: 0}]");
  REQUIRE(a.line_count() == 2);
  REQUIRE(a.point_count() == 1);
  CHECK(a.points()[0].x == Rational(0));
  CHECK(a.points()[0].y == Rational(0));

  CHECK_THROWS_AS(parse_arrangement("lines: [{a: 1, b: 0}, {a: 1, b: 0}]"), DuplicateLine);
  CHECK_THROWS_AS(parse_arrangement("lines: [{a: 1, b: 0}, {a: \"2/2\", b: \"0.0\"}]"), DuplicateLine);

  Arrangement single = parse_arrangement("lines: [{a: \"1/2\", b: \"-3\"}]");
  CHECK(single.line_count() == 1);
  CHECK(single.point_count() == 0);
  CHECK(single.classification() == Classification::all_parallel);

  CHECK_THROWS_AS(parse_arrangement("lines: [{vertical: true}]"), VerticalLineUnsupported);
  CHECK_THROWS_AS(parse_arrangement("lines: [{a: .inf, b: 0}]"), VerticalLineUnsupported);
  CHECK_THROWS_AS(parse_arrangement("lines: [{a: x1, b: 0}]"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("lines: []"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("[1, 2"), ParseError);
}

TEST_CASE("scaled representations normalize identically") {
  Arrangement a = test::lines({{"1", "0"}, {"-1", "1"}, {"0", "0"}});
  Arrangement b = test::lines({{"2/2", "0/5"}, {"-3/3", "1.0"}, {"0.000", "-0"}});
  CHECK(a.points() == b.points());
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("intersection points") {
  auto pencil = intersection_points(test::lines({{"1", "0"}, {"0", "0"}, {"-1", "0"}}).lines());
  REQUIRE(pencil.size() == 1);
  CHECK(pencil[0].incident_lines == std::vector<std::size_t>{0, 1, 2});

  auto tri = intersection_points(test::lines({{"0", "0"}, {"1", "0"}, {"-1", "1"}}).lines());
  REQUIRE(tri.size() == 3);
  CHECK((tri[0].x == Rational(0) && tri[0].y == Rational(0)));
  CHECK((tri[1].x == Rational(1, 2) && tri[1].y == Rational(1, 2)));
  CHECK((tri[2].x == Rational(1) && tri[2].y == Rational(0)));
  for (const auto& p : tri) CHECK(p.incident_lines.size() == 2);

  CHECK(intersection_points(test::lines({{"1", "0"}, {"1", "1"}}).lines()).empty());
}

TEST_CASE("classification") {
  CHECK(classify(test::lines({{"1", "0"}, {"1", "1"}})) == Classification::all_parallel);
  CHECK(classify(corpus_entry("triangle").arrangement) == Classification::connected_incidence);
  CHECK(classify(Arrangement{}) == Classification::empty);
  // Two disjoint stars only occur as raw graphs.
  IncidenceGraph g(2, 4);
  g.add_incidence(0, 0);
  g.add_incidence(0, 1);
  g.add_incidence(1, 2);
  g.add_incidence(1, 3);
  CHECK(classify_graph(g) == Classification::general);
  CHECK(component_count(g) == 2);
}

TEST_CASE("incidence graph shapes") {
  IncidenceGraph pen = build_incidence_graph(pencil(3));
  CHECK(pen.point_count() == 1);
  CHECK(pen.line_count() == 3);
  CHECK(pen.pair_count() == 3);
  CHECK(pen.degree(pen.point_vertex(0)) == 3);
  for (std::size_t l = 0; l < 3; ++l) CHECK(pen.degree(pen.line_vertex(l)) == 1);
  CHECK(betti1(pen) == 0);

  IncidenceGraph tri = build_incidence_graph(corpus_entry("triangle").arrangement);
  CHECK(tri.vertex_count() == 6);
  CHECK(tri.pair_count() == 6);
  for (VertexId v = 0; v < 6; ++v) CHECK(tri.degree(v) == 2);
  CHECK(is_connected(tri));
  CHECK(betti1(tri) == 1);

  IncidenceGraph g4 = build_incidence_graph(corpus_entry("generic-4").arrangement);
  CHECK(g4.vertex_count() == 10);
  CHECK(g4.pair_count() == 12);
  CHECK(betti1(g4) == 3);

  IncidenceGraph par = build_incidence_graph(parallel_lines(2));
  CHECK(par.vertex_count() == 2);
  CHECK(par.pair_count() == 0);
  CHECK(component_count(par) == 2);
}

TEST_CASE("edges come in conjugate pairs") {
  IncidenceGraph g = build_incidence_graph(corpus_entry("near-pencil").arrangement);
  for (EdgeId e = 0; e < g.edges().size(); ++e) {
    const Edge& x = g.edge(e);
    CHECK(x.conjugate == conjugate_of(e));
    CHECK(g.initial(conjugate_of(e)) == x.to);
    CHECK(g.terminal(conjugate_of(e)) == x.from);
    CHECK(g.kind(x.from) != g.kind(x.to));
  }
}

TEST_CASE("edge orders") {
  // Pencil y = x, y = 0, y = -x: decreasing slope at the point.
  OrderedIncidenceGraph p = build_ordered_graph(test::lines({{"1", "0"}, {"0", "0"}, {"-1", "0"}}));
  std::vector<std::size_t> at_point;
  for (EdgeId e : p.order[0]) at_point.push_back(p.graph.index_of(p.graph.terminal(e)));
  CHECK(at_point == std::vector<std::size_t>{0, 1, 2});

  // Triangle, line y = 0 through (0,0) = P0 and (1,0) = P2: decreasing x.
  OrderedIncidenceGraph t = test::ordered("triangle");
  std::vector<std::size_t> at_line;
  for (EdgeId e : t.order[t.graph.line_vertex(0)]) at_line.push_back(t.graph.index_of(t.graph.terminal(e)));
  CHECK(at_line == std::vector<std::size_t>{2, 0});
  for (std::size_t i = 0; i < t.order[3].size(); ++i) CHECK(t.rank_of(t.order[3][i]) == i);

  OrderedIncidenceGraph single = build_ordered_graph(test::lines({{"3", "1"}}));
  REQUIRE(single.order.size() == 1);
  CHECK(single.order[0].empty());
}

TEST_CASE("betti1 via Euler characteristic on random arrangements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<std::string, std::string>> ab;
    for (int i = 0; i < 5; ++i) {
      auto line = std::make_pair(std::to_string(coef(rng)), std::to_string(coef(rng)));
      if (std::find(ab.begin(), ab.end(), line) == ab.end()) ab.push_back(line);
    }
    Arrangement a = test::lines(ab);
    IncidenceGraph g = build_incidence_graph(a);
    std::size_t sum = 0;
    for (const Point& p : a.points()) sum += p.incident_lines.size();
    CHECK(g.pair_count() == sum);
    CHECK(betti1(g) + g.vertex_count() == g.pair_count() + component_count(g));
    CHECK(build_wiring_diagram(a).betti1() == betti1(g));
    CHECK(build_wiring_diagram(a).component_count() == component_count(g));
  }
}

TEST_CASE("isomorphism") {
  IncidenceGraph tri = build_incidence_graph(corpus_entry("triangle").arrangement);
  IncidenceGraph relabeled = relabel(tri, {2, 0, 1}, {1, 2, 0});
  auto iso = are_isomorphic(tri, relabeled);
  REQUIRE(iso);
  CHECK(verify_isomorphism(tri, relabeled, *iso));

  CHECK_FALSE(are_isomorphic(tri, build_incidence_graph(pencil(3))));
  CHECK_FALSE(are_isomorphic(build_incidence_graph(corpus_entry("generic-4").arrangement),
                             build_incidence_graph(corpus_entry("near-pencil").arrangement)));

  // A broken map is rejected.
  Isomorphism bad = *iso;
  std::swap(bad.vertex_map[0], bad.vertex_map[3]);
  CHECK_FALSE(verify_isomorphism(tri, relabeled, bad));
}

TEST_CASE("ordered isomorphism survives relabeling") {
  OrderedIncidenceGraph g = test::ordered("near-pencil");
  OrderedIncidenceGraph h = relabel(g, {3, 1, 0, 2}, {2, 3, 1, 0});
  CHECK(are_isomorphic(g, h, true));
  CHECK(are_isomorphic(g, h, false));
}

TEST_CASE("canonical form is label independent") {
  IncidenceGraph g = build_incidence_graph(corpus_entry("generic-4").arrangement);
  std::vector<std::string> labels(g.vertex_count(), "");
  const std::string cert = canonical_form(g, labels).certificate;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::size_t> pp(g.point_count()), lp(g.line_count());
    std::iota(pp.begin(), pp.end(), 0);
    std::iota(lp.begin(), lp.end(), 0);
    std::shuffle(pp.begin(), pp.end(), rng);
    std::shuffle(lp.begin(), lp.end(), rng);
    CHECK(canonical_form(relabel(g, pp, lp), labels).certificate == cert);
  }
  IncidenceGraph other = build_incidence_graph(corpus_entry("near-pencil").arrangement);
  CHECK(canonical_form(other, std::vector<std::string>(other.vertex_count())).certificate != cert);
}

TEST_CASE("wiring diagrams") {
  WiringDiagram tri = build_wiring_diagram(corpus_entry("triangle").arrangement);
  CHECK(tri.vertices.size() == 3);
  CHECK(tri.segments.size() == 3);
  CHECK(tri.betti1() == 1);
  for (const auto& v : tri.vertices) CHECK(v.point.has_value());

  WiringDiagram two = build_wiring_diagram(corpus_entry("two-generic").arrangement);
  CHECK(two.vertices.size() == 1);
  CHECK(two.segments.empty());

  WiringDiagram pen = build_wiring_diagram(pencil(3));
  CHECK(pen.vertices.size() == 1);
  CHECK(pen.segments.empty());

  WiringDiagram par = build_wiring_diagram(parallel_lines(3));
  CHECK(par.vertices.size() == 3);
  CHECK(par.component_count() == 3);

  const Arrangement& a = corpus_entry("generic-4").arrangement;
  WiringDiagram reversed = build_wiring_diagram(a, std::vector<std::size_t>{5, 4, 3, 2, 1, 0});
  CHECK(reversed.betti1() == 3);
  CHECK_THROWS_AS(build_wiring_diagram(a, std::vector<std::size_t>{0, 0, 1, 2, 3, 4}), AmbiguousOrder);
  CHECK_THROWS_AS(build_wiring_diagram(a, std::vector<std::size_t>{0, 1}), AmbiguousOrder);

  WiringDiagram raw = build_wiring_diagram(a, std::nullopt, false);
  CHECK(raw.betti1() == 3);
  CHECK(raw.vertices.size() > build_wiring_diagram(a).vertices.size());
}

TEST_CASE("DOT export") {
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
    return n;
  };
  std::string pen = export_dot(build_incidence_graph(pencil(3)));
  CHECK(count(pen, "shape=") == 4);
  CHECK(count(pen, " -- ") == 3);
  CHECK(count(pen, "shape=box") == 1);
  std::string tri = export_dot(test::ordered("triangle"));
  CHECK(count(tri, "shape=") == 6);
  CHECK(count(tri, " -- ") == 6);
  std::string par = export_dot(build_incidence_graph(parallel_lines(2)));
  CHECK(count(par, "shape=") == 2);
  CHECK(count(par, " -- ") == 0);
}

TEST_CASE("ordered graph serialization round trip") {
  for (const auto& entry : builtin_corpus()) {
    OrderedIncidenceGraph g = build_ordered_graph(entry.arrangement);
    OrderedIncidenceGraph back = ordered_graph_from_json(Json::parse(to_json(g).dump()));
    CHECK(back.graph == g.graph);
    CHECK(back.order == g.order);
  }
  Json bad = to_json(test::ordered("triangle"));
  bad["pairs"][0]["line"] = 9;
  CHECK_THROWS_AS(ordered_graph_from_json(bad), ParseError);
}

TEST_CASE("split_components") {
  IncidenceGraph g(2, 4);
  g.add_incidence(0, 0);
  g.add_incidence(0, 1);
  g.add_incidence(1, 2);
  g.add_incidence(1, 3);
  auto parts = split_components(order_as_inserted(g));
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) {
    CHECK(p.graph.point_count() == 1);
    CHECK(p.graph.line_count() == 2);
    CHECK(is_connected(p.graph));
  }
}
