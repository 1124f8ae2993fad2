#include <random>

#include "doctest.h"

#include "arrtool/errors.hpp"
#include "arrtool/graph_manifold.hpp"
#include "arrtool/presentation.hpp"
#include "support.hpp"

using namespace arrtool;

namespace {

GraphManifoldDescriptor descriptor(const std::string& name) { return build_descriptor(test::ordered(name)); }

std::size_t free_tori(const GraphManifoldDescriptor& d) {
  std::size_t n = 0;
  for (const auto& p : d.pieces) n += p.free_tori.size();
  return n;
}

}  // namespace

TEST_CASE("gluing matrices") {
  const Matrix2 a = gluing_matrix(GluingDirection::from_line_side);
  const Matrix2 b = gluing_matrix(GluingDirection::from_point_side);
  CHECK(a == Matrix2{{{{0, 1}, {1, 1}}}});
  CHECK(b == Matrix2{{{{-1, 1}, {1, 0}}}});
  CHECK(a.det() == -1);
  CHECK(a * b == Matrix2::identity());
  CHECK(b * a == Matrix2::identity());
}

TEST_CASE("descriptor of two generic lines") {
  GraphManifoldDescriptor d = descriptor("two-generic");
  REQUIRE(d.pieces.size() == 3);
  CHECK(d.pieces[0].kind == PieceKind::point);
  CHECK(d.pieces[0].hopf_components == 2);
  CHECK(d.pieces[0].free_tori.empty());
  for (std::size_t i : {1, 2}) {
    CHECK(d.pieces[i].kind == PieceKind::line);
    CHECK(d.pieces[i].hopf_components == 2);
    CHECK(d.pieces[i].free_tori.size() == 1);
  }
  CHECK(d.gluings.size() == 2);
  for (const auto& g : d.gluings) CHECK(g.matrix == gluing_matrix(GluingDirection::from_line_side));
  CHECK(d.haken);
  CHECK(d.seifert_pieces);
}

TEST_CASE("descriptor of a pencil of 3") {
  GraphManifoldDescriptor d = descriptor("pencil-3");
  REQUIRE(d.pieces.size() == 4);
  CHECK(d.pieces[0].hopf_components == 3);
  for (std::size_t i = 1; i < 4; ++i) CHECK(d.pieces[i].hopf_components == 2);
  CHECK(d.gluings.size() == 3);
  CHECK(free_tori(d) == 3);
}

TEST_CASE("descriptor of parallel lines") {
  GraphManifoldDescriptor d = build_descriptor(build_incidence_graph(parallel_lines(2)));
  REQUIRE(d.pieces.size() == 2);
  for (const auto& p : d.pieces) CHECK(p.hopf_components == 1);
  CHECK(d.gluings.empty());
  CHECK(validate_descriptor(d).empty());
}

TEST_CASE("torus labels name the opposing incidence first") {
  GraphManifoldDescriptor d = descriptor("two-generic");
  const Gluing& g = d.gluings[0];
  const FramedTorus& at_point = d.pieces[g.point_piece].boundary_tori[g.point_torus];
  const FramedTorus& at_line = d.pieces[g.line_piece].boundary_tori[g.line_torus];
  CHECK(at_point.label.rfind("T(L", 0) == 0);
  CHECK(at_line.label.rfind("T(P", 0) == 0);
  CHECK(d.pieces[1].free_tori[0].label == "infinity");
  CHECK_FALSE(d.pieces[1].free_tori[0].edge.has_value());
}

TEST_CASE("Mayer-Vietoris H1") {
  CHECK(h1_mayer_vietoris(build_descriptor(build_incidence_graph(parallel_lines(2)))) ==
        AbelianGroupDescription{2, {}});
  CHECK(h1_mayer_vietoris(descriptor("two-generic")) == AbelianGroupDescription{2, {}});
  CHECK(h1_mayer_vietoris(descriptor("pencil-3")) == AbelianGroupDescription{3, {}});
  CHECK(h1_mayer_vietoris(descriptor("triangle")) == AbelianGroupDescription{4, {}});
  CHECK(h1_mayer_vietoris(descriptor("generic-4")) == AbelianGroupDescription{7, {}});
}

TEST_CASE("Mayer-Vietoris agrees with the boundary presentation on random arrangements") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::pair<std::string, std::string>> ab;
    for (int i = 0; i < 5; ++i) {
      auto l = std::make_pair(std::to_string(coef(rng)), std::to_string(coef(rng)));
      if (std::find(ab.begin(), ab.end(), l) == ab.end()) ab.push_back(l);
    }
    OrderedIncidenceGraph og = build_ordered_graph(test::lines(ab));
    GraphManifoldDescriptor d = build_descriptor(og);
    CHECK(validate_descriptor(d).empty());
    AbelianGroupDescription mv = h1_mayer_vietoris(d);
    CHECK(mv.torsion.empty());
    CHECK(abelianize(boundary_presentation_forest(og, Convention::geometric)) == mv);
  }
}

TEST_CASE("validate_descriptor") {
  CHECK(validate_descriptor(descriptor("triangle")).empty());

  // Two point pieces glued to each other.
  GraphManifoldDescriptor pp;
  for (VertexId v : {0, 1}) {
    VertexPiece p;
    p.vertex = v;
    p.kind = PieceKind::point;
    p.hopf_components = 1;
    p.boundary_tori.push_back({v, "T", std::nullopt, "mu", "lambda"});
    pp.pieces.push_back(p);
  }
  pp.gluings.push_back({0, 0, 0, 1, 0, gluing_matrix(GluingDirection::from_line_side)});
  CHECK(validate_descriptor(pp).size() == 1);

  GraphManifoldDescriptor bad_det = descriptor("triangle");
  bad_det.gluings[2].matrix = Matrix2::identity();
  CHECK(validate_descriptor(bad_det).size() == 1);
}

TEST_CASE("a torus glued twice is inconsistent") {
  GraphManifoldDescriptor d = descriptor("two-generic");
  d.gluings.push_back(d.gluings[0]);
  CHECK_FALSE(validate_descriptor(d).empty());
  CHECK_THROWS_AS(h1_mayer_vietoris(d), InconsistentDescriptor);
}

TEST_CASE("descriptor canonical form") {
  IncidenceGraph g = build_incidence_graph(corpus_entry("near-pencil").arrangement);
  const std::string ref = descriptor_canonical_form(build_descriptor(g));
  CHECK(descriptor_canonical_form(build_descriptor(relabel(g, {1, 3, 0, 2}, {3, 2, 0, 1}))) == ref);
  CHECK(descriptor_canonical_form(descriptor("generic-4")) != ref);
  CHECK(descriptor_canonical_form(descriptor("triangle")) != descriptor_canonical_form(descriptor("pencil-3")));
}
