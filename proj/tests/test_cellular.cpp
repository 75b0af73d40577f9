#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivol/catalog.hpp"
#include "ivol/cellular.hpp"
#include "ivol/error.hpp"
#include "ivol/homology.hpp"
#include "ivol/norms.hpp"

using namespace ivol;

namespace {

// One triangle with vertices 0, 1, 2 and edges (0,1), (0,2), (1,2).
ColoredTriple triangle() {
  ColoredTriple t;
  t.sigma = DeltaComplex::from_tuples({{0, 1, 2}});
  t.cycle = IntegerChain(2, {{0, 1}});
  for (std::size_t v = 0; v < 3; ++v) t.vertex_images[v] = "x" + std::to_string(v);
  return t;
}

void label_all(ColoredTriple& t, const std::string& cell) {
  const DeltaComplex& k = t.sigma;
  for (std::size_t p = 0; p <= k.dimension(); ++p) {
    for (std::size_t i = 0; i < k.count(p); ++i) t.labels[{p, i}] = cell;
  }
}

CWPoset disk_poset() {
  return CWPoset({{"p", 0}, {"a", 1}, {"b", 1}, {"e", 2}}, {{"p", "a"}, {"p", "b"}, {"a", "e"}, {"b", "e"}});
}

// Sd of the two-triangle torus, labeled by carriers in the CW torus with one
// 0-cell v, 1-cells a, b and the 2-cell E that absorbs the diagonal.
struct TorusCells {
  ColoredTriple triple;
  CWPoset poset;
};

TorusCells subdivided_torus() {
  const DeltaComplex t = torus(2);
  const std::size_t diagonal = t.facet({2, 0}, 1);
  const Subdivision sd = barycentric_subdivision(t);
  auto cell_of = [&](SimplexId s) -> std::string {
    if (s.dim == 0) return "v";
    if (s.dim == 2 || s.index == diagonal) return "E";
    const std::size_t other = s.index;
    std::size_t first_nondiag = diagonal == 0 ? 1 : 0;
    return other == first_nondiag ? "a" : "b";
  };
  TorusCells out;
  out.triple.sigma = sd.complex;
  out.triple.cycle = sd.complex.fundamental_cycle();
  for (std::size_t p = 0; p <= sd.complex.dimension(); ++p) {
    for (std::size_t i = 0; i < sd.complex.count(p); ++i) out.triple.labels[{p, i}] = cell_of(sd.carrier[p][i]);
  }
  for (std::size_t v = 0; v < sd.complex.count(0); ++v) out.triple.vertex_images[v] = "q" + std::to_string(v);
  out.poset = CWPoset({{"v", 0}, {"a", 1}, {"b", 1}, {"E", 2}}, {{"v", "a"}, {"v", "b"}, {"a", "E"}, {"b", "E"}});
  return out;
}

}  // namespace

TEST_CASE("poset order") {
  const CWPoset p = disk_poset();
  CHECK(p.leq("p", "e"));
  CHECK(p.leq("a", "a"));
  CHECK_FALSE(p.leq("e", "p"));
  CHECK_FALSE(incomparable(p, "p", "e"));
  CHECK_FALSE(incomparable(p, "a", "a"));
  CHECK(incomparable(p, "a", "b"));
  try {
    incomparable(p, "a", "zz");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_cell);
  }
  CHECK_THROWS_AS(CWPoset({{"a", 1}, {"p", 0}}, {{"a", "p"}}), Error);
  CHECK_THROWS_AS(CWPoset({{"a", 1}}, {{"a", "q"}}), Error);
}

TEST_CASE("induced edge coloring") {
  ColoredTriple t = triangle();
  t.coloring = {{0, 1}, {1, 1}, {2, 2}};
  const auto e = induced_edge_coloring(t);
  CHECK(e.at(0) == 1);  // (0,1)
  CHECK_FALSE(e.contains(1));
  CHECK_FALSE(e.contains(2));
  t.coloring = {{0, 1}};
  CHECK(induced_edge_coloring(t).empty());
}

TEST_CASE("essential simplices") {
  ColoredTriple t = triangle();
  t.coloring = {{0, 1}, {2, 1}};
  CHECK(essential_simplices(t).repeated_color == std::vector<std::size_t>{0});
  CHECK(essential_count(t) == 0);

  t.coloring = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(essential_simplices(t).essential == std::vector<std::size_t>{0});
  CHECK(essential_count(t) == 1);

  t.coloring.clear();
  t.vertex_images[2] = "x0";
  CHECK(essential_count(t) == 1);  // loop not declared trivial
  t.nullhomotopic_edges = {1};     // edge (0,2)
  CHECK(essential_simplices(t).trivial_loop == std::vector<std::size_t>{0});
  CHECK(essential_count(t) == 0);
}

TEST_CASE("essential count on the torus") {
  const DeltaComplex k = torus(2);
  ColoredTriple t;
  t.sigma = k;
  t.cycle = k.fundamental_cycle();
  t.vertex_images[0] = "x";
  CHECK(essential_count(t) == 2);
  t.nullhomotopic_edges = {0};
  CHECK(essential_count(t) == 0);
  // distinct corners on the same vertex share its color
  t.nullhomotopic_edges.clear();
  t.coloring[0] = 1;
  CHECK(essential_count(t) == 0);
}

TEST_CASE("one color kills every simplex of positive dimension") {
  const DeltaComplex k = torus7();
  ColoredTriple t;
  t.sigma = k;
  t.cycle = k.fundamental_cycle();
  for (std::size_t v = 0; v < 7; ++v) t.vertex_images[v] = "x" + std::to_string(v);
  CHECK(essential_count(t) == 14);
  for (std::size_t v = 0; v < 7; ++v) t.coloring[v] = 0;
  CHECK(essential_count(t) == 0);
}

TEST_CASE("refining a coloring never increases the count") {
  const DeltaComplex k = torus7();
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> color(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    ColoredTriple t;
    t.sigma = k;
    t.cycle = k.fundamental_cycle();
    for (std::size_t v = 0; v < 7; ++v) t.vertex_images[v] = "x" + std::to_string(v);
    Integer previous = essential_count(t);
    CHECK(previous <= l1_norm(t.cycle));
    std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t v : order) {
      t.coloring[v] = color(rng);
      const Integer now = essential_count(t);
      CHECK(now <= previous);
      previous = now;
    }
  }
}

TEST_CASE("condition checks") {
  const CWPoset p = disk_poset();
  ColoredTriple t = triangle();
  label_all(t, "e");
  CHECK_THROWS_AS(check_conditions(triangle(), p), Error);

  // single cell: all pass
  CHECK(check_conditions(t, p).passes());

  // boundary entirely in p but the face in e
  label_all(t, "p");
  t.labels[{2, 0}] = "e";
  const auto internal = check_conditions(t, p);
  CHECK_FALSE(internal.internality);
  CHECK(internal.cellular);
  CHECK(internal.order);
  CHECK(internal.loop);

  // two incomparable 1-cells in one simplex
  t.labels[{0, 1}] = "a";
  t.labels[{0, 2}] = "b";
  t.labels[{1, 0}] = "a";
  t.labels[{1, 1}] = "b";
  t.labels[{1, 2}] = "e";
  const auto order = check_conditions(t, p);
  CHECK_FALSE(order.order);
  CHECK(order.internality);
  CHECK(order.cellular);

  // a label below its facet's label
  ColoredTriple c = triangle();
  label_all(c, "e");
  c.labels[{1, 1}] = "p";
  CHECK_FALSE(check_conditions(c, p).cellular);

  // unknown cell names fail the cellular condition
  ColoredTriple u = triangle();
  label_all(u, "nowhere");
  CHECK_FALSE(check_conditions(u, p).cellular);

  // two vertices sharing an image point need the edge on that 0-cell
  ColoredTriple l = triangle();
  label_all(l, "e");
  l.labels[{0, 0}] = "p";
  l.labels[{0, 1}] = "p";
  l.vertex_images[1] = "x0";
  CHECK_FALSE(check_conditions(l, p).loop);
  l.vertex_images[0] = "p";
  l.vertex_images[1] = "p";
  l.labels[{1, 0}] = "p";
  CHECK(check_conditions(l, p).loop);
}

TEST_CASE("essential cellular evaluation") {
  const CWPoset p = disk_poset();
  ColoredTriple t = triangle();
  label_all(t, "e");
  const auto one = essential_cellular_eval(t, p);
  REQUIRE(one.value.has_value());
  CHECK(*one.value == 0);  // every vertex has the color of e

  t.labels[{0, 0}] = "p";
  t.labels[{0, 1}] = "a";
  t.labels[{1, 0}] = "a";
  t.labels[{0, 2}] = "b";
  t.labels[{1, 1}] = "e";
  t.labels[{1, 2}] = "e";
  CHECK_FALSE(essential_cellular_eval(t, p).value.has_value());
}

TEST_CASE("subdivided torus with the CW structure") {
  TorusCells tc = subdivided_torus();
  const auto report = check_conditions(tc.triple, tc.poset);
  CHECK(report.passes());
  const auto eval = essential_cellular_eval(tc.triple, tc.poset);
  REQUIRE(eval.value.has_value());
  CHECK(*eval.value == 8);
  CHECK(*eval.value <= l1_norm(tc.triple.cycle));
  const auto norm = minimize_norm_in_class(tc.triple.sigma, tc.triple.cycle, NormMode::integral);
  CHECK(norm.value == 12);  // no 3-cells: the cycle is its own class
}

TEST_CASE("barycentric subdivision") {
  const Subdivision sd = barycentric_subdivision(torus(2));
  CHECK(sd.complex.count(0) == 6);
  CHECK(sd.complex.count(1) == 18);
  CHECK(sd.complex.count(2) == 12);
  CHECK(sd.complex.validate_pseudomanifold().passes());
  CHECK(homology_all(sd.complex.chain_complex()) == homology_all(torus(2).chain_complex()));
  const Subdivision s3 = barycentric_subdivision(standard_simplex(3));
  CHECK(s3.complex.count(3) == 24);
  CHECK(s3.complex.count(0) == 15);
  const Subdivision lens = barycentric_subdivision(lens_triangulation(3));
  CHECK(homology_all(lens.complex.chain_complex()) == homology_all(lens_triangulation(3).chain_complex()));
}
