#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivol/catalog.hpp"
#include "ivol/complex.hpp"
#include "ivol/error.hpp"

using namespace ivol;

TEST_CASE("standard 2-simplex builds and has alternating boundary") {
  const DeltaComplex k = DeltaComplex::build(3, {{{1, 0}, {2, 0}, {2, 1}}, {{2, 1, 0}}});
  CHECK(k.dimension() == 2);
  const IntMatrix d2 = k.boundary_matrix(2);
  CHECK(d2(2, 0) == 1);
  CHECK(d2(1, 0) == -1);
  CHECK(d2(0, 0) == 1);
  CHECK((k.boundary_matrix(1) * d2).is_zero());
}

TEST_CASE("minimal torus boundary matrices compose to zero") {
  const DeltaComplex t = torus(2);
  CHECK(t.count(0) == 1);
  CHECK(t.count(1) == 3);
  CHECK(t.count(2) == 2);
  CHECK(t.boundary_matrix(1).is_zero());
  CHECK((t.boundary_matrix(1) * t.boundary_matrix(2)).is_zero());
}

TEST_CASE("dangling facet reference is rejected") {
  try {
    DeltaComplex::build(2, {{{1, 0}, {1, 5}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dangling_reference);
  }
}

TEST_CASE("inconsistent gluing is rejected") {
  // triangle whose edges do not share corners consistently
  CHECK_THROWS_AS(DeltaComplex::build(4, {{{1, 0}, {2, 0}, {3, 2}}, {{2, 1, 0}}}), Error);
}

TEST_CASE("boundary matrix degree range") {
  const DeltaComplex k = circle(3);
  try {
    k.boundary_matrix(0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degree_out_of_range);
  }
  CHECK_THROWS_AS(k.boundary_matrix(2), Error);
}

TEST_CASE("triangle circle incidence has zero column sums") {
  const IntMatrix d = circle(3).boundary_matrix(1);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) s += d(r, c);
    CHECK(s == 0);
  }
}

TEST_CASE("pseudomanifold checks") {
  CHECK(torus(2).validate_pseudomanifold().passes());
  const auto single = standard_simplex(2).validate_pseudomanifold();
  CHECK_FALSE(single.passes());
  CHECK_FALSE(single.facets_bounded_twice);
  const auto two = two_tori().validate_pseudomanifold();
  CHECK_FALSE(two.connected);
  CHECK(two.facets_bounded_twice);
  CHECK(two.components == 2);
}

TEST_CASE("fundamental cycles") {
  const IntegerChain t = torus(2).fundamental_cycle();
  CHECK(l1_norm(t) == 2);
  CHECK(t.coefficient(0) == -t.coefficient(1));
  CHECK(torus(2).boundary(t).is_zero());

  const IntegerChain c = circle(5).fundamental_cycle();
  CHECK(l1_norm(c) == 5);
  for (const auto& [i, v] : c.coeffs()) CHECK(v == 1);

  for (const auto& k : {torus(3), torus7(), lens_triangulation(4), sphere2()}) {
    const IntegerChain z = k.fundamental_cycle();
    CHECK(k.boundary(z).is_zero());
    CHECK(z.coeffs().size() == k.count(k.dimension()));
    for (const auto& [i, v] : z.coeffs()) CHECK(abs(v) == 1);
  }
}

TEST_CASE("non-orientable complexes have no fundamental cycle") {
  for (const auto& k : {klein_bottle(), projective_plane()}) {
    try {
      k.fundamental_cycle();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::non_orientable);
    }
  }
}

TEST_CASE("l1 norm basics") {
  CHECK(l1_norm(IntegerChain(1)) == 0);
  IntegerChain c(1);
  c.add(0, 3);
  c.add(1, -2);
  CHECK(l1_norm(c) == 5);
}

TEST_CASE("l1 norm is a norm on random chains") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<std::size_t> idx(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntegerChain a(1), b(1);
    for (int i = 0; i < 4; ++i) {
      a.add(idx(rng), coef(rng));
      b.add(idx(rng), coef(rng));
    }
    CHECK(l1_norm(a + b) <= l1_norm(a) + l1_norm(b));
    const Integer k = coef(rng);
    CHECK(l1_norm(k * a) == abs(k) * l1_norm(a));
    for (const auto& [i, v] : (a - a).coeffs()) CHECK(v != 0);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("tuple complexes close under faces") {
  const DeltaComplex k = DeltaComplex::from_tuples({{0, 1, 2}});
  CHECK(k.count(1) == 3);
  CHECK(k.has_vertex_tuples());
  CHECK(k.find_tuple({0, 2}).has_value());
  CHECK_FALSE(torus(2).has_vertex_tuples());
}

TEST_CASE("vertex tuples of a Delta-complex follow the facets") {
  const DeltaComplex k = projective_plane();
  CHECK(k.vertices(1, 2) == VertexTuple{0, 0});
  CHECK(k.vertices(2, 0) == VertexTuple{0, 0, 1});
}
