#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivol/catalog.hpp"
#include "ivol/error.hpp"
#include "ivol/norms.hpp"
#include "ivol/oriented.hpp"
#include "oracles.hpp"

using namespace ivol;

TEST_CASE("projection to the oriented complex") {
  OrientedChain a(1);
  a.add_simplex({0, 1}, 1);
  a.add_simplex({1, 0}, 1);
  CHECK(a.is_zero());

  OrientedChain b(2);
  b.add_simplex({0, 0, 1}, 4);
  CHECK(b.is_zero());

  OrientedChain c(2);
  c.add_simplex({2, 0, 1}, 3);
  CHECK(c.coeffs().at({0, 1, 2}) == 3);
  OrientedChain d(2);
  d.add_simplex({1, 0, 2}, 3);
  CHECK(d.coeffs().at({0, 1, 2}) == -3);
  CHECK(oriented_norm(d) == 3);
}

TEST_CASE("projection commutes with the boundary") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> vert(0, 4);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    TupleChain c(2);
    for (int i = 0; i < 5; ++i) c.add({vert(rng), vert(rng), vert(rng)}, coef(rng));
    CHECK(project_oriented(c.boundary()) == project_oriented(c).boundary());
  }
}

TEST_CASE("oriented norm equals the least lift") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    OrientedChain c(1);
    c.add_simplex({0, 1}, coef(rng));
    c.add_simplex({1, 2}, coef(rng));
    CHECK(oracle::min_lift(c, 3) == oriented_norm(c));
  }
  for (long v = -2; v <= 2; ++v) {
    OrientedChain c(2);
    c.add_simplex({0, 1, 2}, v);
    CHECK(oracle::min_lift(c, 3) == oriented_norm(c));
  }
}

TEST_CASE("class norms of examples") {
  const DeltaComplex c5 = circle(5);
  const auto r = minimize_norm_in_class(c5, c5.fundamental_cycle(), NormMode::integral);
  CHECK(r.value == 5);
  CHECK(r.certificate.certified);
  CHECK(lp_relaxation(c5, c5.fundamental_cycle(), NormMode::integral) == 5);

  const DeltaComplex t = torus(2);
  const auto rt = minimize_norm_in_class(t, t.fundamental_cycle(), NormMode::integral);
  CHECK(rt.value == 2);
  CHECK(oracle::box_minimum(t, t.fundamental_cycle(), false, 2) == 2);
  const Rational lp = lp_relaxation(t, t.fundamental_cycle(), NormMode::integral);
  CHECK(lp >= 0);
  CHECK(lp <= 2);

  // a boundary has norm zero
  const DeltaComplex s = standard_simplex(2);
  IntegerChain w(2, {{0, 1}});
  const IntegerChain z = s.boundary(w);
  const auto rz = minimize_norm_in_class(s, z, NormMode::integral);
  CHECK(rz.value == 0);
  CHECK(rz.representative.is_zero());
  CHECK(lp_relaxation(s, z, NormMode::integral) == 0);
}

TEST_CASE("witness lies in the class and attains the value") {
  for (const auto& nc : catalog_cycles()) {
    const Space s = catalog_space(nc.space);
    const DeltaComplex& k = *s.complex;
    const ChainComplex c = k.chain_complex();
    for (NormMode mode : {NormMode::integral, NormMode::oriented}) {
      if (mode == NormMode::oriented && !k.has_vertex_tuples()) continue;
      const NormResult r = minimize_norm_in_class(k, nc.cycle, mode);
      CHECK(r.certificate.certified);
      CHECK(homologous(c, r.representative, nc.cycle).homologous);
      CHECK(l1_norm(r.witness) == r.value);
      CHECK(r.value <= l1_norm(nc.cycle));
      CHECK(lp_relaxation(k, nc.cycle, mode) <= Rational(r.value));
      if (mode == NormMode::oriented) {
        CHECK(oriented_norm(project_oriented(k, r.representative)) == r.value);
        CHECK(project_oriented(k, r.witness) == project_oriented(k, r.representative));
      }
    }
  }
}

TEST_CASE("no higher cells means the input is optimal") {
  const DeltaComplex k = backtrack_circle();
  for (const auto& nc : catalog_cycles()) {
    if (nc.space != "backtrack") continue;
    const auto r = minimize_norm_in_class(k, nc.cycle, NormMode::integral);
    CHECK(r.value == l1_norm(nc.cycle));
    CHECK(minimize_norm_in_class(k, nc.cycle, NormMode::oriented).value == 3);
  }
}

TEST_CASE("chain complex entry point") {
  const ChainComplex c = lens_chain_complex(Integer(5));
  const IntegerChain z(1, {{0, 7}});
  const auto r = minimize_norm_in_class(c, z);
  CHECK(r.value == 2);  // 7 - 5
  CHECK(r.certificate.certified);
}

TEST_CASE("errors") {
  const DeltaComplex c = circle(3);
  const IntegerChain bad(1, {{0, 1}});
  try {
    minimize_norm_in_class(c, bad, NormMode::integral);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_cycle);
  }
  CHECK_THROWS_AS(minimize_norm_in_class(torus(2), torus(2).fundamental_cycle(), NormMode::oriented), Error);
}

TEST_CASE("node budget yields an uncertified incumbent") {
  // a lattice search that cannot close at the root
  const DeltaComplex k = projective_plane();
  const IntegerChain z(1, {{2, 3}});
  const auto r = minimize_norm_in_class(k, z, NormMode::integral, NormOptions{1});
  CHECK_FALSE(r.certificate.certified);
  CHECK(r.value <= 3);
  CHECK(Rational(r.value) >= r.certificate.lower_bound);
  CHECK(minimize_norm_in_class(k, z, NormMode::integral).value == 1);
}

TEST_CASE("comparison of norms on a cycle") {
  const DeltaComplex k = backtrack_circle();
  for (const auto& nc : catalog_cycles()) {
    if (nc.space != "backtrack") continue;
    const auto cmp = check_norm_comparison(k, nc.cycle);
    CHECK(cmp.oriented.value == 3);
    CHECK(cmp.integral.value == 5);
    CHECK(cmp.factor == 2);
    CHECK(cmp.holds());
  }
  const DeltaComplex t = torus7();
  const auto cmp = check_norm_comparison(t, t.fundamental_cycle());
  CHECK(cmp.oriented.value <= cmp.integral.value);
  CHECK(cmp.integral.value <= 6 * cmp.oriented.value);
  const auto zero = check_norm_comparison(t, IntegerChain(2));
  CHECK(zero.integral.value == 0);
  CHECK(zero.holds());
}
