#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ivol/catalog.hpp"
#include "ivol/error.hpp"
#include "ivol/homology.hpp"
#include "ivol/morse.hpp"
#include "oracles.hpp"

using namespace ivol;

namespace {

DeltaComplex segment() { return DeltaComplex::build(2, {{{1, 0}}}); }

Matching circle_gradient(std::size_t k) {
  Matching m;
  for (std::size_t i = 0; i + 1 < k; ++i) m.push_back({{0, i + 1}, {1, i}});
  return m;
}

}  // namespace

TEST_CASE("gradient validation") {
  CHECK(validate_gradient(torus(2), {}).valid);
  const DeltaComplex s = segment();
  CHECK(validate_gradient(s, {{{0, 1}, {1, 0}}}).valid);
  CHECK_FALSE(validate_gradient(s, {{{0, 1}, {1, 0}}, {{0, 0}, {1, 0}}}).valid);
  // circle pairs closing up into a cycle
  Matching closed = circle_gradient(3);
  closed.push_back({{0, 0}, {1, 2}});
  CHECK_FALSE(validate_gradient(circle(3), closed).valid);
  // a face occurring twice in its coface cannot be paired
  CHECK_FALSE(validate_gradient(torus(2), {{{0, 0}, {1, 0}}}).valid);
  // not a facet
  CHECK_FALSE(validate_gradient(circle(4), {{{0, 3}, {1, 0}}}).valid);
  try {
    DiscreteGradient(s, {{{0, 1}, {1, 0}}, {{0, 0}, {1, 0}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_gradient);
  }
}

TEST_CASE("critical cells") {
  const DeltaComplex t = torus(2);
  CHECK(DiscreteGradient(t, {}).critical_counts() == std::vector<std::size_t>{1, 3, 2});
  const DeltaComplex s = segment();
  const DiscreteGradient g(s, {{{0, 1}, {1, 0}}});
  CHECK(g.critical_counts() == std::vector<std::size_t>{1, 0});
  CHECK(g.is_critical({0, 0}));
  CHECK(g.up({0, 1}) == SimplexId{1, 0});
  const DeltaComplex c = circle(6);
  CHECK(DiscreteGradient(c, circle_gradient(6)).critical_counts() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("V-paths on a polygon") {
  const DeltaComplex c = circle(5);
  const DiscreteGradient g(c, circle_gradient(5));
  const auto paths = gradient_paths(g, 4, 0, 1);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].sign + paths[1].sign == 0);
  const auto o = oracle::count_vpaths(c, g.pairs(), {1, 4}, {0, 0});
  CHECK(o.unsigned_count == 2);
  CHECK(o.signed_count == 0);
  CHECK_THROWS_AS(gradient_paths(DiscreteGradient(segment(), {{{0, 1}, {1, 0}}}), 0, 0, 1), Error);
}

TEST_CASE("V-paths agree with walk enumeration") {
  for (const std::string name : {"T2", "klein", "RP2", "L(3,1)", "T3", "annulus", "torus7"}) {
    const Space s = catalog_space(name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DiscreteGradient g(*s.complex, random_gradient(*s.complex, seed));
      const auto crit = g.critical_cells();
      for (std::size_t k = 1; k < crit.size(); ++k) {
        for (std::size_t sigma : crit[k]) {
          for (std::size_t tau : crit[k - 1]) {
            const auto paths = gradient_paths(g, sigma, tau, k);
            long sum = 0;
            for (const auto& p : paths) sum += p.sign;
            const auto o = oracle::count_vpaths(*s.complex, g.pairs(), {k, sigma}, {k - 1, tau});
            CHECK(static_cast<long>(paths.size()) == o.unsigned_count);
            CHECK(sum == o.signed_count);
          }
        }
      }
    }
  }
}

TEST_CASE("Witten complex of simple gradients") {
  const DeltaComplex c = circle(4);
  const MorseComplex m = witten_complex(DiscreteGradient(c, circle_gradient(4)));
  CHECK(m.counts() == std::vector<std::size_t>{1, 1});
  CHECK(m.signed_counts[0](0, 0) == 0);
  CHECK(m.unsigned_counts[0](0, 0) == 2);
  const auto h = homology_all(m.chains);
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
  CHECK(count_broken(m, 1) == 2);
  CHECK(count_broken(m, 0) == 1);
  try {
    count_broken(m, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degree_out_of_range);
  }

  const DeltaComplex s = segment();
  const MorseComplex ms = witten_complex(DiscreteGradient(s, {{{0, 1}, {1, 0}}}));
  CHECK(ms.counts() == std::vector<std::size_t>{1, 0});
  CHECK(homology(ms.chains, 0).betti == 1);
  CHECK(count_broken(ms, 1) == 0);
}

TEST_CASE("flow data") {
  FlowData d;
  d.critical = {{"m"}, {"a", "b"}, {"M"}};
  d.lines = {{"a", "m", 1, 1}, {"a", "m", -1, 1}, {"b", "m", 1, 1}, {"b", "m", -1, 1},
             {"M", "a", 1, 1}, {"M", "a", -1, 1}, {"M", "b", 1, 1}, {"M", "b", -1, 1}};
  const MorseComplex m = witten_complex(d);
  CHECK(count_broken(m, 2) == 8);
  CHECK(count_broken(m, 1) == 4);
  const auto h = homology_all(m.chains);
  CHECK(h[1].betti == 2);
  CHECK(h[2].betti == 1);

  FlowData bad;
  bad.critical = {{"m"}, {"a"}, {"M"}};
  bad.lines = {{"a", "m", 1, 1}, {"M", "a", 1, 1}};
  try {
    witten_complex(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_flow_data);
  }
  FlowData unknown;
  unknown.critical = {{"m"}, {"a"}};
  unknown.lines = {{"a", "zz", 1, 1}};
  CHECK_THROWS_AS(witten_complex(unknown), Error);
  FlowData skip;
  skip.critical = {{"m"}, {}, {"M"}};
  skip.lines = {{"M", "m", 1, 1}};
  CHECK_THROWS_AS(witten_complex(skip), Error);
  FlowData zero_sign;
  zero_sign.critical = {{"m"}, {"a"}};
  zero_sign.lines = {{"a", "m", 0, 1}};
  CHECK_THROWS_AS(witten_complex(zero_sign), Error);
}

TEST_CASE("Morse inequalities") {
  for (const auto& r : morse_inequalities({1, 2, 1}, {1, 2, 1})) {
    CHECK(r.holds);
    CHECK(r.lhs == r.rhs);
  }
  const auto bad = morse_inequalities({1, 0, 1}, {1, 2, 1});
  CHECK(bad[0].holds);
  CHECK_FALSE(bad[1].holds);
  for (const auto& r : morse_inequalities({1, 3, 2}, {1, 2, 1})) CHECK(r.holds);
}

TEST_CASE("random gradients preserve homology") {
  for (const std::string name : {"T2", "klein", "RP2", "L(3,1)", "S2", "circle:5"}) {
    const Space s = catalog_space(name);
    const auto expected = homology_all(s.chains);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matching m = random_gradient(*s.complex, seed);
      CHECK(validate_gradient(*s.complex, m).valid);
      CHECK(random_gradient(*s.complex, seed) == m);
      const MorseComplex w = witten_complex(DiscreteGradient(*s.complex, m));
      CHECK(homology_all(w.chains) == expected);
      std::vector<std::size_t> betti;
      for (const auto& h : expected) betti.push_back(h.betti);
      for (const auto& r : morse_inequalities(w.counts(), betti)) CHECK(r.holds);
    }
  }
}

TEST_CASE("catalog gradients") {
  const Space t = catalog_space("T2");
  REQUIRE(t.gradient.has_value());
  const MorseComplex m = witten_complex(DiscreteGradient(*t.complex, *t.gradient));
  CHECK(homology_all(m.chains) == homology_all(t.chains));
  CHECK(count_broken(m, 2) == 8);
}
