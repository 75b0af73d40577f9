#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ivol/bounds.hpp"
#include "ivol/catalog.hpp"
#include "ivol/error.hpp"
#include "ivol/morse.hpp"
#include "ivol/norms.hpp"

using namespace ivol;

namespace {

std::vector<HomologyGroup> free_groups(const std::vector<std::size_t>& betti) {
  std::vector<HomologyGroup> out;
  for (std::size_t b : betti) out.push_back({b, {}});
  return out;
}

const LogBase e = LogBase::natural();

}  // namespace

TEST_CASE("log expressions: exact signs") {
  CHECK(LogExpr(0).sign(e) == 0);
  CHECK(LogExpr(Rational(-1, 3)).sign(e) == -1);
  CHECK(LogExpr::log(2).sign(e) == 1);
  // log 8 - 3 log 2 = 0
  CHECK((LogExpr::log(8) - LogExpr::log(2, 3)).sign(e) == 0);
  // log 6 - log 2 - log 3 = 0
  CHECK((LogExpr::log(6) - LogExpr::log(2) - LogExpr::log(3)).sign(e) == 0);
  // log 3 > 1 > log 2
  CHECK((LogExpr::log(3) - LogExpr(1)).sign(e) == 1);
  CHECK((LogExpr::log(2) - LogExpr(1)).sign(e) == -1);
  // base 2: log2(8) = 3 exactly, log2(3) is not rational
  CHECK((LogExpr::log(8) - LogExpr(3)).sign(LogBase::of(2)) == 0);
  CHECK((LogExpr::log(3) - LogExpr(Rational(3, 2))).sign(LogBase::of(2)) == 1);
  // 2^10 = 1024 > 1000: 10 log 2 - 3 log 10 is tiny but positive
  CHECK((LogExpr::log(2, 10) - LogExpr::log(10, 3)).sign(e) == 1);
  // 3^12 = 531441 < 2^19 = 524288? no: 531441 > 524288
  CHECK((LogExpr::log(3, 12) - LogExpr::log(2, 19)).sign(e) == 1);
  const auto [lo, hi] = LogExpr::log(5).enclosure(e);
  CHECK(lo <= std::log(5.0));
  CHECK(hi >= std::log(5.0));
  CHECK(LogExpr::log(5).to_string(e) == "ln(5)");
  CHECK(LogExpr::log(5).to_string(LogBase::of(2)) == "log2(5)");
}

TEST_CASE("size expressions") {
  CHECK(size_expr({2, {}}) == LogExpr(2));
  CHECK(size_expr({1, {Integer(5)}}).approx(e) == doctest::Approx(1 + std::log(5.0)));
  CHECK(size_expr({0, {Integer(2), Integer(4)}}).approx(e) == doctest::Approx(std::log(8.0)));
}

TEST_CASE("trajectory threshold") {
  CHECK(theorem1_constant(1) == 16);
  CHECK(theorem1_constant(3) == 1536);
  CHECK(theorem1_threshold(3, free_groups({1, 3, 3, 1})) == LogExpr(Rational(1, 192)));
  CHECK(theorem1_threshold(1, free_groups({1, 1})) == LogExpr(Rational(1, 8)));
  CHECK(theorem1_threshold(2, free_groups({0, 0, 0})).sign(e) == 0);
  // strictly decreasing in d for fixed homology
  const auto h = free_groups({1, 2, 1});
  auto h3 = h;
  h3.push_back({0, {}});
  CHECK((theorem1_threshold(2, h) - theorem1_threshold(3, h3)).sign(e) == 1);
}

TEST_CASE("trajectory bound verdicts") {
  CHECK(verify_theorem1(2, LogExpr(Rational(1, 8))).holds());
  CHECK(verify_theorem1(0, LogExpr(0)).holds());
  CHECK_FALSE(verify_theorem1(0, LogExpr(Rational(1, 10))).holds());
  const auto lens = theorem1_threshold(3, {{1, {}}, {0, {Integer(5)}}, {0, {}}, {1, {}}});
  CHECK(verify_theorem1(4, lens).holds());
}

TEST_CASE("rank and torsion bounds") {
  const auto t2 = verify_theorem3(2, 2, free_groups({1, 2, 1}));
  CHECK(t2.holds());
  bool tight = false;
  for (const auto& line : t2.lines) {
    if (line.name.rfind("rank H_1", 0) == 0) tight = (line.left == line.right);
  }
  CHECK(tight);
  CHECK_FALSE(verify_theorem3(1, 2, free_groups({1, 2, 1})).holds());
  for (long n = 2; n <= 12; ++n) {
    const std::vector<HomologyGroup> h{{1, {}}, {0, {Integer(n)}}, {0, {}}, {1, {}}};
    CHECK(verify_theorem3(static_cast<unsigned long>(n), 3, h).holds());
  }
  // |tors| = 5^7 exceeds 3^(C(3,2) * 1) = 27
  const std::vector<HomologyGroup> big{{1, {}}, {0, {Integer(78125)}}, {0, {}}};
  CHECK_FALSE(verify_theorem3(1, 2, big).holds());
  CHECK_FALSE(verify_theorem3(3, 2, big).holds());  // 5^7 > 3^9
  CHECK(verify_theorem3(4, 2, big).holds());  // 5^7 <= 3^12
  const auto flagged = verify_theorem3(2, 2, free_groups({1, 2, 1}), false);
  for (const auto& line : flagged.lines) CHECK_FALSE(line.certified);
}

TEST_CASE("binomial identity") {
  for (std::size_t d = 0; d <= 30; ++d) CHECK(binomial_identity_holds(d));
  Integer s = 0;
  for (unsigned long p = 0; p <= 3; ++p) s += binomial(4, p + 1);
  CHECK(s == 15);
}

TEST_CASE("inequality chain") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto r = chain_of_inequalities(d, 1);
    CHECK(r.holds());
    CHECK(r.lines.size() == 5);
  }
  const auto with_h = chain_of_inequalities(2, 2, Integer(2), free_groups({1, 2, 1}));
  CHECK(with_h.lines.size() == 6);
  CHECK(with_h.holds());
  CHECK(with_h.lines.front().relation == Relation::le);
  const auto zero = chain_of_inequalities(3, 0);
  CHECK(zero.holds());
  for (const auto& line : zero.lines) {
    CHECK(line.left.sign(e) == 0);
    CHECK(line.right.sign(e) == 0);
  }
  CHECK(chain_of_inequalities(2, 2, Integer(30)).holds() == false);
  CHECK_THROWS_AS(chain_of_inequalities(2, 1, std::nullopt, free_groups({1, 1})), Error);
}

TEST_CASE("comparisons in base 2") {
  const auto r = verify_theorem3(2, 2, free_groups({1, 2, 1}), true, LogBase::of(2));
  CHECK(r.holds());
  CHECK(compare("x", LogExpr::log(4), Relation::eq, LogExpr(2), LogBase::of(2)).holds);
  CHECK_FALSE(compare("x", LogExpr::log(4), Relation::eq, LogExpr(2), e).holds);
  CHECK(compare("x", LogExpr::log(4), Relation::ge, LogExpr(1), e).holds);
}

TEST_CASE("bounds hold on every closed oriented catalog space") {
  for (const std::string name : {"circle:5", "T2", "T3", "torus7", "S2", "L(2,1)", "L(3,1)", "L(6,1)", "torus:4"}) {
    const Space s = catalog_space(name);
    REQUIRE(s.closed_oriented);
    const DeltaComplex& k = *s.complex;
    const std::size_t d = k.dimension();
    const auto h = homology_all(s.chains);
    const NormResult n = minimize_norm_in_class(k, k.fundamental_cycle(), NormMode::integral);
    CHECK(n.certificate.certified);
    CHECK(verify_theorem3(n.value, d, h).holds());
    if (!s.aspherical.value_or(false)) continue;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const MorseComplex m = witten_complex(DiscreteGradient(k, random_gradient(k, seed)));
      CHECK(verify_theorem1(count_broken(m, d), theorem1_threshold(d, h)).holds());
    }
  }
}

TEST_CASE("the trajectory bound needs asphericity") {
  // a perfect gradient on the sphere has no index-1 cells, so nothing breaks
  const Space s = catalog_space("S2");
  CHECK(s.aspherical == false);
  const auto h = homology_all(s.chains);
  const MorseComplex m = witten_complex(DiscreteGradient(*s.complex, random_gradient(*s.complex, 0)));
  CHECK(m.counts() == std::vector<std::size_t>{1, 0, 1});
  CHECK_FALSE(verify_theorem1(count_broken(m, 2), theorem1_threshold(2, h)).holds());
}
