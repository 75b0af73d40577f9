#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivol/homology.hpp"
#include "ivol/integer.hpp"

namespace ivol {

// Exact real number r + sum_i b_i log(c_i) with rational r, b_i and integer
// c_i >= 2, the logarithm taken in a fixed base.
class LogExpr {
 public:
  LogExpr() = default;
  LogExpr(const Rational& r) : constant_(r) { constant_.canonicalize(); }  // NOLINT(implicit)
  LogExpr(const Integer& r) : constant_(r) {}   // NOLINT(implicit)
  LogExpr(long r) : constant_(r) {}             // NOLINT(implicit)

  static LogExpr log(const Integer& c, const Rational& coefficient = 1);

  const Rational& constant() const noexcept { return constant_; }
  const std::map<Integer, Rational>& logs() const noexcept { return logs_; }

  LogExpr& operator+=(const LogExpr& o);
  LogExpr& operator-=(const LogExpr& o);
  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
  friend LogExpr operator*(const Rational& k, const LogExpr& e);
  friend bool operator==(const LogExpr&, const LogExpr&) = default;

  // Exact sign. Zero is decided by integer arithmetic; otherwise outward
  // rounded MPFR intervals are refined until they exclude zero.
  int sign(const LogBase& base) const;
  // Enclosure [lo, hi] at the given precision in bits.
  std::pair<double, double> enclosure(const LogBase& base, unsigned long bits = 128) const;
  double approx(const LogBase& base) const;
  std::string to_string(const LogBase& base) const;

 private:
  Rational constant_;
  std::map<Integer, Rational> logs_;
};

// Sum of size(H_p) as an exact expression.
LogExpr size_expr(const HomologyGroup& h);

// 2^{d+1} (d+1) (d+1)!
Integer theorem1_constant(std::size_t d);

LogExpr theorem1_threshold(std::size_t d, const std::vector<HomologyGroup>& h);

enum class Relation { le, eq, ge };
const char* relation_symbol(Relation r);

struct Inequality {
  std::string name;
  LogExpr left;
  Relation relation = Relation::le;
  LogExpr right;
  bool holds = false;
  std::string left_source;
  std::string right_source;
  bool certified = true;  // false when a side is only a heuristic value
};

struct BoundReport {
  LogBase base;
  std::vector<Inequality> lines;
  bool holds() const;
};

Inequality compare(std::string name, LogExpr left, Relation rel, LogExpr right, const LogBase& base);

// broken >= threshold
BoundReport verify_theorem1(const Integer& broken, const LogExpr& threshold,
                            const LogBase& base = LogBase::natural());

// rank H_p <= N and log|tors H_p| <= log(d+1) C(d+1,p+1) N for every p. The
// torsion clause is decided as |tors| <= (d+1)^(C(d+1,p+1) N) in integers.
BoundReport verify_theorem3(const Integer& norm, std::size_t d, const std::vector<HomologyGroup>& h,
                            bool norm_certified = true, const LogBase& base = LogBase::natural());

// Sum_{p=0}^{d} C(d+1,p+1) = 2^{d+1} - 1 = (Sum_{p=0}^{d+1} C(d+1,p)) - 1
bool binomial_identity_holds(std::size_t d);

// The displayed chain from sum size(H_p) to 2^{d+1}(d+1)(d+1)! times the
// oriented norm. Without a class norm N the largest value (d+1)! times the
// oriented norm permitted by the norm comparison is used; without
// homology the first line is omitted.
BoundReport chain_of_inequalities(std::size_t d, const Integer& oriented_norm,
                                  const std::optional<Integer>& norm = std::nullopt,
                                  const std::optional<std::vector<HomologyGroup>>& h = std::nullopt,
                                  const LogBase& base = LogBase::natural());

}  // namespace ivol
