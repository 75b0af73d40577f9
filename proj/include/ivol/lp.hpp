#pragma once

#include <vector>

#include "ivol/integer.hpp"

namespace ivol {

// minimize c.x subject to A x = b, x >= 0, over exact rationals.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase tableau simplex with Bland's rule, so it never cycles and the
// returned vertex is a deterministic function of the input.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace ivol
