#pragma once

#include <vector>

#include "ivol/matrix.hpp"

namespace ivol {

// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... >= 0.
// U_inverse is carried along so that the image lattice of A can be read off
// as the columns d_i * U_inverse[:, i].
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inverse;

  std::size_t rank() const;
  // Nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const;
};

// Pivot rule: the nonzero entry of least absolute value in the active
// submatrix, ties broken by lowest row then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace ivol
