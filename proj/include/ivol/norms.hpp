#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/complex.hpp"
#include "ivol/integer.hpp"
#include "ivol/matrix.hpp"

namespace ivol {

enum class NormMode { integral, oriented };

const char* mode_name(NormMode mode);

struct NormOptions {
  std::size_t node_limit = 200000;
};

// Search record backing a norm value. When certified, lower_bound equals the
// value: the branch-and-bound tree was closed, every leaf pruned by an exact
// LP bound or evaluated.
struct SearchCertificate {
  bool certified = false;
  std::size_t nodes = 0;
  std::size_t pruned = 0;
  std::size_t max_depth = 0;
  std::size_t lattice_rank = 0;  // rank of the boundary lattice searched
  std::size_t node_limit = 0;
  Rational root_lp_bound;
  Rational lower_bound;
};

struct NormResult {
  NormMode mode = NormMode::integral;
  Integer value;
  // Cycle z + d w in the class of the input that attains the value.
  IntegerChain representative;
  // Integral mode: the representative. Oriented mode: one member simplex per
  // orbit of the projected representative; its l1 norm equals value.
  IntegerChain witness;
  SearchCertificate certificate;
};

// Exact minimum of |target + G y|_1 over integer vectors y, where the columns
// of `generators` may be dependent.
struct L1Solution {
  Integer value;
  std::vector<Integer> coefficients;  // y, length generators.cols()
  SearchCertificate certificate;
};

L1Solution minimize_l1_over_lattice(const std::vector<Integer>& target, const IntMatrix& generators,
                                    const NormOptions& options = {});
Rational l1_lp_relaxation(const std::vector<Integer>& target, const IntMatrix& generators);

// Minimum of |z + d w|_1 over integer (p+1)-chains w.
NormResult minimize_norm_in_class(const ChainComplex& c, const IntegerChain& z,
                                  const NormOptions& options = {});

// Oriented mode minimizes the oriented norm of the projection of z + d w and
// needs a complex whose simplices are distinct vertex tuples.
NormResult minimize_norm_in_class(const DeltaComplex& k, const IntegerChain& z, NormMode mode,
                                  const NormOptions& options = {});

// Rational lower bound: the same minimum over rational w.
Rational lp_relaxation(const ChainComplex& c, const IntegerChain& z);
Rational lp_relaxation(const DeltaComplex& k, const IntegerChain& z, NormMode mode);

struct NormComparison {
  std::size_t degree = 0;
  NormResult oriented;
  NormResult integral;
  Integer factor;  // (p + 1)!
  bool lower_holds = false;  // oriented <= integral
  bool upper_holds = false;  // integral <= (p+1)! * oriented
  bool certified() const { return oriented.certificate.certified && integral.certificate.certified; }
  bool holds() const { return lower_holds && upper_holds; }
};

NormComparison check_norm_comparison(const DeltaComplex& k, const IntegerChain& z,
                                     const NormOptions& options = {});

}  // namespace ivol
