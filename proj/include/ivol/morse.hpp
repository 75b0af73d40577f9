#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/complex.hpp"
#include "ivol/integer.hpp"

namespace ivol {

// (face, coface) pairs; the face is a facet of the coface.
using Matching = std::vector<std::pair<SimplexId, SimplexId>>;

struct GradientReport {
  bool valid = true;
  std::vector<std::string> problems;
};

// Every pair must join a cell to a coface in which it occurs as a facet
// exactly once, no cell may lie in two pairs, and the modified Hasse digraph
// (matched edges reversed) must be acyclic.
GradientReport validate_gradient(const DeltaComplex& k, const Matching& v);

class DiscreteGradient {
 public:
  // Throws invalid_gradient when validation fails.
  DiscreteGradient(const DeltaComplex& k, Matching pairs);

  const DeltaComplex& complex() const noexcept { return *complex_; }
  const Matching& pairs() const noexcept { return pairs_; }
  std::vector<std::vector<std::size_t>> critical_cells() const;
  std::vector<std::size_t> critical_counts() const;

  // Partner of a cell: the coface it is paired up with, if any.
  std::optional<SimplexId> up(SimplexId s) const;
  bool is_critical(SimplexId s) const;

 private:
  const DeltaComplex* complex_;
  Matching pairs_;
  std::map<SimplexId, SimplexId> up_;
  std::map<SimplexId, SimplexId> down_;
};

struct VPath {
  std::vector<SimplexId> cells;  // a_0, b_0, a_1, b_1, ..., a_r
  int sign = 1;
};

// All V-paths from the facets of the critical k-cell sigma to the critical
// (k-1)-cell tau. The first step carries the incidence of the facet
// occurrence; each pass a -> b -> a' through a matched pair multiplies by
// -<d b, a><d b, a'>.
std::vector<VPath> gradient_paths(const DiscreteGradient& v, std::size_t sigma, std::size_t tau,
                                  std::size_t k);

// Chain complex on critical points with signed flow counts, together with the
// unsigned counts that broken-trajectory counting uses.
struct MorseComplex {
  std::vector<std::vector<std::string>> critical;  // names per index
  std::vector<IntMatrix> signed_counts;            // [p-1]: nu_{p-1} x nu_p
  std::vector<IntMatrix> unsigned_counts;
  ChainComplex chains;

  std::size_t dimension() const { return critical.empty() ? 0 : critical.size() - 1; }
  std::vector<std::size_t> counts() const;
};

MorseComplex witten_complex(const DiscreteGradient& v);

struct FlowLine {
  std::string from;
  std::string to;
  int sign = 1;
  std::size_t count = 1;
};

struct FlowData {
  std::vector<std::vector<std::string>> critical;  // names per index
  std::vector<FlowLine> lines;
};

// Throws invalid_flow_data for unknown points, non-adjacent indices, signs
// other than +-1, or signed counts whose boundary maps do not compose to zero.
MorseComplex witten_complex(const FlowData& data);

// Sum over critical sequences x_n, ..., x_0 of the product of unsigned counts
// between consecutive points: 1^T N_1 ... N_n 1.
Integer count_broken(const MorseComplex& m, std::size_t n);

struct MorseInequality {
  std::size_t n = 0;
  Integer lhs;  // sum_{p<=n} (-1)^(p+n) nu_p
  Integer rhs;  // sum_{p<=n} (-1)^(p+n) b_p
  bool holds = false;
};

std::vector<MorseInequality> morse_inequalities(const std::vector<std::size_t>& nu,
                                                const std::vector<std::size_t>& betti);

// Greedy acyclic matching: cells in a seeded random order, each paired with
// its first admissible coface.
Matching random_gradient(const DeltaComplex& k, std::uint64_t seed);

}  // namespace ivol
