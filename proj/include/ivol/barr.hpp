#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ivol/integer.hpp"
#include "ivol/oriented.hpp"

namespace ivol {

// Nonempty vertex set of a base simplex, kept sorted.
using Face = std::vector<std::size_t>;

// Strictly increasing chain of faces F_0 < F_1 < ... < F_q. The realized
// q-simplex has vertex order (b_{F_q}, ..., b_{F_0}) where b_F is the
// barycenter of F; with this order the cone point comes first and the
// boundary of phi agrees with phi of the boundary.
using Flag = std::vector<Face>;

std::string to_string(const Face& f);
std::string to_string(const Flag& f);

// Integer combination of flag simplices. Distinct flags of faces of an
// affinely independent simplex realize distinct affine maps, so the map key is
// a normal form.
class FlagChain {
 public:
  FlagChain() = default;
  explicit FlagChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::map<Flag, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(const Flag& f, const Integer& value);
  FlagChain& operator+=(const FlagChain& other);
  FlagChain& operator-=(const FlagChain& other);
  friend FlagChain operator*(const Integer& k, const FlagChain& c);
  friend bool operator==(const FlagChain&, const FlagChain&) = default;

  // Deleting F_j is deleting vertex q - j of the realization: sign (-1)^(q-j).
  FlagChain boundary() const;
  Integer norm() const;

  // One term per line in the notation +[{1}<{0,1}].
  std::string to_string() const;

 private:
  std::size_t degree_ = 0;
  std::map<Flag, Integer> coeffs_;
};

// Appends F as new top element of every flag. Throws invalid_input if some
// flag is not strictly contained in F.
FlagChain cone_at_barycenter(const FlagChain& tau, const Face& f);

// phi on a literal vertex tuple: phi([v]) = [{v}], and for p >= 1
// phi(t) = cone over set(t) of sum_i (-1)^i phi(d_i t).
FlagChain phi_tuple(const VertexTuple& t);
FlagChain phi(const OrientedChain& c);

Integer phi_norm(const VertexTuple& t);

// Barycentric coordinates of the realized vertices with respect to the sorted
// vertex list `base`, one row per realized vertex in realization order.
std::vector<std::vector<Rational>> realize(const Flag& f, const VertexTuple& base);

struct ChainMapReport {
  std::size_t degree = 0;
  bool holds = false;
  FlagChain lhs;  // boundary of phi(sigma)
  FlagChain rhs;  // phi of the oriented boundary of sigma
  std::vector<Flag> mismatches;
};

// Checks d phi(sigma) = phi(d sigma) for the standard q-simplex; for q = 0 it
// compares augmentations.
ChainMapReport verify_chain_map(std::size_t q);

struct AlternationReport {
  VertexTuple permuted;
  int sign = 0;
  bool holds = false;
};

// Compares phi(g sigma) with sgn(g) phi(sigma) after realizing both sides as
// rational barycentric-coordinate matrices over the sorted vertices of sigma.
AlternationReport verify_alternation(const VertexTuple& sigma, const std::vector<std::size_t>& g);

// Vertex map b_F -> min F applied to a flag chain, then projected to the
// oriented complex. Composing with phi gives the identity on oriented chains.
OrientedChain collapse_to_vertices(const FlagChain& c);

}  // namespace ivol
