#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivol/complex.hpp"
#include "ivol/integer.hpp"

namespace ivol {

// Sign of the permutation that sorts t, or 0 when t repeats a vertex (such a
// tuple is fixed by a transposition and dies in the oriented quotient).
int sort_sign(const VertexTuple& t);

// Integer combination of vertex tuples, the model for singular simplices
// given by their vertex sequences.
class TupleChain {
 public:
  TupleChain() = default;
  explicit TupleChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::map<VertexTuple, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(const VertexTuple& t, const Integer& value);
  TupleChain boundary() const;
  Integer norm() const;

  friend bool operator==(const TupleChain&, const TupleChain&) = default;

 private:
  std::size_t degree_ = 0;
  std::map<VertexTuple, Integer> coeffs_;
};

// Element of the oriented quotient: one coefficient per nondegenerate orbit,
// keyed by the orbit's increasing vertex sequence.
class OrientedChain {
 public:
  OrientedChain() = default;
  explicit OrientedChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::map<VertexTuple, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Adds value * [t] for an arbitrary tuple t (projected on the way in).
  void add_simplex(const VertexTuple& t, const Integer& value);
  OrientedChain boundary() const;

  friend bool operator==(const OrientedChain&, const OrientedChain&) = default;

 private:
  std::size_t degree_ = 0;
  std::map<VertexTuple, Integer> coeffs_;
};

OrientedChain project_oriented(const TupleChain& c);

// Requires K.has_vertex_tuples().
TupleChain to_tuple_chain(const DeltaComplex& k, const IntegerChain& c);
OrientedChain project_oriented(const DeltaComplex& k, const IntegerChain& c);

// Sum of absolute orbit coefficients. This is the least l1 norm of a lift:
// one representative per orbit attains it, and the lifted coefficients of an
// orbit must sign-sum to its coefficient.
Integer oriented_norm(const OrientedChain& c);

// Linear projection of the p-chains of K onto orbit coordinates.
struct OrbitProjection {
  std::vector<VertexTuple> orbits;             // increasing tuples, sorted
  IntMatrix matrix;                            // orbits.size() x K.count(p)
  std::vector<std::size_t> representative;     // lowest-index member simplex
  std::vector<int> representative_sign;        // sort_sign of that member
};

OrbitProjection orbit_projection(const DeltaComplex& k, std::size_t p);

}  // namespace ivol
