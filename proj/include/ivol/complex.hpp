#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/matrix.hpp"

namespace ivol {

struct SimplexId {
  std::size_t dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const SimplexId&, const SimplexId&) = default;
};

std::string to_string(const SimplexId& id);

using VertexTuple = std::vector<std::size_t>;

// facets[p - 1][j] lists the p + 1 facets of the j-th p-simplex, each an index
// into the (p - 1)-simplices. Entry i is the face opposite corner i.
using FacetTable = std::vector<std::vector<std::vector<std::size_t>>>;

struct PseudomanifoldReport {
  std::size_t dimension = 0;
  bool pure = true;
  bool facets_bounded_twice = true;
  bool connected = true;
  std::size_t components = 0;
  std::vector<SimplexId> uncovered;             // not a face of any top simplex
  std::vector<std::size_t> bad_facets;           // (d-1)-simplices with != 2 cofaces
  bool passes() const { return pure && facets_bounded_twice && connected; }
};

// Finite Delta-complex described by facet references. Identifications such as
// the one-vertex torus are expressible because faces are shared by reference.
class DeltaComplex {
 public:
  DeltaComplex() = default;

  // Validates references and the simplicial identities d_i d_j = d_{j-1} d_i
  // (i < j), then checks d d = 0 on the induced boundary matrices.
  static DeltaComplex build(std::size_t vertex_count, FacetTable facets);

  // Complex whose simplices are vertex tuples (repeats allowed), closed under
  // deleting entries. Listed tuples keep their order; generated faces follow
  // in lexicographic order.
  static DeltaComplex from_tuples(const std::vector<VertexTuple>& tuples);

  std::size_t dimension() const noexcept { return facets_.size(); }
  std::size_t count(std::size_t p) const;
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t total_cells() const;

  // Facets of the j-th p-simplex, p >= 1.
  std::span<const std::size_t> facets(std::size_t p, std::size_t j) const;
  std::size_t facet(SimplexId s, std::size_t i) const { return facets(s.dim, s.index)[i]; }

  // Corner vertices in order.
  const VertexTuple& vertices(std::size_t p, std::size_t j) const;
  const VertexTuple& vertices(SimplexId s) const { return vertices(s.dim, s.index); }

  // Face of s spanned by the given increasing corner positions.
  SimplexId subface(SimplexId s, std::span<const std::size_t> corners) const;

  // All faces of s (any dimension, including s), deduplicated.
  std::vector<SimplexId> faces_of(SimplexId s) const;

  // Signed incidence of the (p-1)-simplex `facet` in the p-simplex s.
  long incidence(SimplexId s, std::size_t facet) const;

  IntMatrix boundary_matrix(std::size_t p) const;
  ChainComplex chain_complex() const;
  IntegerChain boundary(const IntegerChain& c) const;

  // True when no two simplices of the same dimension share a vertex tuple,
  // i.e. every simplex is determined by its corner sequence.
  bool has_vertex_tuples() const;
  std::optional<std::size_t> find_tuple(const VertexTuple& t) const;

  PseudomanifoldReport validate_pseudomanifold() const;

  // Cycle with coefficient +-1 on every top simplex obtained by breadth-first
  // orientation propagation from top simplex 0 (coefficient +1).
  IntegerChain fundamental_cycle() const;

  // Throws unless every index in c is a valid p-simplex.
  void check_chain(const IntegerChain& c) const;

 private:
  std::size_t vertex_count_ = 0;
  FacetTable facets_;
  std::vector<std::vector<VertexTuple>> tuples_;
};

}  // namespace ivol
