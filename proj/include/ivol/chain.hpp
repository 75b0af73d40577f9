#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ivol/integer.hpp"
#include "ivol/matrix.hpp"

namespace ivol {

// Sparse integer combination of the p-simplices (or p-cells) of a complex.
// Zero coefficients are never stored.
class IntegerChain {
 public:
  IntegerChain() = default;
  explicit IntegerChain(std::size_t degree) : degree_(degree) {}
  IntegerChain(std::size_t degree, std::map<std::size_t, Integer> coeffs);

  static IntegerChain from_dense(std::size_t degree, std::span<const Integer> values);

  std::size_t degree() const noexcept { return degree_; }
  const std::map<std::size_t, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Integer coefficient(std::size_t index) const;
  void add(std::size_t index, const Integer& value);
  std::vector<Integer> to_dense(std::size_t size) const;

  IntegerChain& operator+=(const IntegerChain& other);
  IntegerChain& operator-=(const IntegerChain& other);
  friend IntegerChain operator+(IntegerChain a, const IntegerChain& b) { return a += b; }
  friend IntegerChain operator-(IntegerChain a, const IntegerChain& b) { return a -= b; }
  friend IntegerChain operator*(const Integer& k, const IntegerChain& c);
  friend bool operator==(const IntegerChain&, const IntegerChain&) = default;

  std::string to_string() const;

 private:
  std::size_t degree_ = 0;
  std::map<std::size_t, Integer> coeffs_;
};

Integer l1_norm(const IntegerChain& c);
Integer l1_norm(std::span<const Integer> values);

// Graded free abelian groups Z^{n_0}, ..., Z^{n_d} with boundary maps
// d_p : Z^{n_p} -> Z^{n_{p-1}} stored as n_{p-1} x n_p matrices.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[p - 1] is d_p. Throws when shapes disagree or d d != 0.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

  std::size_t top_degree() const noexcept { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  std::size_t rank(std::size_t p) const { return p < ranks_.size() ? ranks_[p] : 0; }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

  // d_p for 1 <= p <= top_degree.
  const IntMatrix& boundary(std::size_t p) const;
  // d_p extended by zero maps outside 1..top_degree (n_{-1} = n_{d+1} = 0).
  IntMatrix boundary_or_zero(std::size_t p) const;

  IntegerChain apply_boundary(const IntegerChain& c) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
};

}  // namespace ivol
