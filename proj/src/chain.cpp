#include "ivol/chain.hpp"

#include <sstream>
#include <utility>

#include "ivol/error.hpp"

namespace ivol {

IntegerChain::IntegerChain(std::size_t degree, std::map<std::size_t, Integer> coeffs)
    : degree_(degree) {
  for (auto& [k, v] : coeffs) {
    if (v != 0) coeffs_.emplace(k, std::move(v));
  }
}

IntegerChain IntegerChain::from_dense(std::size_t degree, std::span<const Integer> values) {
  IntegerChain c(degree);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) c.coeffs_.emplace(i, values[i]);
  }
  return c;
}

Integer IntegerChain::coefficient(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void IntegerChain::add(std::size_t index, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = coeffs_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::vector<Integer> IntegerChain::to_dense(std::size_t size) const {
  std::vector<Integer> out(size);
  for (const auto& [k, v] : coeffs_) {
    if (k >= size) {
      throw Error(ErrorCode::invalid_input,
                  "chain index " + std::to_string(k) + " out of range " + std::to_string(size));
    }
    out[k] = v;
  }
  return out;
}

IntegerChain& IntegerChain::operator+=(const IntegerChain& other) {
  for (const auto& [k, v] : other.coeffs_) add(k, v);
  return *this;
}

IntegerChain& IntegerChain::operator-=(const IntegerChain& other) {
  for (const auto& [k, v] : other.coeffs_) add(k, -v);
  return *this;
}

IntegerChain operator*(const Integer& k, const IntegerChain& c) {
  IntegerChain out(c.degree());
  if (k == 0) return out;
  for (const auto& [i, v] : c.coeffs()) out.coeffs_.emplace(i, k * v);
  return out;
}

std::string IntegerChain::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    first = false;
    Integer a = abs(v);
    if (a != 1) os << a << '*';
    os << 's' << k;
  }
  return os.str();
}

Integer l1_norm(const IntegerChain& c) {
  Integer n = 0;
  for (const auto& [k, v] : c.coeffs()) n += abs(v);
  return n;
}

Integer l1_norm(std::span<const Integer> values) {
  Integer n = 0;
  for (const auto& v : values) n += abs(v);
  return n;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) throw Error(ErrorCode::invalid_input, "chain complex needs at least one rank");
  if (boundaries_.size() + 1 != ranks_.size()) {
    throw Error(ErrorCode::invalid_input, "chain complex: expected " +
                                              std::to_string(ranks_.size() - 1) + " boundary maps");
  }
  for (std::size_t p = 1; p < ranks_.size(); ++p) {
    const auto& d = boundaries_[p - 1];
    if (d.rows() != ranks_[p - 1] || d.cols() != ranks_[p]) {
      throw Error(ErrorCode::invalid_input,
                  "chain complex: boundary " + std::to_string(p) + " has wrong shape");
    }
  }
  for (std::size_t p = 2; p < ranks_.size(); ++p) {
    if (!(boundaries_[p - 2] * boundaries_[p - 1]).is_zero()) {
      throw Error(ErrorCode::malformed_gluing,
                  "chain complex: d_" + std::to_string(p - 1) + " d_" + std::to_string(p) + " != 0");
    }
  }
}

const IntMatrix& ChainComplex::boundary(std::size_t p) const {
  if (p == 0 || p > top_degree()) {
    throw Error(ErrorCode::degree_out_of_range, "no boundary map in degree " + std::to_string(p));
  }
  return boundaries_[p - 1];
}

IntMatrix ChainComplex::boundary_or_zero(std::size_t p) const {
  if (p == 0) return IntMatrix(0, rank(0));
  if (p > top_degree()) return IntMatrix(rank(p - 1), 0);
  return boundaries_[p - 1];
}

IntegerChain ChainComplex::apply_boundary(const IntegerChain& c) const {
  const std::size_t p = c.degree();
  if (p == 0) return IntegerChain(0);
  if (p > top_degree()) throw Error(ErrorCode::degree_out_of_range, "chain degree above complex");
  auto dense = c.to_dense(rank(p));
  auto image = boundary(p).apply(dense);
  return IntegerChain::from_dense(p - 1, image);
}

}  // namespace ivol
