#include "ivol/oriented.hpp"

#include <algorithm>

#include "ivol/error.hpp"

namespace ivol {

int sort_sign(const VertexTuple& t) {
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) sign = -sign;
    }
  }
  return sign;
}

void TupleChain::add(const VertexTuple& t, const Integer& value) {
  if (value == 0) return;
  if (t.size() != degree_ + 1) throw Error(ErrorCode::invalid_input, "tuple length does not match degree");
  auto [it, inserted] = coeffs_.emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TupleChain TupleChain::boundary() const {
  if (degree_ == 0) return TupleChain(0);
  TupleChain out(degree_ - 1);
  for (const auto& [t, a] : coeffs_) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      VertexTuple face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add(face, i % 2 == 0 ? a : Integer(-a));
    }
  }
  return out;
}

Integer TupleChain::norm() const {
  Integer n = 0;
  for (const auto& [t, a] : coeffs_) n += abs(a);
  return n;
}

void OrientedChain::add_simplex(const VertexTuple& t, const Integer& value) {
  if (t.size() != degree_ + 1) throw Error(ErrorCode::invalid_input, "tuple length does not match degree");
  const int s = sort_sign(t);
  if (s == 0 || value == 0) return;
  VertexTuple key = t;
  std::sort(key.begin(), key.end());
  const Integer v = s * value;
  auto [it, inserted] = coeffs_.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

OrientedChain OrientedChain::boundary() const {
  if (degree_ == 0) return OrientedChain(0);
  OrientedChain out(degree_ - 1);
  for (const auto& [t, a] : coeffs_) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      VertexTuple face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      out.add_simplex(face, i % 2 == 0 ? a : Integer(-a));
    }
  }
  return out;
}

OrientedChain project_oriented(const TupleChain& c) {
  OrientedChain out(c.degree());
  for (const auto& [t, a] : c.coeffs()) out.add_simplex(t, a);
  return out;
}

TupleChain to_tuple_chain(const DeltaComplex& k, const IntegerChain& c) {
  if (!k.has_vertex_tuples()) {
    throw Error(ErrorCode::invalid_input,
                "oriented chains need a complex whose simplices are distinct vertex tuples");
  }
  k.check_chain(c);
  TupleChain out(c.degree());
  for (const auto& [j, a] : c.coeffs()) out.add(k.vertices(c.degree(), j), a);
  return out;
}

OrientedChain project_oriented(const DeltaComplex& k, const IntegerChain& c) {
  return project_oriented(to_tuple_chain(k, c));
}

Integer oriented_norm(const OrientedChain& c) {
  Integer n = 0;
  for (const auto& [t, a] : c.coeffs()) n += abs(a);
  return n;
}

OrbitProjection orbit_projection(const DeltaComplex& k, std::size_t p) {
  if (!k.has_vertex_tuples()) {
    throw Error(ErrorCode::invalid_input,
                "oriented mode needs a complex whose simplices are distinct vertex tuples");
  }
  std::map<VertexTuple, std::size_t> orbit_index;
  for (std::size_t j = 0; j < k.count(p); ++j) {
    VertexTuple key = k.vertices(p, j);
    if (sort_sign(key) == 0) continue;
    std::sort(key.begin(), key.end());
    orbit_index.emplace(key, 0);
  }
  OrbitProjection proj;
  for (auto& [key, idx] : orbit_index) {
    idx = proj.orbits.size();
    proj.orbits.push_back(key);
  }
  proj.matrix = IntMatrix(proj.orbits.size(), k.count(p));
  proj.representative.assign(proj.orbits.size(), 0);
  proj.representative_sign.assign(proj.orbits.size(), 0);
  for (std::size_t j = 0; j < k.count(p); ++j) {
    VertexTuple key = k.vertices(p, j);
    const int s = sort_sign(key);
    if (s == 0) continue;
    std::sort(key.begin(), key.end());
    const std::size_t o = orbit_index.at(key);
    proj.matrix(o, j) = s;
    if (proj.representative_sign[o] == 0) {
      proj.representative[o] = j;
      proj.representative_sign[o] = s;
    }
  }
  return proj;
}

}  // namespace ivol
