#include "ivol/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "ivol/error.hpp"

namespace ivol {

std::string to_string(const SimplexId& id) {
  return std::to_string(id.dim) + ":" + std::to_string(id.index);
}

namespace {

long face_sign(std::size_t i) { return (i % 2 == 0) ? 1 : -1; }

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

DeltaComplex DeltaComplex::build(std::size_t vertex_count, FacetTable facets) {
  if (vertex_count == 0) throw Error(ErrorCode::invalid_input, "complex needs at least one vertex");
  while (!facets.empty() && facets.back().empty()) facets.pop_back();

  DeltaComplex k;
  k.vertex_count_ = vertex_count;
  for (std::size_t p = 1; p <= facets.size(); ++p) {
    const std::size_t lower = p == 1 ? vertex_count : facets[p - 2].size();
    if (facets[p - 1].empty()) {
      throw Error(ErrorCode::invalid_input,
                  "dimension " + std::to_string(p) + " is empty below a nonempty dimension");
    }
    for (std::size_t j = 0; j < facets[p - 1].size(); ++j) {
      const auto& f = facets[p - 1][j];
      if (f.size() != p + 1) {
        throw Error(ErrorCode::invalid_input, "simplex " + std::to_string(p) + ":" + std::to_string(j) +
                                                  " must list " + std::to_string(p + 1) + " facets");
      }
      for (auto ref : f) {
        if (ref >= lower) {
          throw Error(ErrorCode::dangling_reference,
                      "simplex " + std::to_string(p) + ":" + std::to_string(j) + " references missing " +
                          std::to_string(p - 1) + "-simplex " + std::to_string(ref));
        }
      }
    }
  }
  k.facets_ = std::move(facets);

  for (std::size_t p = 2; p <= k.dimension(); ++p) {
    for (std::size_t s = 0; s < k.count(p); ++s) {
      const auto f = k.facets(p, s);
      for (std::size_t j = 1; j <= p; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (k.facets(p - 1, f[j])[i] != k.facets(p - 1, f[i])[j - 1]) {
            throw Error(ErrorCode::malformed_gluing,
                        "simplex " + std::to_string(p) + ":" + std::to_string(s) +
                            " violates the face identity d" + std::to_string(i) + " d" +
                            std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                            std::to_string(i));
          }
        }
      }
    }
  }

  for (std::size_t p = 2; p <= k.dimension(); ++p) {
    if (!(k.boundary_matrix(p - 1) * k.boundary_matrix(p)).is_zero()) {
      throw Error(ErrorCode::malformed_gluing, "boundary of boundary is nonzero in degree " +
                                                   std::to_string(p));
    }
  }

  k.tuples_.resize(k.dimension() + 1);
  for (std::size_t v = 0; v < vertex_count; ++v) k.tuples_[0].push_back({v});
  for (std::size_t p = 1; p <= k.dimension(); ++p) {
    for (std::size_t s = 0; s < k.count(p); ++s) {
      const auto f = k.facets(p, s);
      VertexTuple t = k.tuples_[p - 1][f[p]];
      t.push_back(k.tuples_[p - 1][f[0]].back());
      k.tuples_[p].push_back(std::move(t));
    }
  }
  return k;
}

DeltaComplex DeltaComplex::from_tuples(const std::vector<VertexTuple>& tuples) {
  if (tuples.empty()) throw Error(ErrorCode::invalid_input, "no tuples given");
  std::size_t top = 0;
  std::size_t max_vertex = 0;
  for (const auto& t : tuples) {
    if (t.empty()) throw Error(ErrorCode::invalid_input, "empty vertex tuple");
    top = std::max(top, t.size() - 1);
    max_vertex = std::max(max_vertex, *std::max_element(t.begin(), t.end()));
  }

  std::vector<std::vector<VertexTuple>> levels(top + 1);
  std::vector<std::map<VertexTuple, std::size_t>> index(top + 1);
  auto insert = [&](const VertexTuple& t) {
    const std::size_t p = t.size() - 1;
    if (index[p].emplace(t, levels[p].size()).second) levels[p].push_back(t);
  };
  for (std::size_t v = 0; v <= max_vertex; ++v) insert({v});
  for (const auto& t : tuples) insert(t);
  for (std::size_t p = top; p >= 1; --p) {
    std::set<VertexTuple> missing;
    for (const auto& t : levels[p]) {
      for (std::size_t i = 0; i <= p; ++i) {
        VertexTuple face = t;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!index[p - 1].count(face)) missing.insert(face);
      }
    }
    for (const auto& face : missing) insert(face);
  }

  FacetTable facets(top);
  for (std::size_t p = 1; p <= top; ++p) {
    for (const auto& t : levels[p]) {
      std::vector<std::size_t> f(p + 1);
      for (std::size_t i = 0; i <= p; ++i) {
        VertexTuple face = t;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        f[i] = index[p - 1].at(face);
      }
      facets[p - 1].push_back(std::move(f));
    }
  }
  return build(max_vertex + 1, std::move(facets));
}

std::size_t DeltaComplex::count(std::size_t p) const {
  if (p == 0) return vertex_count_;
  return p <= facets_.size() ? facets_[p - 1].size() : 0;
}

std::size_t DeltaComplex::total_cells() const {
  std::size_t n = 0;
  for (std::size_t p = 0; p <= dimension(); ++p) n += count(p);
  return n;
}

std::span<const std::size_t> DeltaComplex::facets(std::size_t p, std::size_t j) const {
  if (p == 0 || p > dimension() || j >= count(p)) {
    throw Error(ErrorCode::degree_out_of_range,
                "no simplex " + std::to_string(p) + ":" + std::to_string(j) + " with facets");
  }
  return facets_[p - 1][j];
}

const VertexTuple& DeltaComplex::vertices(std::size_t p, std::size_t j) const {
  if (p > dimension() || j >= count(p)) {
    throw Error(ErrorCode::degree_out_of_range,
                "no simplex " + std::to_string(p) + ":" + std::to_string(j));
  }
  return tuples_[p][j];
}

SimplexId DeltaComplex::subface(SimplexId s, std::span<const std::size_t> corners) const {
  std::vector<bool> keep(s.dim + 1, false);
  for (auto c : corners) {
    if (c > s.dim) throw Error(ErrorCode::invalid_input, "corner out of range");
    keep[c] = true;
  }
  for (std::size_t i = s.dim + 1; i-- > 0;) {
    if (keep[i]) continue;
    if (s.dim == 0) throw Error(ErrorCode::invalid_input, "empty face requested");
    s = SimplexId{s.dim - 1, facet(s, i)};
  }
  return s;
}

std::vector<SimplexId> DeltaComplex::faces_of(SimplexId s) const {
  std::set<SimplexId> out;
  const std::size_t n = s.dim + 1;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> corners;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) corners.push_back(i);
    out.insert(subface(s, corners));
  }
  return {out.begin(), out.end()};
}

long DeltaComplex::incidence(SimplexId s, std::size_t facet_index) const {
  long total = 0;
  const auto f = facets(s.dim, s.index);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == facet_index) total += face_sign(i);
  return total;
}

IntMatrix DeltaComplex::boundary_matrix(std::size_t p) const {
  if (p == 0 || p > dimension()) {
    throw Error(ErrorCode::degree_out_of_range,
                "boundary matrix degree " + std::to_string(p) + " outside 1.." +
                    std::to_string(dimension()));
  }
  IntMatrix d(count(p - 1), count(p));
  for (std::size_t j = 0; j < count(p); ++j) {
    const auto f = facets_[p - 1][j];
    for (std::size_t i = 0; i < f.size(); ++i) d(f[i], j) += face_sign(i);
  }
  return d;
}

ChainComplex DeltaComplex::chain_complex() const {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (std::size_t p = 0; p <= dimension(); ++p) ranks.push_back(count(p));
  for (std::size_t p = 1; p <= dimension(); ++p) boundaries.push_back(boundary_matrix(p));
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

IntegerChain DeltaComplex::boundary(const IntegerChain& c) const {
  check_chain(c);
  if (c.degree() == 0) return IntegerChain(0);
  IntegerChain out(c.degree() - 1);
  for (const auto& [j, a] : c.coeffs()) {
    const auto f = facets(c.degree(), j);
    for (std::size_t i = 0; i < f.size(); ++i) out.add(f[i], face_sign(i) * a);
  }
  return out;
}

bool DeltaComplex::has_vertex_tuples() const {
  for (const auto& level : tuples_) {
    std::set<VertexTuple> seen(level.begin(), level.end());
    if (seen.size() != level.size()) return false;
  }
  return true;
}

std::optional<std::size_t> DeltaComplex::find_tuple(const VertexTuple& t) const {
  if (t.empty() || t.size() - 1 > dimension()) return std::nullopt;
  const auto& level = tuples_[t.size() - 1];
  auto it = std::find(level.begin(), level.end(), t);
  if (it == level.end()) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

PseudomanifoldReport DeltaComplex::validate_pseudomanifold() const {
  PseudomanifoldReport r;
  const std::size_t d = dimension();
  r.dimension = d;

  std::set<SimplexId> covered;
  for (std::size_t j = 0; j < count(d); ++j) {
    for (const auto& f : faces_of({d, j})) covered.insert(f);
  }
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t j = 0; j < count(p); ++j) {
      if (!covered.count({p, j})) r.uncovered.push_back({p, j});
    }
  }
  r.pure = r.uncovered.empty();

  UnionFind uf(count(d));
  if (d >= 1) {
    std::vector<std::vector<std::size_t>> cofaces(count(d - 1));
    for (std::size_t j = 0; j < count(d); ++j) {
      for (auto f : facets(d, j)) cofaces[f].push_back(j);
    }
    for (std::size_t f = 0; f < cofaces.size(); ++f) {
      if (cofaces[f].size() != 2) r.bad_facets.push_back(f);
      for (std::size_t k = 1; k < cofaces[f].size(); ++k) uf.unite(cofaces[f][0], cofaces[f][k]);
    }
  }
  r.facets_bounded_twice = r.bad_facets.empty();

  std::set<std::size_t> roots;
  for (std::size_t j = 0; j < count(d); ++j) roots.insert(uf.find(j));
  r.components = roots.size();
  r.connected = r.components == 1;
  return r;
}

IntegerChain DeltaComplex::fundamental_cycle() const {
  const auto report = validate_pseudomanifold();
  if (!report.passes()) {
    throw Error(ErrorCode::invalid_input, "fundamental cycle requires a connected pseudomanifold");
  }
  const std::size_t d = dimension();
  if (d == 0) return IntegerChain(0, {{0, Integer(1)}});

  // occurrences[f] = the two (top simplex, position) pairs containing facet f
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences(count(d - 1));
  for (std::size_t j = 0; j < count(d); ++j) {
    const auto f = facets(d, j);
    for (std::size_t i = 0; i < f.size(); ++i) occurrences[f[i]].push_back({j, i});
  }

  std::vector<int> sign(count(d), 0);
  sign[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    const auto f = facets(d, s);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& occ = occurrences[f[i]];
      // the occurrence other than (s, i)
      const auto& other = (occ[0].first == s && occ[0].second == i) ? occ[1] : occ[0];
      const int required = -sign[s] * static_cast<int>(face_sign(i) * face_sign(other.second));
      if (sign[other.first] == 0) {
        sign[other.first] = required;
        queue.push_back(other.first);
      } else if (sign[other.first] != required) {
        throw Error(ErrorCode::non_orientable, "orientation propagation reached a contradiction at " +
                                                   std::to_string(d - 1) + "-simplex " +
                                                   std::to_string(f[i]));
      }
    }
  }

  IntegerChain z(d);
  for (std::size_t j = 0; j < count(d); ++j) z.add(j, sign[j]);
  if (!boundary(z).is_zero()) {
    throw Error(ErrorCode::non_orientable, "propagated orientation is not a cycle");
  }
  return z;
}

void DeltaComplex::check_chain(const IntegerChain& c) const {
  if (c.degree() > dimension()) {
    throw Error(ErrorCode::degree_out_of_range,
                "chain degree " + std::to_string(c.degree()) + " above complex dimension");
  }
  for (const auto& [j, a] : c.coeffs()) {
    if (j >= count(c.degree())) {
      throw Error(ErrorCode::invalid_input, "chain references missing " +
                                                std::to_string(c.degree()) + "-simplex " +
                                                std::to_string(j));
    }
  }
}

}  // namespace ivol
