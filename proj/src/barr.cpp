#include "ivol/barr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ivol/error.hpp"

namespace ivol {

std::string to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

std::string to_string(const Flag& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += "<";
    s += to_string(f[i]);
  }
  return s + "]";
}

void FlagChain::add(const Flag& f, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(f, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

FlagChain& FlagChain::operator+=(const FlagChain& other) {
  for (const auto& [f, v] : other.coeffs_) add(f, v);
  return *this;
}

FlagChain& FlagChain::operator-=(const FlagChain& other) {
  for (const auto& [f, v] : other.coeffs_) add(f, -v);
  return *this;
}

FlagChain operator*(const Integer& k, const FlagChain& c) {
  FlagChain r(c.degree_);
  for (const auto& [f, v] : c.coeffs_) r.add(f, k * v);
  return r;
}

FlagChain FlagChain::boundary() const {
  if (degree_ == 0) throw Error(ErrorCode::degree_out_of_range, "boundary of a 0-chain");
  FlagChain r(degree_ - 1);
  for (const auto& [f, v] : coeffs_) {
    const std::size_t q = f.size() - 1;
    for (std::size_t j = 0; j <= q; ++j) {
      Flag g;
      g.reserve(q);
      for (std::size_t i = 0; i <= q; ++i) {
        if (i != j) g.push_back(f[i]);
      }
      r.add(g, ((q - j) % 2 == 0) ? v : Integer(-v));
    }
  }
  return r;
}

Integer FlagChain::norm() const {
  Integer n = 0;
  for (const auto& [f, v] : coeffs_) n += abs(v);
  return n;
}

std::string FlagChain::to_string() const {
  std::ostringstream out;
  for (const auto& [f, v] : coeffs_) {
    out << (v > 0 ? "+" : "-");
    if (abs(v) != 1) out << Integer(abs(v)).get_str();
    out << ivol::to_string(f) << "\n";
  }
  return out.str();
}

namespace {

bool strict_subset(const Face& a, const Face& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face as_face(const VertexTuple& t) {
  Face f(t.begin(), t.end());
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

FlagChain cone_at_barycenter(const FlagChain& tau, const Face& f) {
  FlagChain r(tau.degree() + 1);
  for (const auto& [flag, v] : tau.coeffs()) {
    if (!flag.empty() && !strict_subset(flag.back(), f)) {
      throw Error(ErrorCode::invalid_input, "cone face " + to_string(f) + " does not strictly contain " +
                                                to_string(flag.back()));
    }
    Flag g = flag;
    g.push_back(f);
    r.add(g, v);
  }
  return r;
}

FlagChain phi_tuple(const VertexTuple& t) {
  if (t.empty()) throw Error(ErrorCode::invalid_input, "empty vertex tuple");
  const std::size_t p = t.size() - 1;
  if (sort_sign(t) == 0) throw Error(ErrorCode::invalid_input, "degenerate simplex has no image under phi");
  if (p == 0) {
    FlagChain r(0);
    r.add(Flag{Face{t[0]}}, 1);
    return r;
  }
  FlagChain inner(p - 1);
  for (std::size_t i = 0; i <= p; ++i) {
    VertexTuple face;
    for (std::size_t k = 0; k <= p; ++k) {
      if (k != i) face.push_back(t[k]);
    }
    FlagChain term = phi_tuple(face);
    if (i % 2 == 0) {
      inner += term;
    } else {
      inner -= term;
    }
  }
  return cone_at_barycenter(inner, as_face(t));
}

FlagChain phi(const OrientedChain& c) {
  FlagChain r(c.degree());
  for (const auto& [t, v] : c.coeffs()) r += v * phi_tuple(t);
  return r;
}

Integer phi_norm(const VertexTuple& t) { return phi_tuple(t).norm(); }

std::vector<std::vector<Rational>> realize(const Flag& f, const VertexTuple& base) {
  std::vector<std::vector<Rational>> rows;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    std::vector<Rational> row(base.size());
    for (auto v : *it) {
      auto pos = std::find(base.begin(), base.end(), v);
      if (pos == base.end()) throw Error(ErrorCode::invalid_input, "flag leaves the base simplex");
      row[static_cast<std::size_t>(pos - base.begin())] = Rational(1, static_cast<long>(it->size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ChainMapReport verify_chain_map(std::size_t q) {
  ChainMapReport rep;
  rep.degree = q;
  VertexTuple sigma(q + 1);
  for (std::size_t i = 0; i <= q; ++i) sigma[i] = i;
  const FlagChain image = phi_tuple(sigma);
  if (q == 0) {
    // augmentation: sum of coefficients
    Integer total = 0;
    for (const auto& [f, v] : image.coeffs()) total += v;
    rep.lhs = image;
    rep.rhs = image;
    rep.holds = total == 1;
    return rep;
  }
  rep.lhs = image.boundary();
  OrientedChain s(q);
  s.add_simplex(sigma, 1);
  rep.rhs = phi(s.boundary());
  FlagChain diff = rep.lhs;
  diff -= rep.rhs;
  for (const auto& [f, v] : diff.coeffs()) rep.mismatches.push_back(f);
  rep.holds = diff.is_zero();
  return rep;
}

namespace {

using Realized = std::map<std::vector<std::vector<Rational>>, Integer>;

Realized realize_chain(const FlagChain& c, const VertexTuple& base) {
  Realized r;
  for (const auto& [f, v] : c.coeffs()) {
    auto& slot = r[realize(f, base)];
    slot += v;
    if (slot == 0) r.erase(realize(f, base));
  }
  return r;
}

}  // namespace

AlternationReport verify_alternation(const VertexTuple& sigma, const std::vector<std::size_t>& g) {
  const std::size_t n = sigma.size();
  if (g.size() != n) throw Error(ErrorCode::invalid_input, "permutation size differs from simplex size");
  std::vector<std::size_t> check = g;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (check[i] != i) throw Error(ErrorCode::invalid_input, "not a permutation");
  }
  AlternationReport rep;
  rep.permuted.resize(n);
  for (std::size_t i = 0; i < n; ++i) rep.permuted[i] = sigma[g[i]];
  rep.sign = sort_sign(VertexTuple(g.begin(), g.end()));

  VertexTuple base = as_face(sigma);
  const Realized lhs = realize_chain(phi_tuple(rep.permuted), base);
  const Realized rhs = realize_chain(Integer(rep.sign) * phi_tuple(sigma), base);
  rep.holds = lhs == rhs;
  return rep;
}

OrientedChain collapse_to_vertices(const FlagChain& c) {
  OrientedChain r(c.degree());
  for (const auto& [f, v] : c.coeffs()) {
    VertexTuple t;
    for (auto it = f.rbegin(); it != f.rend(); ++it) t.push_back(it->front());
    r.add_simplex(t, v);
  }
  return r;
}

}  // namespace ivol
