#include "ivol/cellular.hpp"

#include <algorithm>
#include <functional>

#include "ivol/error.hpp"

namespace ivol {

CWPoset::CWPoset(std::map<std::string, std::size_t> cells,
                 const std::vector<std::pair<std::string, std::string>>& relations)
    : dims_(std::move(cells)), declared_(relations) {
  for (const auto& [a, b] : relations) {
    if (!contains(a)) throw Error(ErrorCode::unknown_cell, "unknown cell " + a);
    if (!contains(b)) throw Error(ErrorCode::unknown_cell, "unknown cell " + b);
    if (dims_[a] > dims_[b]) throw Error(ErrorCode::invalid_input, "relation " + a + " <= " + b + " lowers dimension");
  }
  for (const auto& [c, d] : dims_) order_.emplace(c, c);
  for (const auto& r : relations) order_.insert(r);
  // transitive closure
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : order_) {
      for (auto it = order_.lower_bound({b, std::string()}); it != order_.end() && it->first == b; ++it) {
        if (!order_.contains({a, it->second})) add.emplace_back(a, it->second);
      }
    }
    for (auto& r : add) grew |= order_.insert(std::move(r)).second;
  }
  for (const auto& [a, b] : order_) {
    if (a != b && order_.contains({b, a})) {
      throw Error(ErrorCode::invalid_input, "cells " + a + " and " + b + " are mutually below each other");
    }
  }
}

std::size_t CWPoset::dimension(const std::string& cell) const {
  auto it = dims_.find(cell);
  if (it == dims_.end()) throw Error(ErrorCode::unknown_cell, "unknown cell " + cell);
  return it->second;
}

bool CWPoset::leq(const std::string& a, const std::string& b) const {
  if (!contains(a)) throw Error(ErrorCode::unknown_cell, "unknown cell " + a);
  if (!contains(b)) throw Error(ErrorCode::unknown_cell, "unknown cell " + b);
  return order_.contains({a, b});
}

bool incomparable(const CWPoset& p, const std::string& a, const std::string& b) {
  return !p.leq(a, b) && !p.leq(b, a);
}

std::map<std::size_t, long> induced_edge_coloring(const ColoredTriple& t) {
  std::map<std::size_t, long> out;
  if (t.sigma.dimension() < 1) return out;
  for (std::size_t e = 0; e < t.sigma.count(1); ++e) {
    const auto& v = t.sigma.vertices(1, e);
    auto a = t.coloring.find(v[0]);
    auto b = t.coloring.find(v[1]);
    if (a != t.coloring.end() && b != t.coloring.end() && a->second == b->second) out[e] = a->second;
  }
  return out;
}

Essentiality essential_simplices(const ColoredTriple& t) {
  Essentiality out;
  const std::size_t d = t.sigma.dimension();
  for (std::size_t j = 0; j < t.sigma.count(d); ++j) {
    const auto& v = t.sigma.vertices(d, j);
    bool color = false;
    bool loop = false;
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        auto ca = t.coloring.find(v[a]);
        auto cb = t.coloring.find(v[b]);
        if (ca != t.coloring.end() && cb != t.coloring.end() && ca->second == cb->second) color = true;
        auto ia = t.vertex_images.find(v[a]);
        auto ib = t.vertex_images.find(v[b]);
        if (ia != t.vertex_images.end() && ib != t.vertex_images.end() && ia->second == ib->second) {
          const std::size_t corners[] = {a, b};
          const SimplexId edge = t.sigma.subface({d, j}, corners);
          if (t.nullhomotopic_edges.contains(edge.index)) loop = true;
        }
      }
    }
    if (color) {
      out.repeated_color.push_back(j);
    } else if (loop) {
      out.trivial_loop.push_back(j);
    } else {
      out.essential.push_back(j);
    }
  }
  return out;
}

Integer essential_count(const ColoredTriple& t) {
  Integer total = 0;
  for (auto j : essential_simplices(t).essential) total += abs(t.cycle.coefficient(j));
  return total;
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::cellular: return "cellular";
    case Condition::order: return "order";
    case Condition::internality: return "internality";
    case Condition::loop: return "loop";
  }
  return "?";
}

namespace {

const std::string& label_of(const ColoredTriple& t, SimplexId s) {
  auto it = t.labels.find(s);
  if (it == t.labels.end()) throw Error(ErrorCode::missing_label, "no cell label on " + to_string(s));
  return it->second;
}

}  // namespace

ConditionReport check_conditions(const ColoredTriple& t, const CWPoset& p) {
  ConditionReport rep;
  const DeltaComplex& k = t.sigma;
  auto fail = [&](Condition c, SimplexId s, std::string detail) {
    switch (c) {
      case Condition::cellular: rep.cellular = false; break;
      case Condition::order: rep.order = false; break;
      case Condition::internality: rep.internality = false; break;
      case Condition::loop: rep.loop = false; break;
    }
    rep.failures.push_back({c, s, std::move(detail)});
  };

  for (std::size_t d = 0; d <= k.dimension(); ++d) {
    for (std::size_t j = 0; j < k.count(d); ++j) label_of(t, {d, j});
  }

  for (std::size_t d = 0; d <= k.dimension(); ++d) {
    for (std::size_t j = 0; j < k.count(d); ++j) {
      const SimplexId s{d, j};
      const std::string& e = label_of(t, s);
      if (!p.contains(e)) {
        fail(Condition::cellular, s, "label " + e + " is not a cell");
        continue;
      }
      if (d == 0) continue;
      bool all_same = true;
      for (auto f : k.facets(d, j)) {
        const std::string& ef = label_of(t, {d - 1, f});
        if (ef != e) all_same = false;
        if (p.contains(ef) && !p.leq(ef, e)) {
          fail(Condition::cellular, s, "facet label " + ef + " is not below " + e);
        }
      }
      if (all_same) continue;
      // internality: all facets share one label that differs from e
      const std::string& first = label_of(t, {d - 1, k.facets(d, j)[0]});
      bool uniform = std::all_of(k.facets(d, j).begin(), k.facets(d, j).end(),
                                 [&](std::size_t f) { return label_of(t, {d - 1, f}) == first; });
      if (uniform) fail(Condition::internality, s, "boundary lies in " + first + " but face carries " + e);
    }
  }

  const std::size_t top = k.dimension();
  for (std::size_t j = 0; j < k.count(top); ++j) {
    std::set<std::string> seen;
    for (auto f : k.faces_of({top, j})) seen.insert(label_of(t, f));
    for (auto a = seen.begin(); a != seen.end(); ++a) {
      for (auto b = std::next(a); b != seen.end(); ++b) {
        if (p.contains(*a) && p.contains(*b) && incomparable(p, *a, *b)) {
          fail(Condition::order, {top, j}, "meets incomparable cells " + *a + " and " + *b);
        }
      }
    }
  }

  if (top >= 1) {
    for (std::size_t e = 0; e < k.count(1); ++e) {
      const auto& v = k.vertices(1, e);
      auto a = t.vertex_images.find(v[0]);
      auto b = t.vertex_images.find(v[1]);
      if (a == t.vertex_images.end() || b == t.vertex_images.end() || a->second != b->second) continue;
      const std::string& lab = label_of(t, {1, e});
      if (lab != a->second || !p.contains(lab) || p.dimension(lab) != 0) {
        fail(Condition::loop, {1, e}, "endpoints map to " + a->second + " but edge carries " + lab);
      }
    }
  }
  return rep;
}

CellularEvaluation essential_cellular_eval(const ColoredTriple& t, const CWPoset& p) {
  CellularEvaluation out;
  out.report = check_conditions(t, p);
  if (!out.report.passes()) return out;
  ColoredTriple colored = t;
  colored.coloring.clear();
  std::map<std::string, long> color_of;
  for (std::size_t v = 0; v < t.sigma.count(0); ++v) {
    const std::string& cell = label_of(t, {0, v});
    auto [it, inserted] = color_of.emplace(cell, static_cast<long>(color_of.size()));
    colored.coloring[v] = it->second;
  }
  out.value = essential_count(colored);
  return out;
}

namespace {

using Corners = std::vector<std::size_t>;

struct SdKey {
  SimplexId top;
  std::vector<Corners> nested;  // S_0 < ... < S_k, S_k all corners of top
  auto operator<=>(const SdKey&) const = default;
};

}  // namespace

Subdivision barycentric_subdivision(const DeltaComplex& k) {
  const std::size_t d = k.dimension();
  // Sd simplices by dimension, keyed canonically; each simplex's faces are
  // produced on demand so every level is closed under deletion.
  std::vector<std::map<SdKey, std::size_t>> index(d + 1);
  std::vector<std::vector<SdKey>> keys(d + 1);

  auto canonical = [&](SimplexId top, std::vector<Corners> nested) {
    // re-anchor so the last set is the full corner set of the carrier
    const Corners last = nested.back();
    if (last.size() != top.dim + 1) {
      SimplexId face = k.subface(top, last);
      for (auto& s : nested) {
        for (auto& c : s) c = static_cast<std::size_t>(std::find(last.begin(), last.end(), c) - last.begin());
      }
      top = face;
    }
    return SdKey{top, std::move(nested)};
  };

  std::function<std::size_t(const SdKey&)> intern = [&](const SdKey& key) -> std::size_t {
    const std::size_t q = key.nested.size() - 1;
    auto it = index[q].find(key);
    if (it != index[q].end()) return it->second;
    if (q > 0) {
      for (std::size_t j = 0; j <= q; ++j) {
        auto nested = key.nested;
        nested.erase(nested.begin() + static_cast<long>(j));
        intern(canonical(key.top, std::move(nested)));
      }
    }
    const std::size_t id = keys[q].size();
    index[q].emplace(key, id);
    keys[q].push_back(key);
    return id;
  };

  // maximal flags of every simplex, so lower-dimensional cells not on any top
  // simplex are still subdivided
  for (std::size_t p = d + 1; p-- > 0;) {
    for (std::size_t j = 0; j < k.count(p); ++j) {
      Corners perm(p + 1);
      for (std::size_t i = 0; i <= p; ++i) perm[i] = i;
      do {
        std::vector<Corners> nested;
        for (std::size_t len = 1; len <= p + 1; ++len) {
          Corners s(perm.begin(), perm.begin() + static_cast<long>(len));
          std::sort(s.begin(), s.end());
          nested.push_back(std::move(s));
        }
        intern(SdKey{{p, j}, std::move(nested)});
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  Subdivision out;
  out.carrier.resize(d + 1);
  FacetTable table(d);
  for (std::size_t q = 0; q <= d; ++q) {
    for (const auto& key : keys[q]) {
      out.carrier[q].push_back(key.top);
      if (q == 0) {
        out.vertex_cell.push_back(key.top);
        continue;
      }
      // realized vertex order (b_{S_q}, ..., b_{S_0}): corner i is S_{q-i}
      std::vector<std::size_t> facets(q + 1);
      for (std::size_t i = 0; i <= q; ++i) {
        auto nested = key.nested;
        nested.erase(nested.begin() + static_cast<long>(q - i));
        facets[i] = index[q - 1].at(canonical(key.top, std::move(nested)));
      }
      table[q - 1].push_back(std::move(facets));
    }
  }
  out.complex = DeltaComplex::build(keys[0].size(), std::move(table));
  return out;
}

}  // namespace ivol
