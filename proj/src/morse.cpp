#include "ivol/morse.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "ivol/error.hpp"

namespace ivol {

namespace {

bool valid_cell(const DeltaComplex& k, SimplexId s) {
  return s.dim <= k.dimension() && s.index < k.count(s.dim);
}

std::size_t occurrences(const DeltaComplex& k, SimplexId face, SimplexId coface) {
  if (coface.dim != face.dim + 1) return 0;
  const auto f = k.facets(coface.dim, coface.index);
  return static_cast<std::size_t>(std::count(f.begin(), f.end(), face.index));
}

// Successors in the modified Hasse digraph restricted to dimensions dim and
// dim + 1: facets of an unmatched (dim+1)-cell, the partner of a matched
// dim-cell.
class Digraph {
 public:
  Digraph(const DeltaComplex& k, const std::map<SimplexId, SimplexId>& up,
          const std::map<SimplexId, SimplexId>& down)
      : k_(k), up_(up), down_(down) {}

  std::vector<SimplexId> successors(SimplexId s) const {
    std::vector<SimplexId> out;
    if (auto it = up_.find(s); it != up_.end()) {
      out.push_back(it->second);
    }
    if (s.dim > 0) {
      auto matched = down_.find(s);
      for (auto f : k_.facets(s.dim, s.index)) {
        SimplexId face{s.dim - 1, f};
        if (matched != down_.end() && matched->second == face) continue;
        out.push_back(face);
      }
    }
    return out;
  }

  // Is `target` reachable from `start` moving within dimensions lo, lo + 1?
  bool reaches(SimplexId start, SimplexId target, std::size_t lo) const {
    std::set<SimplexId> seen{start};
    std::vector<SimplexId> stack{start};
    while (!stack.empty()) {
      SimplexId s = stack.back();
      stack.pop_back();
      if (s == target) return true;
      for (auto t : successors(s)) {
        if (t.dim < lo || t.dim > lo + 1) continue;
        if (seen.insert(t).second) stack.push_back(t);
      }
    }
    return false;
  }

 private:
  const DeltaComplex& k_;
  const std::map<SimplexId, SimplexId>& up_;
  const std::map<SimplexId, SimplexId>& down_;
};

bool has_cycle(const DeltaComplex& k, const std::map<SimplexId, SimplexId>& up,
               const std::map<SimplexId, SimplexId>& down) {
  Digraph g(k, up, down);
  // colors: 0 unseen, 1 on stack, 2 done
  std::map<SimplexId, int> color;
  for (std::size_t p = 0; p <= k.dimension(); ++p) {
    for (std::size_t j = 0; j < k.count(p); ++j) {
      SimplexId root{p, j};
      if (color[root] != 0) continue;
      std::vector<std::pair<SimplexId, std::vector<SimplexId>>> stack;
      color[root] = 1;
      stack.emplace_back(root, g.successors(root));
      while (!stack.empty()) {
        auto& [s, next] = stack.back();
        if (next.empty()) {
          color[s] = 2;
          stack.pop_back();
          continue;
        }
        SimplexId t = next.back();
        next.pop_back();
        int& c = color[t];
        if (c == 1) return true;
        if (c == 0) {
          c = 1;
          stack.emplace_back(t, g.successors(t));
        }
      }
    }
  }
  return false;
}

}  // namespace

GradientReport validate_gradient(const DeltaComplex& k, const Matching& v) {
  GradientReport rep;
  std::map<SimplexId, SimplexId> up;
  std::map<SimplexId, SimplexId> down;
  std::set<SimplexId> used;
  for (const auto& [a, b] : v) {
    const std::string pair = "(" + to_string(a) + ", " + to_string(b) + ")";
    if (!valid_cell(k, a) || !valid_cell(k, b)) {
      rep.problems.push_back("pair " + pair + " references a missing cell");
      continue;
    }
    const std::size_t occ = occurrences(k, a, b);
    if (occ == 0) {
      rep.problems.push_back("pair " + pair + " is not a facet relation");
      continue;
    }
    if (occ > 1) rep.problems.push_back("pair " + pair + " uses a facet that occurs more than once");
    if (!used.insert(a).second) rep.problems.push_back("cell " + to_string(a) + " is in two pairs");
    if (!used.insert(b).second) rep.problems.push_back("cell " + to_string(b) + " is in two pairs");
    up[a] = b;
    down[b] = a;
  }
  if (rep.problems.empty() && has_cycle(k, up, down)) {
    rep.problems.push_back("matching has a closed V-path");
  }
  rep.valid = rep.problems.empty();
  return rep;
}

DiscreteGradient::DiscreteGradient(const DeltaComplex& k, Matching pairs)
    : complex_(&k), pairs_(std::move(pairs)) {
  const auto rep = validate_gradient(k, pairs_);
  if (!rep.valid) throw Error(ErrorCode::invalid_gradient, rep.problems.front());
  for (const auto& [a, b] : pairs_) {
    up_[a] = b;
    down_[b] = a;
  }
}

std::optional<SimplexId> DiscreteGradient::up(SimplexId s) const {
  if (auto it = up_.find(s); it != up_.end()) return it->second;
  return std::nullopt;
}

bool DiscreteGradient::is_critical(SimplexId s) const { return !up_.contains(s) && !down_.contains(s); }

std::vector<std::vector<std::size_t>> DiscreteGradient::critical_cells() const {
  std::vector<std::vector<std::size_t>> out(complex_->dimension() + 1);
  for (std::size_t p = 0; p <= complex_->dimension(); ++p) {
    for (std::size_t j = 0; j < complex_->count(p); ++j) {
      if (is_critical({p, j})) out[p].push_back(j);
    }
  }
  return out;
}

std::vector<std::size_t> DiscreteGradient::critical_counts() const {
  std::vector<std::size_t> nu;
  for (const auto& c : critical_cells()) nu.push_back(c.size());
  return nu;
}

std::vector<VPath> gradient_paths(const DiscreteGradient& v, std::size_t sigma, std::size_t tau,
                                  std::size_t k) {
  const DeltaComplex& cx = v.complex();
  if (k == 0 || k > cx.dimension()) return {};
  const SimplexId source{k, sigma};
  const SimplexId target{k - 1, tau};
  if (!v.is_critical(source) || !v.is_critical(target)) {
    throw Error(ErrorCode::invalid_input, "gradient paths join critical cells only");
  }
  std::vector<VPath> paths;
  VPath current;
  // a: current (k-1)-cell reached with accumulated sign
  std::function<void(SimplexId, int)> walk = [&](SimplexId a, int sign) {
    current.cells.push_back(a);
    if (a == target) {
      paths.push_back({current.cells, sign});
    } else if (auto b = v.up(a); b && b->dim == k) {
      current.cells.push_back(*b);
      const auto f = cx.facets(b->dim, b->index);
      long through = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == a.index) through = (i % 2 == 0) ? 1 : -1;
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == a.index) continue;
        const long next = (i % 2 == 0) ? 1 : -1;
        walk({k - 1, f[i]}, static_cast<int>(sign * -through * next));
      }
      current.cells.pop_back();
    }
    current.cells.pop_back();
  };
  current.cells.push_back(source);
  const auto f = cx.facets(k, sigma);
  for (std::size_t i = 0; i < f.size(); ++i) walk({k - 1, f[i]}, (i % 2 == 0) ? 1 : -1);
  return paths;
}

std::vector<std::size_t> MorseComplex::counts() const {
  std::vector<std::size_t> nu;
  for (const auto& c : critical) nu.push_back(c.size());
  return nu;
}

MorseComplex witten_complex(const DiscreteGradient& v) {
  const DeltaComplex& cx = v.complex();
  const auto crit = v.critical_cells();
  MorseComplex m;
  std::vector<std::size_t> ranks;
  for (std::size_t p = 0; p < crit.size(); ++p) {
    std::vector<std::string> names;
    for (auto j : crit[p]) names.push_back(to_string(SimplexId{p, j}));
    m.critical.push_back(std::move(names));
    ranks.push_back(crit[p].size());
  }
  for (std::size_t p = 1; p <= cx.dimension(); ++p) {
    IntMatrix s(crit[p - 1].size(), crit[p].size());
    IntMatrix u(crit[p - 1].size(), crit[p].size());
    for (std::size_t c = 0; c < crit[p].size(); ++c) {
      for (std::size_t r = 0; r < crit[p - 1].size(); ++r) {
        for (const auto& path : gradient_paths(v, crit[p][c], crit[p - 1][r], p)) {
          s(r, c) += path.sign;
          u(r, c) += 1;
        }
      }
    }
    m.signed_counts.push_back(std::move(s));
    m.unsigned_counts.push_back(std::move(u));
  }
  m.chains = ChainComplex(ranks, m.signed_counts);
  return m;
}

MorseComplex witten_complex(const FlowData& data) {
  MorseComplex m;
  m.critical = data.critical;
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;
  std::vector<std::size_t> ranks;
  for (std::size_t p = 0; p < data.critical.size(); ++p) {
    for (std::size_t i = 0; i < data.critical[p].size(); ++i) {
      if (!where.emplace(data.critical[p][i], std::pair{p, i}).second) {
        throw Error(ErrorCode::invalid_flow_data, "duplicate critical point " + data.critical[p][i]);
      }
    }
    ranks.push_back(data.critical[p].size());
  }
  if (ranks.empty()) throw Error(ErrorCode::invalid_flow_data, "no critical points");
  for (std::size_t p = 1; p < ranks.size(); ++p) {
    m.signed_counts.emplace_back(ranks[p - 1], ranks[p]);
    m.unsigned_counts.emplace_back(ranks[p - 1], ranks[p]);
  }
  for (const auto& line : data.lines) {
    auto from = where.find(line.from);
    auto to = where.find(line.to);
    if (from == where.end() || to == where.end()) {
      throw Error(ErrorCode::invalid_flow_data, "flow line between unknown points " + line.from + " -> " + line.to);
    }
    const std::size_t p = from->second.first;
    if (p == 0 || to->second.first + 1 != p) {
      throw Error(ErrorCode::invalid_flow_data, "flow line " + line.from + " -> " + line.to +
                                                    " does not drop the index by one");
    }
    if (line.sign != 1 && line.sign != -1) throw Error(ErrorCode::invalid_flow_data, "flow line sign must be +-1");
    const Integer n(static_cast<unsigned long>(line.count));
    m.signed_counts[p - 1](to->second.second, from->second.second) += line.sign * n;
    m.unsigned_counts[p - 1](to->second.second, from->second.second) += n;
  }
  try {
    m.chains = ChainComplex(ranks, m.signed_counts);
  } catch (const Error& e) {
    throw Error(ErrorCode::invalid_flow_data, e.what());
  }
  return m;
}

Integer count_broken(const MorseComplex& m, std::size_t n) {
  if (n > m.dimension()) throw Error(ErrorCode::degree_out_of_range, "more parts than the dimension");
  const auto nu = m.counts();
  // row vector over critical points of index 0, pushed up one index at a time
  std::vector<Integer> acc(nu[0], Integer(1));
  for (std::size_t p = 1; p <= n; ++p) {
    const IntMatrix& u = m.unsigned_counts[p - 1];
    std::vector<Integer> next(nu[p], Integer(0));
    for (std::size_t c = 0; c < nu[p]; ++c) {
      for (std::size_t r = 0; r < nu[p - 1]; ++r) next[c] += acc[r] * u(r, c);
    }
    acc = std::move(next);
  }
  Integer total = 0;
  for (const auto& a : acc) total += a;
  return total;
}

std::vector<MorseInequality> morse_inequalities(const std::vector<std::size_t>& nu,
                                                const std::vector<std::size_t>& betti) {
  const std::size_t len = std::max(nu.size(), betti.size());
  auto at = [](const std::vector<std::size_t>& v, std::size_t i) {
    return Integer(static_cast<unsigned long>(i < v.size() ? v[i] : 0));
  };
  std::vector<MorseInequality> out;
  for (std::size_t n = 0; n < len; ++n) {
    MorseInequality q;
    q.n = n;
    for (std::size_t p = 0; p <= n; ++p) {
      const int s = ((p + n) % 2 == 0) ? 1 : -1;
      q.lhs += s * at(nu, p);
      q.rhs += s * at(betti, p);
    }
    q.holds = q.lhs >= q.rhs;
    out.push_back(q);
  }
  return out;
}

Matching random_gradient(const DeltaComplex& k, std::uint64_t seed) {
  std::vector<SimplexId> cells;
  for (std::size_t p = 0; p <= k.dimension(); ++p) {
    for (std::size_t j = 0; j < k.count(p); ++j) cells.push_back({p, j});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(cells.begin(), cells.end(), rng);

  // regular cofaces of every cell
  std::map<SimplexId, std::vector<SimplexId>> cofaces;
  for (std::size_t p = 1; p <= k.dimension(); ++p) {
    for (std::size_t j = 0; j < k.count(p); ++j) {
      const auto f = k.facets(p, j);
      for (auto x : f) {
        if (std::count(f.begin(), f.end(), x) == 1) cofaces[{p - 1, x}].push_back({p, j});
      }
    }
  }

  std::map<SimplexId, SimplexId> up;
  std::map<SimplexId, SimplexId> down;
  Matching pairs;
  Digraph g(k, up, down);
  for (auto a : cells) {
    if (up.contains(a) || down.contains(a)) continue;
    for (auto b : cofaces[a]) {
      if (up.contains(b) || down.contains(b)) continue;
      up[a] = b;
      down[b] = a;
      // the reversed edge a -> b closes a cycle iff b now reaches a
      if (g.reaches(b, a, a.dim)) {
        up.erase(a);
        down.erase(b);
        continue;
      }
      pairs.emplace_back(a, b);
      break;
    }
  }
  return pairs;
}

}  // namespace ivol
