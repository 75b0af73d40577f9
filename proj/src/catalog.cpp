#include "ivol/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <regex>

#include "ivol/error.hpp"

namespace ivol {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> corners_of(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

DeltaComplex glue_simplices(std::size_t d, std::size_t count, const std::vector<FacePairing>& pairings) {
  if (d > 10) throw Error(ErrorCode::invalid_input, "gluing dimension too large");
  const unsigned masks = 1u << (d + 1);
  UnionFind uf(count * masks);
  auto node = [&](std::size_t t, unsigned mask) { return t * masks + mask; };
  for (const auto& g : pairings) {
    if (g.a >= count || g.b >= count || g.i > d || g.j > d) {
      throw Error(ErrorCode::dangling_reference, "face pairing out of range");
    }
    std::vector<std::size_t> fa, fb;
    for (std::size_t c = 0; c <= d; ++c) {
      if (c != g.i) fa.push_back(c);
      if (c != g.j) fb.push_back(c);
    }
    for (unsigned sub = 1; sub < (1u << d); ++sub) {
      unsigned ma = 0, mb = 0;
      for (auto pos : corners_of(sub)) {
        ma |= 1u << fa[pos];
        mb |= 1u << fb[pos];
      }
      uf.unite(node(g.a, ma), node(g.b, mb));
    }
  }
  // number classes per dimension in order of first appearance
  std::vector<std::map<std::size_t, std::size_t>> id(d + 1);
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> rep(d + 1);
  for (std::size_t p = 0; p <= d; ++p) {
    for (std::size_t t = 0; t < count; ++t) {
      for (unsigned mask = 1; mask < masks; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != p + 1) continue;
        const std::size_t root = uf.find(node(t, mask));
        if (id[p].emplace(root, rep[p].size()).second) rep[p].emplace_back(t, mask);
      }
    }
  }
  FacetTable table(d);
  for (std::size_t p = 1; p <= d; ++p) {
    for (const auto& [t, mask] : rep[p]) {
      const auto c = corners_of(mask);
      std::vector<std::size_t> f;
      for (auto drop : c) f.push_back(id[p - 1].at(uf.find(node(t, mask & ~(1u << drop)))));
      table[p - 1].push_back(std::move(f));
    }
  }
  return DeltaComplex::build(rep[0].size(), std::move(table));
}

DeltaComplex circle(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_input, "circle needs at least one edge");
  FacetTable t(1);
  for (std::size_t i = 0; i < k; ++i) t[0].push_back({(i + 1) % k, i});
  return DeltaComplex::build(k, std::move(t));
}

DeltaComplex torus(std::size_t m) {
  if (m == 0 || m > 6) throw Error(ErrorCode::invalid_input, "torus dimension must be 1..6");
  using Seq = std::vector<unsigned>;
  const unsigned full = (1u << m) - 1;
  std::vector<std::vector<Seq>> levels(m + 1);
  std::vector<std::map<Seq, std::size_t>> index(m + 1);
  levels[0].push_back({});
  index[0][{}] = 0;
  for (std::size_t n = 1; n <= m; ++n) {
    for (const auto& s : levels[n - 1]) {
      unsigned used = 0;
      for (auto u : s) used |= u;
      const unsigned free = full & ~used;
      for (unsigned u = free; u; u = (u - 1) & free) {
        Seq t = s;
        t.push_back(u);
        index[n].emplace(t, 0);
      }
    }
    for (auto& [s, i] : index[n]) {
      i = levels[n].size();
      levels[n].push_back(s);
    }
  }
  FacetTable table(m);
  for (std::size_t n = 1; n <= m; ++n) {
    for (const auto& s : levels[n]) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i <= n; ++i) {
        Seq face;
        if (i == 0) {
          face.assign(s.begin() + 1, s.end());
        } else if (i == n) {
          face.assign(s.begin(), s.end() - 1);
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            face.push_back(j == i - 1 ? (s[j] | s[j + 1]) : s[j]);
          }
        }
        f.push_back(index[n - 1].at(face));
      }
      table[n - 1].push_back(std::move(f));
    }
  }
  return DeltaComplex::build(1, std::move(table));
}

DeltaComplex klein_bottle() {
  // edges a, b, c on one vertex; triangles (b, c, a) and (a, b, c)
  return DeltaComplex::build(1, {{{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 1, 2}}});
}

DeltaComplex projective_plane() {
  // a = b = [v, w], c = [v, v]; triangles (b, a, c) and (a, b, c)
  return DeltaComplex::build(2, {{{1, 0}, {1, 0}, {0, 0}}, {{1, 0, 2}, {0, 1, 2}}});
}

DeltaComplex standard_simplex(std::size_t p) {
  VertexTuple t(p + 1);
  std::iota(t.begin(), t.end(), 0);
  return DeltaComplex::from_tuples({t});
}

DeltaComplex sphere2() { return DeltaComplex::from_tuples({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}); }

DeltaComplex lens_triangulation(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_input, "lens space needs n >= 1");
  std::vector<FacePairing> g;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    g.push_back({i, 2, next, 3});  // (N, S, v_{i+1}) shared around the axis
    g.push_back({i, 1, next, 0});  // (N, v_i, v_{i+1}) ~ (S, v_{i+1}, v_{i+2})
  }
  return glue_simplices(3, n, g);
}

ChainComplex lens_chain_complex(const Integer& n) {
  IntMatrix d2(1, 1);
  d2(0, 0) = n;
  return ChainComplex({1, 1, 1, 1}, {IntMatrix(1, 1), d2, IntMatrix(1, 1)});
}

DeltaComplex square_chord() { return DeltaComplex::from_tuples({{0, 1, 2}, {2, 3}, {0, 3}}); }

DeltaComplex annulus() {
  return DeltaComplex::from_tuples({{0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5}});
}

DeltaComplex disk_fan(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::invalid_input, "fan needs at least 3 rim vertices");
  std::vector<VertexTuple> t;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t a = i, b = i % k + 1;
    t.push_back({0, std::min(a, b), std::max(a, b)});
  }
  return DeltaComplex::from_tuples(t);
}

DeltaComplex torus7() {
  std::vector<VertexTuple> t;
  for (std::size_t i = 0; i < 7; ++i) {
    for (const auto& offs : {std::vector<std::size_t>{0, 1, 3}, std::vector<std::size_t>{0, 2, 3}}) {
      VertexTuple s;
      for (auto o : offs) s.push_back((i + o) % 7);
      std::sort(s.begin(), s.end());
      t.push_back(s);
    }
  }
  return DeltaComplex::from_tuples(t);
}

DeltaComplex backtrack_circle() { return DeltaComplex::from_tuples({{0, 1}, {1, 0}, {1, 2}, {2, 0}}); }

DeltaComplex two_tori() {
  return DeltaComplex::build(2, {{{0, 0}, {0, 0}, {0, 0}, {1, 1}, {1, 1}, {1, 1}},
                                 {{1, 2, 0}, {0, 2, 1}, {4, 5, 3}, {3, 5, 4}}});
}

Presentation gamma_presentation(long n) {
  Presentation p;
  p.generators = {"x", "y", "z"};
  p.relators.push_back(commutator("x", "z"));
  p.relators.push_back(commutator("y", "z"));
  Word w = commutator("x", "y");
  w.emplace_back("z", -n);
  p.relators.push_back(w);
  return p;
}

namespace {

Space from_complex(std::string name, std::string description, DeltaComplex k) {
  Space s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.chains = k.chain_complex();
  if (k.validate_pseudomanifold().passes()) {
    try {
      k.fundamental_cycle();
      s.closed_oriented = true;
    } catch (const Error&) {
    }
  }
  s.complex = std::move(k);
  return s;
}

std::size_t parse_size(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw Error(ErrorCode::invalid_input, "bad number " + text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::invalid_input, "bad number " + text);
  }
}

}  // namespace

Space catalog_space(const std::string& name) {
  std::smatch m;
  auto matches = [&](const char* pattern) { return std::regex_match(name, m, std::regex(pattern)); };

  if (matches(R"(circle:(\d+))")) {
    const std::size_t k = parse_size(m[1]);
    Space s = from_complex(name, std::to_string(k) + "-gon circle", circle(k));
    s.aspherical = true;
    // v_{i+1} with the edge ending there, leaving v_0 and the last edge critical
    Matching v;
    for (std::size_t i = 0; i + 1 < k; ++i) v.push_back({{0, i + 1}, {1, i}});
    s.gradient = v;
    return s;
  }
  if (name == "T2" || name == "torus:2") {
    Space s = from_complex(name, "one-vertex torus, 3 edges, 2 triangles", torus(2));
    s.aspherical = true;
    s.gradient = Matching{{{1, 2}, {2, 0}}};  // diagonal edge with one triangle
    return s;
  }
  auto with_asphericity = [](Space s, bool aspherical) {
    s.aspherical = aspherical;
    return s;
  };
  if (name == "T3") return with_asphericity(from_complex(name, "one-vertex 3-torus, 6 tetrahedra", torus(3)), true);
  if (matches(R"(torus:(\d+))")) {
    const std::size_t k = parse_size(m[1]);
    return with_asphericity(from_complex(name, "one-vertex " + std::to_string(k) + "-torus", torus(k)), true);
  }
  if (name == "klein") return with_asphericity(from_complex(name, "one-vertex Klein bottle", klein_bottle()), true);
  if (name == "RP2") {
    return with_asphericity(from_complex(name, "two-vertex projective plane", projective_plane()), false);
  }
  if (name == "S2") return with_asphericity(from_complex(name, "boundary of the tetrahedron", sphere2()), false);
  if (name == "segment") {
    Space s = from_complex(name, "one edge", standard_simplex(1));
    s.gradient = Matching{{{0, 1}, {1, 0}}};
    return s;
  }
  if (matches(R"(simplex:(\d+))")) {
    return from_complex(name, "standard simplex", standard_simplex(parse_size(m[1])));
  }
  if (matches(R"(L\((\d+),1\))")) {
    const std::size_t n = parse_size(m[1]);
    return with_asphericity(
        from_complex(name, "lens space from " + std::to_string(n) + " tetrahedra", lens_triangulation(n)), false);
  }
  if (matches(R"(lens-chain:(\d+))")) {
    Space s;
    s.name = name;
    s.description = "cellular chain complex of L(n,1)";
    s.chains = lens_chain_complex(Integer(static_cast<unsigned long>(parse_size(m[1]))));
    return s;
  }
  if (name == "square-chord") return from_complex(name, "4-cycle with one filled triangle", square_chord());
  if (name == "annulus") return from_complex(name, "annulus from 6 triangles", annulus());
  if (matches(R"(disk-fan:(\d+))")) return from_complex(name, "cone over a polygon", disk_fan(parse_size(m[1])));
  if (name == "torus7") return with_asphericity(from_complex(name, "seven-vertex torus", torus7()), true);
  if (name == "backtrack") return from_complex(name, "triangle with a doubled edge", backtrack_circle());
  if (name == "two-tori") return from_complex(name, "disjoint union of two tori", two_tori());
  if (matches(R"(gamma:(-?\d+))")) {
    Space s;
    s.name = name;
    s.description = "presentation <x,y,z | [x,z],[y,z],[x,y]z^-n>";
    s.presentation = gamma_presentation(std::stol(m[1]));
    return s;
  }
  throw Error(ErrorCode::invalid_input, "unknown catalog space " + name);
}

std::vector<std::string> catalog_names() {
  return {"circle:<k>", "T2",        "T3",         "torus:<m>",      "klein",      "RP2",
          "S2",         "segment",   "simplex:<p>", "L(<n>,1)",      "lens-chain:<n>", "square-chord",
          "annulus",    "disk-fan:<k>", "torus7",  "backtrack",      "two-tori",   "gamma:<n>"};
}

std::vector<NamedCycle> catalog_cycles() {
  std::vector<NamedCycle> out;
  auto add = [&](std::string name, std::string space, std::size_t p, std::map<std::size_t, Integer> c) {
    out.push_back({std::move(name), std::move(space), IntegerChain(p, std::move(c))});
  };
  auto fundamental = [&](const std::string& space) {
    const Space s = catalog_space(space);
    out.push_back({space + " fundamental", space, s.complex->fundamental_cycle()});
  };
  fundamental("circle:5");
  fundamental("T2");
  fundamental("torus7");
  fundamental("S2");
  // T2 edges: 0 = x, 1 = y, 2 = xy
  add("T2 x", "T2", 1, {{0, 1}});
  add("T2 2x+y-xy", "T2", 1, {{0, 2}, {1, 1}, {2, -1}});
  // RP2 edges: 0 = a, 1 = b, 2 = c (loop)
  add("RP2 c", "RP2", 1, {{2, 1}});
  add("RP2 3c", "RP2", 1, {{2, 3}});
  add("RP2 a-b+c", "RP2", 1, {{0, 1}, {1, -1}, {2, 1}});
  add("klein a+b", "klein", 1, {{0, 1}, {1, 1}});
  {
    // 0-1-2-3-0 around the square, the class of 0-2-3-0
    const DeltaComplex k = square_chord();
    IntegerChain c(1);
    c.add(*k.find_tuple({0, 1}), 1);
    c.add(*k.find_tuple({1, 2}), 1);
    c.add(*k.find_tuple({2, 3}), 1);
    c.add(*k.find_tuple({0, 3}), -1);
    out.push_back({"square-chord loop", "square-chord", c});
  }
  {
    // inner boundary pushed across two triangles
    const DeltaComplex k = annulus();
    IntegerChain c(1);
    c.add(*k.find_tuple({0, 1}), 1);
    c.add(*k.find_tuple({1, 2}), 1);
    c.add(*k.find_tuple({0, 2}), -1);
    IntegerChain d(2);
    d.add(*k.find_tuple({0, 1, 4}), 1);
    d.add(*k.find_tuple({1, 4, 5}), -1);
    out.push_back({"annulus pushed loop", "annulus", c + k.boundary(d)});
  }
  {
    const DeltaComplex k = disk_fan(5);
    IntegerChain c(1);
    for (std::size_t i = 1; i <= 5; ++i) {
      std::size_t a = i, b = i % 5 + 1;
      c.add(*k.find_tuple({std::min(a, b), std::max(a, b)}), a < b ? 1 : -1);
    }
    out.push_back({"disk-fan rim", "disk-fan:5", c});
  }
  {
    const DeltaComplex k = backtrack_circle();
    IntegerChain c(1);
    c.add(*k.find_tuple({0, 1}), 2);
    c.add(*k.find_tuple({1, 0}), 1);
    c.add(*k.find_tuple({1, 2}), 1);
    c.add(*k.find_tuple({2, 0}), 1);
    out.push_back({"backtrack loop", "backtrack", c});
  }
  {
    const DeltaComplex k = standard_simplex(3);
    IntegerChain top(3);
    top.add(0, 1);
    out.push_back({"simplex:3 boundary", "simplex:3", k.boundary(top)});
  }
  return out;
}

}  // namespace ivol
