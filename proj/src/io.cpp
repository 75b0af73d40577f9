#include "ivol/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ivol/error.hpp"

namespace ivol {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    schema("expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

std::size_t index_from_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(key, &used);
    if (used == key.size()) return v;
  } catch (const std::logic_error&) {
  }
  schema("expected a numeric key, got \"" + key + "\"");
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) {
  Rational q = x;
  q.canonicalize();
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return Json(q.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) schema("bad integer string " + j.dump());
    return x;
  }
  schema("expected an integer, got " + j.dump());
}

Json to_json(const SimplexId& s) { return Json::array({s.dim, s.index}); }

SimplexId simplex_id_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {index_from_json(j[0]), index_from_json(j[1])};
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto colon = s.find(':');
    if (colon != std::string::npos) return {index_from_key(s.substr(0, colon)), index_from_key(s.substr(colon + 1))};
  }
  schema("expected a simplex id [dim, index] or \"dim:index\", got " + j.dump());
}

DeltaComplex complex_from_json(const Json& j) {
  if (!j.is_object()) schema("complex must be a JSON object");
  if (j.contains("tuples")) {
    std::vector<VertexTuple> tuples;
    for (const auto& t : j["tuples"]) {
      VertexTuple v;
      for (const auto& x : t) v.push_back(index_from_json(x));
      tuples.push_back(std::move(v));
    }
    return DeltaComplex::from_tuples(tuples);
  }
  const std::size_t d = index_from_json(field(j, "dims"));
  const std::size_t n = index_from_json(field(j, "vertices"));
  const Json& simplices = field(j, "simplices");
  if (!simplices.is_array() || simplices.size() != d) schema("\"simplices\" must list dimensions 1..dims");
  FacetTable table(d);
  for (std::size_t p = 1; p <= d; ++p) {
    for (const auto& s : simplices[p - 1]) {
      if (!s.is_array() || s.size() != p + 1) {
        schema("a " + std::to_string(p) + "-simplex needs " + std::to_string(p + 1) + " facets");
      }
      std::vector<std::size_t> f;
      for (const auto& x : s) f.push_back(index_from_json(x));
      table[p - 1].push_back(std::move(f));
    }
  }
  return DeltaComplex::build(n, std::move(table));
}

Json to_json(const DeltaComplex& k) {
  Json simplices = Json::array();
  for (std::size_t p = 1; p <= k.dimension(); ++p) {
    Json level = Json::array();
    for (std::size_t j = 0; j < k.count(p); ++j) {
      const auto f = k.facets(p, j);
      level.push_back(Json(std::vector<std::size_t>(f.begin(), f.end())));
    }
    simplices.push_back(std::move(level));
  }
  return Json{{"dims", k.dimension()}, {"vertices", k.vertex_count()}, {"simplices", simplices}};
}

ChainComplex chain_complex_from_json(const Json& j) {
  std::vector<std::size_t> ranks;
  for (const auto& r : field(j, "ranks")) ranks.push_back(index_from_json(r));
  if (ranks.empty()) schema("\"ranks\" must be nonempty");
  const Json& b = field(j, "boundaries");
  if (!b.is_array() || b.size() != ranks.size() - 1) schema("need one boundary matrix per degree 1..d");
  std::vector<IntMatrix> mats;
  for (std::size_t p = 1; p < ranks.size(); ++p) {
    IntMatrix m(ranks[p - 1], ranks[p]);
    const Json& rows = b[p - 1];
    if (!rows.is_array() || rows.size() != ranks[p - 1]) schema("boundary " + std::to_string(p) + " has wrong row count");
    for (std::size_t r = 0; r < ranks[p - 1]; ++r) {
      if (!rows[r].is_array() || rows[r].size() != ranks[p]) {
        schema("boundary " + std::to_string(p) + " has wrong column count");
      }
      for (std::size_t c = 0; c < ranks[p]; ++c) m(r, c) = integer_from_json(rows[r][c]);
    }
    mats.push_back(std::move(m));
  }
  return ChainComplex(ranks, std::move(mats));
}

Json to_json(const ChainComplex& c) {
  Json b = Json::array();
  for (std::size_t p = 1; p <= c.top_degree(); ++p) {
    const IntMatrix& m = c.boundary(p);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(r, k)));
      rows.push_back(std::move(row));
    }
    b.push_back(std::move(rows));
  }
  return Json{{"ranks", c.ranks()}, {"boundaries", b}};
}

IntegerChain chain_from_json(const Json& j) {
  IntegerChain c(index_from_json(field(j, "degree")));
  const Json& coeffs = field(j, "coefficients");
  if (coeffs.is_array()) {
    for (const auto& e : coeffs) {
      if (!e.is_array() || e.size() != 2) schema("coefficients are [index, value] pairs");
      c.add(index_from_json(e[0]), integer_from_json(e[1]));
    }
  } else if (coeffs.is_object()) {
    for (const auto& [k, v] : coeffs.items()) c.add(index_from_key(k), integer_from_json(v));
  } else {
    schema("\"coefficients\" must be an array or object");
  }
  return c;
}

Json to_json(const IntegerChain& c) {
  Json coeffs = Json::array();
  for (const auto& [i, v] : c.coeffs()) coeffs.push_back(Json::array({i, to_json(v)}));
  return Json{{"degree", c.degree()}, {"coefficients", coeffs}};
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  const Json& g = field(j, "generators");
  if (g.is_number_integer()) {
    for (std::size_t i = 0; i < index_from_json(g); ++i) p.generators.push_back(std::to_string(i));
  } else if (g.is_array()) {
    for (const auto& name : g) {
      if (!name.is_string()) schema("generator names must be strings");
      p.generators.push_back(name.get<std::string>());
    }
  } else {
    schema("\"generators\" must be a count or a list of names");
  }
  for (const auto& r : field(j, "relators")) {
    Word w;
    for (const auto& letter : r) {
      if (!letter.is_array() || letter.size() != 2 || !letter[1].is_number_integer()) {
        schema("a relator letter is [generator, exponent]");
      }
      std::string name = letter[0].is_string() ? letter[0].get<std::string>() : letter[0].dump();
      w.emplace_back(std::move(name), letter[1].get<long>());
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

Matching matching_from_json(const Json& j) {
  Matching m;
  for (const auto& pair : field(j, "pairs")) {
    if (!pair.is_array() || pair.size() != 2) schema("a gradient pair is [face, coface]");
    m.emplace_back(simplex_id_from_json(pair[0]), simplex_id_from_json(pair[1]));
  }
  return m;
}

Json to_json(const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [a, b] : m) pairs.push_back(Json::array({to_json(a), to_json(b)}));
  return Json{{"pairs", pairs}};
}

FlowData flow_data_from_json(const Json& j) {
  FlowData data;
  const Json& crit = field(j, "critical");
  auto names = [](const Json& list) {
    std::vector<std::string> out;
    for (const auto& n : list) out.push_back(n.is_string() ? n.get<std::string>() : n.dump());
    return out;
  };
  if (crit.is_array()) {
    for (const auto& level : crit) data.critical.push_back(names(level));
  } else if (crit.is_object()) {
    for (const auto& [k, v] : crit.items()) {
      const std::size_t p = index_from_key(k);
      if (data.critical.size() <= p) data.critical.resize(p + 1);
      data.critical[p] = names(v);
    }
  } else {
    schema("\"critical\" must be an array or object");
  }
  for (const auto& l : field(j, "lines")) {
    FlowLine line;
    line.from = field(l, "from").is_string() ? l["from"].get<std::string>() : l["from"].dump();
    line.to = field(l, "to").is_string() ? l["to"].get<std::string>() : l["to"].dump();
    line.sign = l.value("sign", 1);
    line.count = l.contains("count") ? index_from_json(l["count"]) : 1;
    data.lines.push_back(std::move(line));
  }
  return data;
}

CWPoset poset_from_json(const Json& j) {
  std::map<std::string, std::size_t> cells;
  for (const auto& [k, v] : field(j, "cells").items()) cells[k] = index_from_json(v);
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("relations")) {
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2) schema("a relation is [lower, upper]");
      rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
  }
  return CWPoset(std::move(cells), rel);
}

ColoredTriple triple_from_json(const Json& j) {
  ColoredTriple t;
  t.sigma = complex_from_json(field(j, "sigma"));
  t.cycle = j.contains("cycle") ? chain_from_json(j["cycle"]) : t.sigma.fundamental_cycle();
  t.sigma.check_chain(t.cycle);
  if (j.contains("labels")) {
    for (const auto& [k, v] : j["labels"].items()) t.labels[simplex_id_from_json(Json(k))] = v.get<std::string>();
  }
  if (j.contains("vertex_images")) {
    for (const auto& [k, v] : j["vertex_images"].items()) {
      t.vertex_images[index_from_key(k)] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  if (j.contains("coloring")) {
    for (const auto& [k, v] : j["coloring"].items()) t.coloring[index_from_key(k)] = v.get<long>();
  }
  if (j.contains("nullhomotopic_edges")) {
    for (const auto& e : j["nullhomotopic_edges"]) t.nullhomotopic_edges.insert(index_from_json(e));
  }
  return t;
}

Json to_json(const HomologyGroup& h, const LogBase& base) {
  Json tors = Json::array();
  for (const auto& t : h.torsion) tors.push_back(to_json(t));
  const LogExpr s = size_expr(h);
  return Json{{"betti", h.betti},
              {"torsion", tors},
              {"group", h.to_string()},
              {"size", s.to_string(base)},
              {"size_approx", s.approx(base)}};
}

Json to_json(const SearchCertificate& c) {
  return Json{{"certified", c.certified},     {"nodes", c.nodes},
              {"pruned", c.pruned},           {"max_depth", c.max_depth},
              {"lattice_rank", c.lattice_rank}, {"node_limit", c.node_limit},
              {"root_lp_bound", to_json(c.root_lp_bound)}, {"lower_bound", to_json(c.lower_bound)}};
}

Json to_json(const NormResult& r) {
  return Json{{"mode", mode_name(r.mode)},
              {"value", to_json(r.value)},
              {"label", "simplicial upper bound"},
              {"representative", to_json(r.representative)},
              {"witness", to_json(r.witness)},
              {"certificate", to_json(r.certificate)},
              {"certified", r.certificate.certified}};
}

Json to_json(const FlagChain& c) {
  Json terms = Json::array();
  for (const auto& [f, v] : c.coeffs()) terms.push_back(Json{{"flag", to_string(f)}, {"coefficient", to_json(v)}});
  return Json{{"degree", c.degree()}, {"terms", terms}, {"norm", to_json(c.norm())}};
}

Json to_json(const MorseComplex& m) {
  auto mats = [](const std::vector<IntMatrix>& ms) {
    Json out = Json::array();
    for (const auto& a : ms) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
        rows.push_back(std::move(row));
      }
      out.push_back(std::move(rows));
    }
    return out;
  };
  return Json{{"critical", m.critical},
              {"counts", m.counts()},
              {"signed_counts", mats(m.signed_counts)},
              {"unsigned_counts", mats(m.unsigned_counts)}};
}

Json to_json(const ConditionReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"condition", condition_name(f.condition)}, {"simplex", to_json(f.simplex)}, {"detail", f.detail}});
  }
  return Json{{"cellular", r.cellular},       {"order", r.order}, {"internality", r.internality},
              {"loop", r.loop},               {"passes", r.passes()}, {"failures", failures}};
}

Json to_json(const LogExpr& e, const LogBase& base) {
  auto [lo, hi] = e.enclosure(base);
  return Json{{"exact", e.to_string(base)}, {"lower", lo}, {"upper", hi}};
}

Json to_json(const BoundReport& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    lines.push_back(Json{{"name", l.name},
                         {"left", to_json(l.left, r.base)},
                         {"relation", relation_symbol(l.relation)},
                         {"right", to_json(l.right, r.base)},
                         {"holds", l.holds},
                         {"left_source", l.left_source},
                         {"right_source", l.right_source},
                         {"certified", l.certified}});
  }
  return Json{{"log_base", r.base.name()}, {"lines", lines}, {"holds", r.holds()}};
}

}  // namespace ivol
