#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ivol/barr.hpp"
#include "ivol/bounds.hpp"
#include "ivol/catalog.hpp"
#include "ivol/cellular.hpp"
#include "ivol/error.hpp"
#include "ivol/homology.hpp"
#include "ivol/io.hpp"
#include "ivol/morse.hpp"
#include "ivol/norms.hpp"
#include "ivol/oriented.hpp"

using namespace ivol;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCertification = 3;
constexpr int kExitBudget = 4;

struct Input {
  std::string name;
  std::optional<DeltaComplex> complex;
  std::optional<ChainComplex> chains;
  std::optional<Presentation> presentation;
  std::optional<Matching> gradient;
  std::optional<bool> aspherical;
};

Input load_space(const std::string& source) {
  Input in;
  in.name = source;
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    Space s = catalog_space(source.substr(prefix.size()));
    in.complex = s.complex;
    if (!s.presentation) in.chains = s.chains;
    in.presentation = s.presentation;
    in.gradient = s.gradient;
    in.aspherical = s.aspherical;
    return in;
  }
  const Json j = read_json_file(source);
  if (j.contains("generators")) {
    in.presentation = presentation_from_json(j);
  } else if (j.contains("ranks")) {
    in.chains = chain_complex_from_json(j);
  } else {
    in.complex = complex_from_json(j);
    in.chains = in.complex->chain_complex();
  }
  return in;
}

LogBase parse_base(const std::string& text) {
  if (text == "e") return LogBase::natural();
  try {
    const unsigned long b = std::stoul(text);
    if (b >= 2) return LogBase::of(b);
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::invalid_input, "log base must be e or an integer >= 2");
}

std::size_t default_node_limit() {
  if (const char* env = std::getenv("IVOL_NODE_LIMIT")) {
    try {
      return std::stoul(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_input, "IVOL_NODE_LIMIT must be a positive integer");
    }
  }
  return NormOptions{}.node_limit;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::invalid_input, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void emit(const Json& j) { stream() << j.dump(2) << "\n"; }

 private:
  std::ofstream file_;
};

const ChainComplex& require_chains(const Input& in) {
  if (!in.chains) throw Error(ErrorCode::invalid_input, in.name + " is not a complex");
  return *in.chains;
}

const DeltaComplex& require_complex(const Input& in) {
  if (!in.complex) throw Error(ErrorCode::invalid_input, in.name + " has no simplices (chain complex only)");
  return *in.complex;
}

int run_homology(const std::string& space, std::optional<std::size_t> degree, const std::string& base_text,
                 Output& out) {
  const LogBase base = parse_base(base_text);
  const Input in = load_space(space);
  Json j{{"space", in.name}, {"log_base", base.name()}};
  if (in.presentation) {
    j["abelianization"] = to_json(abelianization(*in.presentation), base);
    out.emit(j);
    return 0;
  }
  const ChainComplex& c = require_chains(in);
  Json groups = Json::array();
  Json betti = Json::array();
  LogExpr total;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) {
    if (degree && *degree != p) continue;
    const HomologyGroup h = homology(c, p);
    Json g = to_json(h, base);
    g["degree"] = p;
    groups.push_back(g);
    betti.push_back(h.betti);
    total += size_expr(h);
  }
  if (degree && *degree > c.top_degree()) {
    throw Error(ErrorCode::degree_out_of_range, "degree above the top degree");
  }
  j["groups"] = groups;
  j["betti"] = betti;
  j["total_size"] = to_json(total, base);
  out.emit(j);
  return 0;
}

int run_norm(const std::string& space, const std::string& mode_text, const std::string& cls,
             std::size_t node_limit, Output& out) {
  const Input in = load_space(space);
  NormMode mode;
  if (mode_text == "integral") {
    mode = NormMode::integral;
  } else if (mode_text == "oriented") {
    mode = NormMode::oriented;
  } else {
    throw Error(ErrorCode::invalid_input, "mode must be integral or oriented");
  }
  IntegerChain z;
  if (cls == "fundamental") {
    z = require_complex(in).fundamental_cycle();
  } else {
    z = chain_from_json(read_json_file(cls));
  }
  const NormOptions options{node_limit};
  NormResult r;
  Rational lp;
  if (in.complex) {
    if (mode == NormMode::oriented && !in.complex->has_vertex_tuples()) {
      throw Error(ErrorCode::invalid_input, "oriented mode needs simplices with distinct vertex tuples");
    }
    r = minimize_norm_in_class(*in.complex, z, mode, options);
    lp = lp_relaxation(*in.complex, z, mode);
  } else {
    if (mode == NormMode::oriented) throw Error(ErrorCode::invalid_input, "oriented mode needs a simplicial complex");
    r = minimize_norm_in_class(require_chains(in), z, options);
    lp = lp_relaxation(require_chains(in), z);
  }
  Json j = to_json(r);
  j["space"] = in.name;
  j["input_norm"] = to_json(l1_norm(z));
  j["lp_relaxation"] = to_json(lp);
  out.emit(j);
  return r.certificate.certified ? 0 : kExitBudget;
}

int run_phi(std::size_t degree, bool json, Output& out) {
  if (degree > 6) throw Error(ErrorCode::degree_out_of_range, "phi is expanded up to degree 6");
  VertexTuple sigma(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) sigma[i] = i;
  const FlagChain image = phi_tuple(sigma);
  if (!json) {
    out.stream() << image.to_string();
    return 0;
  }
  Json j = to_json(image);
  j["chain_map"] = verify_chain_map(degree).holds;
  j["factorial"] = to_json(factorial(degree + 1));
  out.emit(j);
  return 0;
}

int run_morse(const std::string& space, const std::string& gradient_path, std::optional<std::uint64_t> seed,
              const std::string& flow_path, bool broken, std::optional<std::size_t> parts, Output& out) {
  Json j;
  MorseComplex m;
  std::optional<std::vector<std::size_t>> betti;
  if (!flow_path.empty()) {
    m = witten_complex(flow_data_from_json(read_json_file(flow_path)));
    j["source"] = flow_path;
  } else {
    const Input in = load_space(space);
    const DeltaComplex& k = require_complex(in);
    Matching v;
    if (!gradient_path.empty()) {
      v = matching_from_json(read_json_file(gradient_path));
    } else if (seed) {
      v = random_gradient(k, *seed);
    } else if (in.gradient) {
      v = *in.gradient;
    }
    const GradientReport rep = validate_gradient(k, v);
    j["source"] = in.name;
    j["gradient"] = to_json(v);
    j["valid"] = rep.valid;
    j["problems"] = rep.problems;
    if (!rep.valid) {
      out.emit(j);
      return kExitParse;
    }
    const DiscreteGradient g(k, v);
    m = witten_complex(g);
    std::vector<std::size_t> b;
    for (const auto& h : homology_all(k.chain_complex())) b.push_back(h.betti);
    betti = b;
  }
  j["morse_complex"] = to_json(m);
  Json hom = Json::array();
  for (const auto& h : homology_all(m.chains)) hom.push_back(h.to_string());
  j["homology"] = hom;
  if (betti) {
    Json ineq = Json::array();
    for (const auto& q : morse_inequalities(m.counts(), *betti)) {
      ineq.push_back(Json{{"n", q.n}, {"lhs", to_json(q.lhs)}, {"rhs", to_json(q.rhs)}, {"holds", q.holds}});
    }
    j["morse_inequalities"] = ineq;
  }
  if (broken) {
    const std::size_t n = parts.value_or(m.dimension());
    j["broken"] = Json{{"parts", n}, {"count", to_json(count_broken(m, n))}};
  }
  out.emit(j);
  return 0;
}

int run_conditions(const std::string& triple_path, bool eval, Output& out) {
  const Json raw = read_json_file(triple_path);
  const ColoredTriple t = triple_from_json(raw);
  Json j;
  const Essentiality e = essential_simplices(t);
  j["essential"] = e.essential;
  j["repeated_color"] = e.repeated_color;
  j["trivial_loop"] = e.trivial_loop;
  j["essential_count"] = to_json(essential_count(t));
  Json edges = Json::object();
  for (const auto& [edge, color] : induced_edge_coloring(t)) edges[std::to_string(edge)] = color;
  j["edge_coloring"] = edges;
  if (raw.contains("poset")) {
    const CWPoset p = poset_from_json(raw["poset"]);
    const ConditionReport rep = check_conditions(t, p);
    j["conditions"] = to_json(rep);
    if (eval) {
      const CellularEvaluation ev = essential_cellular_eval(t, p);
      j["essential_cellular_value"] = ev.value ? to_json(*ev.value) : Json(nullptr);
      out.emit(j);
      return ev.value ? 0 : kExitCertification;
    }
  } else if (eval) {
    throw Error(ErrorCode::parse_error, "evaluation needs a \"poset\" field");
  }
  out.emit(j);
  return 0;
}

int run_verify(const std::string& space, const std::string& gradient_path, std::optional<std::uint64_t> seed,
               std::optional<std::string> supplied_norm, std::size_t node_limit, const std::string& base_text,
               Output& out) {
  const LogBase base = parse_base(base_text);
  const Input in = load_space(space);
  const ChainComplex& c = require_chains(in);
  const std::size_t d = c.top_degree();
  const auto h = homology_all(c);
  Json j{{"space", in.name}, {"dimension", d}, {"log_base", base.name()}};
  Json groups = Json::array();
  for (const auto& g : h) groups.push_back(g.to_string());
  j["homology"] = groups;
  bool ok = true;
  bool budget = false;

  std::optional<Integer> norm;
  bool norm_certified = false;
  std::optional<Integer> oriented;
  if (supplied_norm) {
    norm = integer_from_json(Json(*supplied_norm));
    j["norm"] = Json{{"value", to_json(*norm)}, {"source", "supplied"}, {"certified", false}};
  } else if (in.complex) {
    const IntegerChain z = in.complex->fundamental_cycle();
    const NormResult r = minimize_norm_in_class(*in.complex, z, NormMode::integral, NormOptions{node_limit});
    norm = r.value;
    norm_certified = r.certificate.certified;
    budget |= !norm_certified;
    j["norm"] = to_json(r);
    if (in.complex->has_vertex_tuples()) {
      const NormResult o = minimize_norm_in_class(*in.complex, z, NormMode::oriented, NormOptions{node_limit});
      oriented = o.value;
      budget |= !o.certificate.certified;
      j["oriented_norm"] = to_json(o);
    }
  }
  if (norm) {
    const BoundReport bounds = verify_theorem3(*norm, d, h, norm_certified, base);
    j["homology_bounds"] = to_json(bounds);
    ok &= bounds.holds();
    if (oriented) {
      const BoundReport chain = chain_of_inequalities(d, *oriented, norm, h, base);
      j["inequality_chain"] = to_json(chain);
      ok &= chain.holds();
    }
  }

  if (in.complex) {
    Matching v;
    if (!gradient_path.empty()) {
      v = matching_from_json(read_json_file(gradient_path));
    } else if (seed || !in.gradient) {
      v = random_gradient(*in.complex, seed.value_or(0));
    } else {
      v = *in.gradient;
    }
    const DiscreteGradient g(*in.complex, v);
    const MorseComplex m = witten_complex(g);
    const Integer broken = count_broken(m, d);
    const LogExpr threshold = theorem1_threshold(d, h);
    const BoundReport trajectories = verify_theorem1(broken, threshold, base);
    j["trajectory_bound"] = to_json(trajectories);
    j["trajectory_bound"]["caveat"] = "broken count of a discrete gradient, not of a smooth Morse-Smale flow";
    // the bound assumes an aspherical manifold; unknown inputs are held to it
    const bool applies = in.aspherical.value_or(true);
    j["trajectory_bound"]["applies"] = applies;
    if (!applies) j["trajectory_bound"]["note"] = "space is not aspherical: reported, not enforced";
    j["gradient"] = to_json(v);
    if (applies) ok &= trajectories.holds();
  }
  out.emit(j);
  if (budget) return kExitBudget;
  return ok ? 0 : kExitCertification;
}

int run_catalog(bool list, const std::string& show, Output& out) {
  if (!show.empty()) {
    const Space s = catalog_space(show);
    Json j{{"name", s.name}, {"description", s.description}, {"closed_oriented", s.closed_oriented}};
    if (s.complex) j["complex"] = to_json(*s.complex);
    if (s.presentation) {
      Json rel = Json::array();
      for (const auto& w : s.presentation->relators) rel.push_back(w);
      j["presentation"] = Json{{"generators", s.presentation->generators}, {"relators", rel}};
    } else {
      j["chain_complex"] = to_json(s.chains);
    }
    if (s.gradient) j["gradient"] = to_json(*s.gradient);
    out.emit(j);
    return 0;
  }
  (void)list;
  out.emit(Json{{"spaces", catalog_names()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral chain-level norms, homology and discrete Morse counts"};
  app.require_subcommand(1);
  std::string output;
  bool json = false;
  app.add_option("-o,--output", output, "Write the report to a file");
  app.add_flag("--json", json, "Emit JSON (default for every subcommand except phi)");

  std::string space;
  std::string base = "e";
  std::optional<std::size_t> degree;
  std::string mode = "integral";
  std::string cls = "fundamental";
  std::size_t node_limit = 0;
  std::string gradient;
  std::string flow;
  std::optional<std::uint64_t> seed;
  bool broken = false;
  std::optional<std::size_t> parts;
  std::string triple;
  bool eval = false;
  std::optional<std::string> norm;
  bool list = false;
  std::string show;

  auto* homology_cmd = app.add_subcommand("homology", "Integral homology with torsion and size");
  homology_cmd->add_option("--space", space, "catalog:<name> or a JSON file")->required();
  homology_cmd->add_option("--degree", degree, "Only this degree");
  homology_cmd->add_option("--log-base", base, "e or an integer >= 2");

  auto* norm_cmd = app.add_subcommand("norm", "Least l1 norm in a homology class");
  norm_cmd->add_option("--space", space, "catalog:<name> or a JSON file")->required();
  norm_cmd->add_option("--mode", mode, "integral or oriented")->check(CLI::IsMember({"integral", "oriented"}));
  norm_cmd->add_option("--class", cls, "fundamental or a chain JSON file");
  norm_cmd->add_option("--node-limit", node_limit, "Branch-and-bound node budget");

  auto* phi_cmd = app.add_subcommand("phi", "Expansion of phi on the standard simplex");
  phi_cmd->add_option("--degree", degree, "Simplex dimension")->required();

  auto* morse_cmd = app.add_subcommand("morse", "Witten complex and broken trajectories");
  auto* morse_space = morse_cmd->add_option("--space", space, "catalog:<name> or a JSON file");
  auto* morse_gradient = morse_cmd->add_option("--gradient", gradient, "Gradient JSON file");
  auto* morse_seed = morse_cmd->add_option("--seed", seed, "Random greedy gradient");
  auto* morse_flow = morse_cmd->add_option("--flow", flow, "FlowData JSON file");
  morse_flow->excludes(morse_space)->excludes(morse_gradient)->excludes(morse_seed);
  morse_gradient->excludes(morse_seed);
  morse_cmd->add_flag("--count-broken", broken, "Count maximally (or --parts) broken trajectories");
  morse_cmd->add_option("--parts", parts, "Number of parts");

  auto* cond_cmd = app.add_subcommand("conditions", "Essential simplices and the four cell conditions");
  cond_cmd->add_option("--triple", triple, "Colored triple JSON file")->required();
  cond_cmd->add_flag("--eval", eval, "Evaluate the essential cellular norm of the representative");

  auto* verify_cmd = app.add_subcommand("verify", "Check the homology, norm and trajectory inequalities");
  verify_cmd->add_option("--space", space, "catalog:<name> or a JSON file")->required();
  auto* verify_gradient = verify_cmd->add_option("--gradient", gradient, "Gradient JSON file");
  verify_cmd->add_option("--seed", seed, "Random greedy gradient")->excludes(verify_gradient);
  verify_cmd->add_option("--norm", norm, "Supplied upper bound for the norm of the fundamental class");
  verify_cmd->add_option("--node-limit", node_limit, "Branch-and-bound node budget");
  verify_cmd->add_option("--log-base", base, "e or an integer >= 2");

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in spaces");
  auto* list_opt = catalog_cmd->add_flag("--list", list, "List names");
  catalog_cmd->add_option("--show", show, "Print one space")->excludes(list_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    Output out(output);
    if (node_limit == 0) node_limit = default_node_limit();
    if (*homology_cmd) return run_homology(space, degree, base, out);
    if (*norm_cmd) return run_norm(space, mode, cls, node_limit, out);
    if (*phi_cmd) return run_phi(*degree, json, out);
    if (*morse_cmd) {
      if (flow.empty() && space.empty()) throw Error(ErrorCode::invalid_input, "morse needs --space or --flow");
      return run_morse(space, gradient, seed, flow, broken, parts, out);
    }
    if (*cond_cmd) return run_conditions(triple, eval, out);
    if (*verify_cmd) return run_verify(space, gradient, seed, norm, node_limit, base, out);
    if (*catalog_cmd) return run_catalog(list, show, out);
  } catch (const Error& e) {
    std::cerr << Json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
