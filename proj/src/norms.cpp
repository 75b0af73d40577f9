#include "ivol/norms.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ivol/error.hpp"
#include "ivol/lp.hpp"
#include "ivol/oriented.hpp"
#include "ivol/smith.hpp"

namespace ivol {

const char* mode_name(NormMode mode) {
  return mode == NormMode::integral ? "integral" : "oriented";
}

namespace {

struct Bound {
  std::optional<Integer> lower;
  std::optional<Integer> upper;
};

struct LatticeLp {
  const std::vector<Integer>& target;
  const IntMatrix& basis;  // full column rank

  // Variables: r+ (n), r- (n), y+ (k), y- (k), one slack per bound row.
  LpSolution solve(const std::vector<Bound>& bounds) const {
    const std::size_t n = target.size();
    const std::size_t k = basis.cols();
    std::size_t slacks = 0;
    for (const auto& b : bounds) slacks += (b.lower ? 1 : 0) + (b.upper ? 1 : 0);
    const std::size_t cols = 2 * n + 2 * k + slacks;

    LinearProgram lp;
    lp.c.assign(cols, Rational(0));
    for (std::size_t i = 0; i < 2 * n; ++i) lp.c[i] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(cols);
      row[i] = 1;
      row[n + i] = -1;
      for (std::size_t j = 0; j < k; ++j) {
        row[2 * n + j] = -basis(i, j);
        row[2 * n + k + j] = basis(i, j);
      }
      lp.A.push_back(std::move(row));
      lp.b.emplace_back(target[i]);
    }
    std::size_t s = 2 * n + 2 * k;
    for (std::size_t j = 0; j < k; ++j) {
      auto bound_row = [&](const Integer& value, int slack_sign) {
        std::vector<Rational> row(cols);
        row[2 * n + j] = 1;
        row[2 * n + k + j] = -1;
        row[s++] = slack_sign;
        lp.A.push_back(std::move(row));
        lp.b.emplace_back(value);
      };
      if (bounds[j].lower) bound_row(*bounds[j].lower, -1);
      if (bounds[j].upper) bound_row(*bounds[j].upper, 1);
    }
    return solve_lp(lp);
  }

  std::vector<Rational> coefficients(const LpSolution& sol) const {
    const std::size_t n = target.size();
    const std::size_t k = basis.cols();
    std::vector<Rational> y(k);
    for (std::size_t j = 0; j < k; ++j) y[j] = sol.x[2 * n + j] - sol.x[2 * n + k + j];
    return y;
  }

  Integer evaluate(const std::vector<Integer>& y) const {
    Integer total = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      Integer r = target[i];
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] != 0 && basis(i, j) != 0) r += basis(i, j) * y[j];
      }
      total += abs(r);
    }
    return total;
  }
};

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_of(const Rational& q) { return floor_of(q + Rational(1, 2)); }

// Basis of the image lattice of `generators` read off its Smith form, with
// the change of coordinates back to the original generator coefficients.
struct LatticeBasis {
  IntMatrix basis;        // n x r
  IntMatrix to_original;  // k x r: generator coefficients of each basis vector
};

LatticeBasis lattice_basis(const IntMatrix& generators) {
  const auto smith = smith_normal_form(generators);
  const std::size_t r = smith.rank();
  LatticeBasis lb{IntMatrix(generators.rows(), r), IntMatrix(generators.cols(), r)};
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < generators.rows(); ++i) lb.basis(i, j) = smith.S(j, j) * smith.U_inverse(i, j);
    for (std::size_t i = 0; i < generators.cols(); ++i) lb.to_original(i, j) = smith.V(i, j);
  }
  return lb;
}

}  // namespace

L1Solution minimize_l1_over_lattice(const std::vector<Integer>& target, const IntMatrix& generators,
                                    const NormOptions& options) {
  if (generators.rows() != target.size()) {
    throw Error(ErrorCode::invalid_input, "lattice generators do not match target length");
  }
  const LatticeBasis lb = lattice_basis(generators);
  const std::size_t k = lb.basis.cols();
  const LatticeLp problem{target, lb.basis};

  L1Solution best;
  best.value = l1_norm(target);
  std::vector<Integer> best_y(k);
  best.certificate.lattice_rank = k;
  best.certificate.node_limit = options.node_limit;

  // branching priority: heavier lattice columns first
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j) order[j] = j;
  std::vector<Integer> weight(k);
  for (std::size_t j = 0; j < k; ++j) weight[j] = l1_norm(lb.basis.column(j));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });

  struct Node {
    std::vector<Bound> bounds;
    std::size_t depth;
  };
  std::vector<Node> stack;
  stack.push_back({std::vector<Bound>(k), 0});
  bool root = true;
  bool exhausted = true;
  std::optional<Rational> open_bound;

  while (!stack.empty()) {
    if (best.certificate.nodes >= options.node_limit) {
      exhausted = false;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++best.certificate.nodes;
    best.certificate.max_depth = std::max(best.certificate.max_depth, node.depth);

    const LpSolution sol = problem.solve(node.bounds);
    if (sol.status != LpStatus::optimal) {
      ++best.certificate.pruned;
      continue;
    }
    if (root) {
      best.certificate.root_lp_bound = sol.value;
      root = false;
    }
    if (ceil_of(sol.value) >= best.value) {
      ++best.certificate.pruned;
      continue;
    }
    const auto y = problem.coefficients(sol);

    // rounding heuristic for a cheap incumbent
    std::vector<Integer> rounded(k);
    for (std::size_t j = 0; j < k; ++j) rounded[j] = round_of(y[j]);
    const Integer rounded_value = problem.evaluate(rounded);
    if (rounded_value < best.value) {
      best.value = rounded_value;
      best_y = rounded;
    }

    std::optional<std::size_t> branch;
    for (auto j : order) {
      if (y[j].get_den() != 1) {
        branch = j;
        break;
      }
    }
    if (!branch) {
      // integral LP optimum; the rounding step already recorded it
      continue;
    }
    if (ceil_of(sol.value) >= best.value) {
      ++best.certificate.pruned;
      continue;
    }
    Node up{node.bounds, node.depth + 1};
    Node down{std::move(node.bounds), node.depth + 1};
    up.bounds[*branch].lower = ceil_of(y[*branch]);
    down.bounds[*branch].upper = floor_of(y[*branch]);
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));  // floor branch explored first
  }
  if (!exhausted) {
    // every open node has an LP bound no smaller than its parent's; the root
    // bound is the only one valid for all of them without re-solving
    open_bound = best.certificate.root_lp_bound;
  }

  best.certificate.certified = exhausted;
  best.certificate.lower_bound = exhausted ? Rational(best.value) : *open_bound;
  if (k == 0) best.certificate.root_lp_bound = Rational(best.value);

  best.coefficients.assign(generators.cols(), Integer(0));
  for (std::size_t i = 0; i < generators.cols(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (best_y[j] != 0) best.coefficients[i] += lb.to_original(i, j) * best_y[j];
    }
  }
  return best;
}

Rational l1_lp_relaxation(const std::vector<Integer>& target, const IntMatrix& generators) {
  const LatticeBasis lb = lattice_basis(generators);
  if (lb.basis.cols() == 0) return Rational(l1_norm(target));
  const LatticeLp problem{target, lb.basis};
  return problem.solve(std::vector<Bound>(lb.basis.cols())).value;
}

namespace {

void require_cycle(const ChainComplex& c, const IntegerChain& z) {
  if (z.degree() > c.top_degree()) {
    throw Error(ErrorCode::degree_out_of_range, "cycle degree above complex dimension");
  }
  if (!c.apply_boundary(z).is_zero()) throw Error(ErrorCode::not_a_cycle, "input chain is not a cycle");
}

}  // namespace

NormResult minimize_norm_in_class(const ChainComplex& c, const IntegerChain& z,
                                  const NormOptions& options) {
  require_cycle(c, z);
  const std::size_t p = z.degree();
  const IntMatrix d = c.boundary_or_zero(p + 1);
  const auto target = z.to_dense(c.rank(p));
  const L1Solution sol = minimize_l1_over_lattice(target, d, options);

  NormResult result;
  result.mode = NormMode::integral;
  result.value = sol.value;
  const auto shift = d.apply(sol.coefficients);
  std::vector<Integer> rep(target.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = target[i] + shift[i];
  result.representative = IntegerChain::from_dense(p, rep);
  result.witness = result.representative;
  result.certificate = sol.certificate;
  return result;
}

NormResult minimize_norm_in_class(const DeltaComplex& k, const IntegerChain& z, NormMode mode,
                                  const NormOptions& options) {
  k.check_chain(z);
  const ChainComplex c = k.chain_complex();
  if (mode == NormMode::integral) return minimize_norm_in_class(c, z, options);

  require_cycle(c, z);
  const std::size_t p = z.degree();
  const OrbitProjection proj = orbit_projection(k, p);
  const IntMatrix d = c.boundary_or_zero(p + 1);
  const auto dense = z.to_dense(c.rank(p));
  const auto target = proj.matrix.apply(dense);
  const L1Solution sol = minimize_l1_over_lattice(target, proj.matrix * d, options);

  NormResult result;
  result.mode = NormMode::oriented;
  result.value = sol.value;
  const auto shift = d.apply(sol.coefficients);
  std::vector<Integer> rep(dense.size());
  for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = dense[i] + shift[i];
  result.representative = IntegerChain::from_dense(p, rep);

  const auto projected = proj.matrix.apply(rep);
  result.witness = IntegerChain(p);
  for (std::size_t o = 0; o < projected.size(); ++o) {
    result.witness.add(proj.representative[o], proj.representative_sign[o] * projected[o]);
  }
  result.certificate = sol.certificate;
  return result;
}

Rational lp_relaxation(const ChainComplex& c, const IntegerChain& z) {
  require_cycle(c, z);
  const std::size_t p = z.degree();
  return l1_lp_relaxation(z.to_dense(c.rank(p)), c.boundary_or_zero(p + 1));
}

Rational lp_relaxation(const DeltaComplex& k, const IntegerChain& z, NormMode mode) {
  k.check_chain(z);
  const ChainComplex c = k.chain_complex();
  if (mode == NormMode::integral) return lp_relaxation(c, z);
  require_cycle(c, z);
  const std::size_t p = z.degree();
  const OrbitProjection proj = orbit_projection(k, p);
  const IntMatrix d = c.boundary_or_zero(p + 1);
  return l1_lp_relaxation(proj.matrix.apply(z.to_dense(c.rank(p))), proj.matrix * d);
}

NormComparison check_norm_comparison(const DeltaComplex& k, const IntegerChain& z,
                                     const NormOptions& options) {
  NormComparison cmp;
  cmp.degree = z.degree();
  cmp.oriented = minimize_norm_in_class(k, z, NormMode::oriented, options);
  cmp.integral = minimize_norm_in_class(k, z, NormMode::integral, options);
  cmp.factor = factorial(z.degree() + 1);
  cmp.lower_holds = cmp.oriented.value <= cmp.integral.value;
  cmp.upper_holds = cmp.integral.value <= cmp.factor * cmp.oriented.value;
  return cmp;
}

}  // namespace ivol
