#include "ivol/homology.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ivol/error.hpp"
#include "ivol/smith.hpp"

namespace ivol {

Integer HomologyGroup::torsion_order() const {
  Integer t = 1;
  for (const auto& x : torsion) t *= x;
  return t;
}

std::string HomologyGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << '^' << betti;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyGroup HomologyGroup::from_cyclic_orders(std::size_t betti,
                                                const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  HomologyGroup h;
  h.betti = betti;
  for (const auto& d : smith_normal_form(diag).invariant_factors()) {
    if (d > 1) h.torsion.push_back(d);
  }
  // zero orders contribute free summands
  for (const auto& o : orders)
    if (o == 0) ++h.betti;
  return h;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return HomologyGroup::from_cyclic_orders(a.betti + b.betti, orders);
}

HomologyGroup homology(const ChainComplex& c, std::size_t p) {
  if (p > c.top_degree()) {
    throw Error(ErrorCode::degree_out_of_range,
                "homology degree " + std::to_string(p) + " outside 0.." +
                    std::to_string(c.top_degree()));
  }
  const auto in = smith_normal_form(c.boundary_or_zero(p + 1));
  const std::size_t out_rank = p == 0 ? 0 : smith_normal_form(c.boundary_or_zero(p)).rank();
  HomologyGroup h;
  h.betti = c.rank(p) - out_rank - in.rank();
  for (const auto& d : in.invariant_factors()) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

std::vector<HomologyGroup> homology_all(const ChainComplex& c) {
  std::vector<HomologyGroup> out;
  for (std::size_t p = 0; p <= c.top_degree(); ++p) out.push_back(homology(c, p));
  return out;
}

double LogBase::log(const Integer& x) const {
  // log of a big integer via mantissa/exponent to stay finite for huge x
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  const double ln = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  if (!integer_base) return ln;
  return ln / std::log(static_cast<double>(*integer_base));
}

std::string LogBase::name() const {
  return integer_base ? std::to_string(*integer_base) : std::string("e");
}

double size(const HomologyGroup& h, LogBase base) {
  return static_cast<double>(h.betti) + base.log(h.torsion_order());
}

Word commutator(const std::string& a, const std::string& b) {
  return {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
}

IntMatrix relation_matrix(const Presentation& pres) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    if (!index.emplace(pres.generators[i], i).second) {
      throw Error(ErrorCode::invalid_input, "duplicate generator '" + pres.generators[i] + "'");
    }
  }
  IntMatrix m(pres.relators.size(), pres.generators.size());
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (const auto& [name, exponent] : pres.relators[r]) {
      auto it = index.find(name);
      if (it == index.end()) {
        throw Error(ErrorCode::undefined_generator,
                    "relator " + std::to_string(r) + " uses undefined generator '" + name + "'");
      }
      m(r, it->second) += exponent;
    }
  }
  return m;
}

HomologyGroup abelianization(const Presentation& pres) {
  const auto smith = smith_normal_form(relation_matrix(pres));
  HomologyGroup h;
  h.betti = pres.generators.size() - smith.rank();
  for (const auto& d : smith.invariant_factors()) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

HomologousResult homologous(const ChainComplex& c, const IntegerChain& z1, const IntegerChain& z2) {
  if (z1.degree() != z2.degree()) throw Error(ErrorCode::invalid_input, "cycles of different degree");
  const std::size_t p = z1.degree();
  if (p > c.top_degree()) throw Error(ErrorCode::degree_out_of_range, "cycle degree above complex");
  if (!c.apply_boundary(z1).is_zero() || !c.apply_boundary(z2).is_zero()) {
    throw Error(ErrorCode::not_a_cycle, "homologous: inputs must be cycles");
  }

  const IntMatrix d = c.boundary_or_zero(p + 1);
  const auto diff = (z1 - z2).to_dense(c.rank(p));
  const auto smith = smith_normal_form(d);
  const auto ub = smith.U.apply(diff);
  const std::size_t r = smith.rank();

  HomologousResult result;
  std::vector<Integer> y(d.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), smith.S(i, i).get_mpz_t())) {
        result.obstruction = HomologyObstruction{i, ub[i], smith.S(i, i)};
        return result;
      }
      y[i] = ub[i] / smith.S(i, i);
    } else if (ub[i] != 0) {
      result.obstruction = HomologyObstruction{i, ub[i], Integer(0)};
      return result;
    }
  }
  result.homologous = true;
  result.witness = IntegerChain::from_dense(p + 1, smith.V.apply(y));
  return result;
}

}  // namespace ivol
