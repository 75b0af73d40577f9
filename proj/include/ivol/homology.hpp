#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/integer.hpp"

namespace ivol {

// Finitely generated abelian group Z^betti + Z/t_1 + ... + Z/t_k with
// t_i >= 2 and t_1 | t_2 | ... | t_k.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  Integer torsion_order() const;
  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  std::string to_string() const;

  // Brings an arbitrary list of cyclic orders into invariant-factor form.
  static HomologyGroup from_cyclic_orders(std::size_t betti, const std::vector<Integer>& orders);

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

HomologyGroup homology(const ChainComplex& c, std::size_t p);
std::vector<HomologyGroup> homology_all(const ChainComplex& c);

// Logarithm base shared by every size computation. An empty integer base
// means the natural logarithm.
struct LogBase {
  std::optional<unsigned long> integer_base;

  static LogBase natural() { return {}; }
  static LogBase of(unsigned long b) { return LogBase{b}; }
  double log(const Integer& x) const;
  std::string name() const;
};

// rank + log |tors|
double size(const HomologyGroup& h, LogBase base = LogBase::natural());

// Words are sequences of (generator name, exponent).
using Word = std::vector<std::pair<std::string, long>>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// Commutator [a, b] = a b a^-1 b^-1 as a word.
Word commutator(const std::string& a, const std::string& b);

IntMatrix relation_matrix(const Presentation& pres);
HomologyGroup abelianization(const Presentation& pres);

struct HomologyObstruction {
  std::size_t coordinate = 0;  // index in the Smith basis
  Integer value;               // (U b)_i
  Integer divisor;             // d_i, or 0 beyond the rank
};

struct HomologousResult {
  bool homologous = false;
  std::optional<IntegerChain> witness;  // w with z1 - z2 = d w
  std::optional<HomologyObstruction> obstruction;
};

HomologousResult homologous(const ChainComplex& c, const IntegerChain& z1, const IntegerChain& z2);

}  // namespace ivol
