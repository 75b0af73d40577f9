#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/complex.hpp"
#include "ivol/integer.hpp"

namespace ivol {

// Cells with dimensions and the least partial order containing the declared
// relations (lower, upper).
class CWPoset {
 public:
  CWPoset() = default;
  // Throws invalid_input if the closure is not antisymmetric or some relation
  // lowers the dimension; unknown_cell for undeclared names.
  CWPoset(std::map<std::string, std::size_t> cells,
          const std::vector<std::pair<std::string, std::string>>& relations);

  bool contains(const std::string& cell) const { return dims_.contains(cell); }
  std::size_t dimension(const std::string& cell) const;
  bool leq(const std::string& a, const std::string& b) const;
  const std::map<std::string, std::size_t>& cells() const noexcept { return dims_; }
  const std::vector<std::pair<std::string, std::string>>& relations() const noexcept { return declared_; }

 private:
  std::map<std::string, std::size_t> dims_;
  std::set<std::pair<std::string, std::string>> order_;
  std::vector<std::pair<std::string, std::string>> declared_;
};

// Neither a <= b nor b <= a. Throws unknown_cell.
bool incomparable(const CWPoset& p, const std::string& a, const std::string& b);

// Simplicial triple: a pseudomanifold with a top-degree cycle, the cell label
// of every face and the image point of every vertex, plus a partial vertex
// coloring and the edges whose image loops are declared nullhomotopic.
struct ColoredTriple {
  DeltaComplex sigma;
  IntegerChain cycle;
  std::map<SimplexId, std::string> labels;
  std::map<std::size_t, std::string> vertex_images;
  std::map<std::size_t, long> coloring;
  std::set<std::size_t> nullhomotopic_edges;
};

std::map<std::size_t, long> induced_edge_coloring(const ColoredTriple& t);

struct Essentiality {
  std::vector<std::size_t> essential;
  std::vector<std::size_t> repeated_color;  // clause (1)
  std::vector<std::size_t> trivial_loop;    // clause (2), not already (1)
};

// Clauses compare distinct corner positions of a top simplex.
Essentiality essential_simplices(const ColoredTriple& t);
Integer essential_count(const ColoredTriple& t);

enum class Condition { cellular, order, internality, loop };
const char* condition_name(Condition c);

struct ConditionFailure {
  Condition condition;
  SimplexId simplex;
  std::string detail;
};

struct ConditionReport {
  bool cellular = true;
  bool order = true;
  bool internality = true;
  bool loop = true;
  std::vector<ConditionFailure> failures;
  bool passes() const { return cellular && order && internality && loop; }
};

// Throws missing_label when some face carries no label.
//   cellular: labels name known cells and label(facet) <= label(face)
//   order: the labels on the faces of a top simplex are pairwise comparable
//   internality: a face whose facets all carry e carries e
//   loop: an edge whose endpoints share an image point carries that point,
//         which must be a 0-cell
ConditionReport check_conditions(const ColoredTriple& t, const CWPoset& p);

struct CellularEvaluation {
  ConditionReport report;
  std::optional<Integer> value;  // empty when a condition fails
};

// Colors every vertex by its own label (one color per open cell) and returns
// the essential count when all four conditions hold.
CellularEvaluation essential_cellular_eval(const ColoredTriple& t, const CWPoset& p);

// Barycentric subdivision of a Delta-complex. A k-simplex is a top cell s of
// K with nested corner sets S_0 < ... < S_k = corners(s); its vertex order is
// (b_{S_k}, ..., b_{S_0}).
struct Subdivision {
  DeltaComplex complex;
  // Cell of K whose interior contains the open simplex.
  std::vector<std::vector<SimplexId>> carrier;
  // Vertex of the subdivision -> the cell it is the barycenter of.
  std::vector<SimplexId> vertex_cell;
};

Subdivision barycentric_subdivision(const DeltaComplex& k);

}  // namespace ivol
