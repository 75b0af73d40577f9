#pragma once

#include <string>

#include "json.hpp"

#include "ivol/barr.hpp"
#include "ivol/bounds.hpp"
#include "ivol/cellular.hpp"
#include "ivol/chain.hpp"
#include "ivol/complex.hpp"
#include "ivol/homology.hpp"
#include "ivol/morse.hpp"
#include "ivol/norms.hpp"

namespace ivol {

// Object keys are kept sorted, so dump() is byte-stable.
using Json = nlohmann::json;

// Reads a file and parses it; parse_error on malformed JSON.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

// Integers are JSON numbers when they fit in 64 bits, decimal strings
// otherwise; both forms are accepted on input.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Integer integer_from_json(const Json& j);

Json to_json(const SimplexId& s);
SimplexId simplex_id_from_json(const Json& j);

// {"dims": d, "vertices": n, "simplices": [[facets of each 1-simplex], ...]}
// or {"tuples": [[v0, v1, ...], ...]}
DeltaComplex complex_from_json(const Json& j);
Json to_json(const DeltaComplex& k);

// {"ranks": [n_0, ...], "boundaries": [d_1 rows, d_2 rows, ...]}
ChainComplex chain_complex_from_json(const Json& j);
Json to_json(const ChainComplex& c);

// {"degree": p, "coefficients": [[index, value], ...]}
IntegerChain chain_from_json(const Json& j);
Json to_json(const IntegerChain& c);

// {"generators": g | [names], "relators": [[[name, exponent], ...], ...]}
Presentation presentation_from_json(const Json& j);

// {"pairs": [[[p, i], [p+1, j]], ...]}
Matching matching_from_json(const Json& j);
Json to_json(const Matching& m);

// {"critical": {"0": [names], "1": [...]} or [[names], ...],
//  "lines": [{"from": a, "to": b, "sign": 1, "count": k}, ...]}
FlowData flow_data_from_json(const Json& j);

// {"cells": {"name": dim}, "relations": [["lower", "upper"], ...]}
CWPoset poset_from_json(const Json& j);

// {"sigma": complex, "cycle": chain (default: fundamental cycle),
//  "labels": {"p:i": cell}, "vertex_images": {"v": point},
//  "coloring": {"v": color}, "nullhomotopic_edges": [edge indices],
//  "poset": poset}
ColoredTriple triple_from_json(const Json& j);

Json to_json(const HomologyGroup& h, const LogBase& base);
Json to_json(const SearchCertificate& c);
Json to_json(const NormResult& r);
Json to_json(const FlagChain& c);
Json to_json(const MorseComplex& m);
Json to_json(const ConditionReport& r);
Json to_json(const LogExpr& e, const LogBase& base);
Json to_json(const BoundReport& r);

}  // namespace ivol
