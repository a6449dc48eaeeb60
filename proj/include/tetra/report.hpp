#pragma once

// JSON and CSV renderings shared by the CLI and the Python module.

#include "tetra/arith.hpp"
#include "tetra/codes.hpp"
#include "tetra/discrepancy.hpp"
#include "tetra/lattice.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tetra {

using Json = nlohmann::ordered_json;

Json to_json(const ParamPoint& p);
Json to_json(const ExponentVector& e);
/// {"text": "...", "terms": [{"monomial": [i,j,k,l], "coefficient": "p/q"}]}
Json to_json(const ParamPolynomial& q);
Json to_json(const F3Vector& v);
Json to_json(const TernaryCode& c);
/// {"lattice", "generators" (list of generator vectors), "hnf" (list of HNF columns), "covolume"}
Json to_json(const Lattice& l);
Json to_json(const std::vector<CollapsedTerm>& rows);
Json to_json(const Certificate& c);

ParamPoint param_point_from_json(const Json& j);
ExponentVector exponent_from_json(const Json& j);
ParamPolynomial polynomial_from_json(const Json& j);

/// "exponent,coefficient" header plus one row per term, exact rationals.
std::string to_csv(const std::vector<CollapsedTerm>& rows);

}  // namespace tetra
