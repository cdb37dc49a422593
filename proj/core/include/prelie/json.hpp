#pragma once

// JSON forms of the value types.
//
//   tree      {"label": string|null, "children": [tree, ...]}
//   tree sum  [{"coeff": "<decimal>", "tree": tree}, ...]
//   integers  matrix entries are JSON numbers, or decimal strings past 64 bits
//   matrix    {"degree": n, "basis": [...], "entries": [[...]]}, plus
//             "row_basis" when rows and columns differ
//   basis     {"degree": n, "generator_order": [...], "monomials": [...]}

#include "prelie/coeff_matrix.hpp"
#include "prelie/monomial.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <nlohmann/json.hpp>

namespace prelie {

nlohmann::json to_json(const PlanarTree& t);
nlohmann::json to_json(const Tree& t);
nlohmann::json to_json(const TreeSum& sum);
nlohmann::json to_json(const CoeffMatrix& m);
nlohmann::json to_json(const MonomialBasis& basis);

/// Throw ParseError on schema violations.
PlanarTree planar_tree_from_json(const nlohmann::json& j);
Tree tree_from_json(const nlohmann::json& j);
TreeSum tree_sum_from_json(const nlohmann::json& j, Flavor flavor);
CoeffMatrix coeff_matrix_from_json(const nlohmann::json& j);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& value);

}  // namespace prelie
