#pragma once

// Readers for the files in tests/fixtures.

#include "prelie/coeff_matrix.hpp"
#include "prelie/monomial.hpp"
#include "prelie/tree_sum.hpp"

#include <string>
#include <vector>

namespace prelie::testing {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

/// Matrices stored as "degree n", "basis ...", then one row per line.
std::vector<CoeffMatrix> load_matrices(const std::string& name);

struct Expansion {
  std::size_t degree = 0;
  MonomialExpr monomial;
  TreeSum expansion{Flavor::NonPlanar};
};

std::vector<Expansion> load_expansions(const std::string& name);

/// Whitespace-separated integers of the first non-comment line.
std::vector<Integer> load_integers(const std::string& name);

/// Expected verdict from a "# expect: grounded" / "# expect: not grounded" header.
bool expected_grounded(const std::string& name);

}  // namespace prelie::testing
