#include <doctest.h>

#include "cli.hpp"
#include "fixtures.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>

using namespace prelie;
using prelie::cli::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a == "@SECTION_FILE@") a = testing::fixture_path("section4_alt.txt");
    if (a == "@MONOMIAL_FILE@") a = testing::fixture_path("b1.monomials");
  }
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("every library operation is reachable") {
  const std::set<std::string> ops{
      "parse", "serialize", "enumerate_planar", "enumerate_nonplanar", "canonical_index",
      "potential_energy", "symmetry_factor", "vertex_order", "binary_join", "rotation",
      "enumerate_binary", "left_butcher", "butcher", "left_graft", "graft", "bilinear_extend",
      "decompose", "split_leftmost_branch", "psi", "psi_inverse", "coeff_c_recursive",
      "coeff_c_bijections", "psi_matrix", "n_statistic", "verify_a088716", "forget_planarity",
      "planar_embeddings", "psi_bar", "count_tilde_b", "alpha", "alpha_matrix", "default_section",
      "all_sections", "section_parse", "psi_tilde", "beta_matrix", "monomial_parse",
      "load_monomial_list", "evaluate", "lower_energy_term", "planar_monomial", "ag_basis",
      "ag_basis_multigen", "expand_basis", "is_tree_grounded", "section_of_basis",
      "basis_of_section", "prelie_defect", "nap_holds", "check_identity_exhaustive",
      "check_identity_sampled", "tree_sum_parse", "to_json"};
  std::set<std::string> registered;
  for (const auto& entry : cli::op_registry()) {
    registered.insert(std::string(entry.library_op));
    CAPTURE(entry.library_op);
    const Run r = run(entry.example);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
    CHECK(r.err.empty());
  }
  CHECK(registered == ops);
}

TEST_CASE("enumerate") {
  Run r = run({"enumerate", "nonplanar", "--degree", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "(((())))\n((()()))\n((())())\n(()()())\ncount 4\n");
  r = run({"enumerate", "planar", "--degree", "1"});
  CHECK(r.out == "()\ncount 1\n");
  r = run({"--format", "json", "enumerate", "planar", "--degree", "6"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 42);
  CHECK(j["trees"].size() == 42);
  r = run({"--format", "csv", "enumerate", "binary", "--degree", "3"});
  CHECK(r.out == "index,tree\n0,\"[[.,.],.]\"\n1,\"[.,[.,.]]\"\n");
}

TEST_CASE("compute") {
  Run r = run({"compute", "coeff", "--sigma", "(()(()))", "--tau", "(()()())", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "recursive: 2\n"));
  CHECK(contains(r.out, "bijections: 2\n"));
  CHECK(contains(r.out, "match: true\n"));
  r = run({"compute", "psi", "--tree", "()"});
  CHECK(r.out == "()\n");
  r = run({"compute", "psi", "--tree", "(()())"});
  CHECK(r.out == "((())) + (()())\n");
  r = run({"compute", "psi-inverse", "--tree", "(()())"});
  CHECK(r.out == "-((())) + (()())\n");
  r = run({"--format", "json", "compute", "expand", "--ag", "--degree", "5"});
  const auto m = nlohmann::json::parse(r.out);
  CHECK(m["entries"].size() == 9);
  bool six = false;
  for (const auto& row : m["entries"]) {
    CHECK(row.size() == 9);
    for (const auto& e : row) six = six || e == 6;
  }
  CHECK(six);
  r = run({"--format", "json", "compute", "alpha", "--s", "(()())", "--tau", "(()())"});
  const auto a = nlohmann::json::parse(r.out);
  CHECK(a["alpha_fiber"] == 1);
  CHECK(a["tilde_b"] == 2);
  CHECK(a["sym"] == 2);
  r = run({"compute", "product", "--kind", "graft", "--left", "()", "--right", "(())"});
  CHECK(r.out == "((())) + (()())\n");
  r = run({"compute", "grounded", "--monomials-file", testing::fixture_path("b3.monomials")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "grounded: false"));
  r = run({"compute", "grounded", "--monomial", "[g,[g,g]]", "--monomial", "[[g,g],g]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "grounded: true"));
}

TEST_CASE("verify") {
  Run r = run({"verify", "sequences", "--max-degree", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,1,3,14,85"));
  r = run({"--format", "json", "verify", "identities", "--max-degree", "7", "--seed", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "identities");
  for (const auto& check : j["checks"]) CHECK(check["status"] == "pass");
  r = run({"verify", "oracle", "--max-degree", "6"});
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(run({"verify", "tree-grounded"}).code == 0);
  CHECK(run({"verify", "matrices"}).code == 0);
}

TEST_CASE("sections") {
  Run r = run({"section", "validate", "--file", testing::fixture_path("section4_alt.txt"), "--degree", "4"});
  CHECK(r.code == 0);
  r = run({"section", "show", "--default", "3"});
  CHECK(r.out == "() => ()\n(()) => (())\n((())) => ((()))\n(()()) => (()())\n");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "verify", "identities", "--seed", "9"},
      {"--format", "csv", "compute", "alpha-matrix", "--degree", "5"},
      {"compute", "basis", "--degree", "3", "--alphabet", "a,b"},
      {"--format", "json", "compute", "psi", "--tree", "(()()()())"}};
  for (const auto& c : commands) {
    const Run first = run(c);
    const Run second = run(c);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kBadArguments);
  CHECK(run({"frobnicate"}).code == cli::kBadArguments);
  CHECK(run({"enumerate", "planar", "--degree", "4", "--bogus"}).code == cli::kBadArguments);
  CHECK(run({"compute", "psi", "--tree", "(()"}).code == cli::kBadArguments);
  CHECK(run({"compute", "product", "--kind", "times", "--left", "()", "--right", "()"}).code ==
        cli::kBadArguments);
  CHECK(run({"--format", "xml", "enumerate", "planar", "--degree", "2"}).code == cli::kBadArguments);
  CHECK(run({"compute", "coeff", "--sigma", "()", "--tau", "(())", "--method", "bijections"}).code ==
        cli::kBadArguments);
  CHECK(run({"section", "validate", "--file", testing::fixture_path("b1.monomials")}).code ==
        cli::kBadArguments);
  Run r = run({"enumerate", "planar", "--degree", "13"});
  CHECK(r.code == cli::kDegreeCap);
  CHECK(contains(r.err, "error:"));
  CHECK(run({"compute", "psi-matrix", "--degree", "10"}).code == cli::kDegreeCap);
  CHECK(run({"verify", "oracle", "--max-degree", "9"}).code == cli::kDegreeCap);
  CHECK(run({"--brute-force-cap", "3", "compute", "coeff", "--sigma", "(()(()))", "--tau",
             "(()()())", "--method", "bijections"})
            .code == cli::kDegreeCap);
  CHECK(run({"--degree-cap", "5", "enumerate", "planar", "--degree", "6"}).code == cli::kDegreeCap);
}

TEST_CASE("the degree cap follows the environment") {
  ::setenv("PRELIE_MAX_DEGREE", "5", 1);
  CHECK(run({"enumerate", "planar", "--degree", "6"}).code == cli::kDegreeCap);
  CHECK(run({"enumerate", "planar", "--degree", "5"}).code == 0);
  CHECK(run({"--degree-cap", "6", "enumerate", "planar", "--degree", "6"}).code == 0);
  ::setenv("PRELIE_MAX_DEGREE", "many", 1);
  CHECK(run({"enumerate", "planar", "--degree", "2"}).code == cli::kBadArguments);
  ::unsetenv("PRELIE_MAX_DEGREE");
  CHECK(run({"enumerate", "planar", "--degree", "6"}).code == 0);
}
