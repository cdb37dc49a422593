#include "verify.hpp"

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/identities.hpp"
#include "prelie/monomial.hpp"
#include "prelie/projection.hpp"
#include "prelie/psi.hpp"
#include "prelie/statistics.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace prelie::cli {

namespace {

std::string join(const std::vector<Integer>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

std::string n_str(std::size_t n) { return std::to_string(n); }

Report identities(std::size_t max_degree, const VerifyOptions& options, const Limits& limits) {
  Report report{"identities", {}};
  for (Identity id : {Identity::PreLie, Identity::Nap}) {
    const IdentityReport r = check_identity_exhaustive(id, max_degree, limits);
    std::string detail = n_str(r.triples_checked) + " triples with total degree <= " + n_str(max_degree);
    if (!r.passed()) detail += ", first counterexample " + r.counterexamples.front();
    report.add(std::string(identity_name(id)) + " exhaustive", r.passed(), detail);
  }
  if (options.samples > 0 && max_degree + 2 <= limits.max_degree) {
    for (Identity id : {Identity::PreLie, Identity::Nap}) {
      const IdentityReport r = check_identity_sampled(id, max_degree + 1, max_degree + 2,
                                                      options.samples, options.seed, limits);
      std::string detail = n_str(r.triples_checked) + " random triples with total degree " +
                           n_str(max_degree + 1) + ".." + n_str(max_degree + 2) + ", seed " +
                           std::to_string(options.seed);
      if (!r.passed()) detail += ", first counterexample " + r.counterexamples.front();
      report.add(std::string(identity_name(id)) + " sampled", r.passed(), detail);
    }
  }
  return report;
}

Report sequences(std::size_t max_degree, const Limits& limits) {
  static const std::array<int, 5> known = {1, 1, 3, 14, 85};
  Report report{"sequences", {}};
  const SequenceReport r = verify_a088716(max_degree, limits);
  report.add("direct sums", true, join(r.direct));
  report.add("recursion sum_{p+q=n} N_p N_q q", r.recursion_matches(), join(r.recursive));
  for (const auto& check : r.ode) {
    report.add("ode order " + n_str(check.order), check.ok(),
               "a_k = " + to_string(check.lhs) + ", rhs = " + to_string(check.rhs));
  }
  const std::size_t prefix = std::min(max_degree, known.size());
  bool prefix_ok = true;
  for (std::size_t i = 0; i < prefix; ++i) prefix_ok = prefix_ok && r.direct[i] == known[i];
  report.add("known prefix 1,1,3,14,85", prefix_ok, "first " + n_str(prefix) + " terms compared");
  const std::size_t counted = std::min<std::size_t>(max_degree, 8);
  bool counts_ok = true;
  for (std::size_t n = 1; n <= counted; ++n) {
    for (const auto& sigma : enumerate_planar(n, limits)) {
      counts_ok = counts_ok && psi(sigma).coefficient_sum() == n_statistic(sigma);
    }
  }
  report.add("N(sigma) = term count of psi(sigma)", counts_ok, "all planar trees up to degree " + n_str(counted));
  return report;
}

CoeffMatrix psi_inverse_matrix(std::size_t n, const Limits& limits) {
  const auto& basis = enumerate_planar(n, limits);
  std::vector<std::string> labels;
  for (const auto& t : basis) labels.push_back(t.serialize());
  CoeffMatrix m(n, labels, labels);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const TreeSum column = psi_inverse(basis[col]);
    for (const auto& [tree, coeff] : column.terms()) m.at(canonical_index(tree, limits), col) = coeff;
  }
  return m;
}

Report matrices(std::size_t max_degree, const Limits& limits) {
  Report report{"matrices", {}};
  const CoeffMatrix m3 = psi_matrix(3, limits);
  report.add("psi matrix degree 3 fixture", m3.at(0, 0) == 1 && m3.at(0, 1) == 1 && m3.at(1, 0) == 0 &&
                                                m3.at(1, 1) == 1,
             "[[1,1],[0,1]]");
  check_degree(max_degree, limits.matrix_max_degree, "verify matrices");
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const CoeffMatrix m = psi_matrix(n, limits);
    report.add("psi matrix degree " + n_str(n) + " unitriangular", m.is_upper_unitriangular(),
               n_str(m.rows()) + " planar trees");
    report.add("psi matrix degree " + n_str(n) + " inverse", (m * psi_inverse_matrix(n, limits)).is_identity(),
               "psi_matrix times the psi_inverse columns");
    const CoeffMatrix a = alpha_matrix(n, limits);
    const auto& planar = enumerate_planar(n, limits);
    bool sums_ok = true;
    for (std::size_t col = 0; col < planar.size(); ++col) {
      sums_ok = sums_ok && a.column_sum(col) == n_statistic(planar[col]);
    }
    report.add("alpha matrix degree " + n_str(n) + " column sums = N", sums_ok, "");
    const CoeffMatrix b = beta_matrix(default_section(n, limits), n, limits);
    report.add("beta matrix degree " + n_str(n) + " default section unitriangular", b.is_upper_unitriangular(), "");
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_degree, 5); ++n) {
    const auto sections = all_sections(n, limits);
    std::size_t good = 0;
    for (const auto& s : sections) good += beta_matrix(s, n, limits).is_upper_unitriangular() ? 1 : 0;
    report.add("beta matrix degree " + n_str(n) + " every section unitriangular", good == sections.size(),
               n_str(good) + "/" + n_str(sections.size()) + " sections");
  }
  for (std::size_t n = 1; n <= max_degree; ++n) {
    bool ok = true;
    for (const auto& sigma : enumerate_planar(n, limits)) {
      const TreeSum rest = psi(sigma) - TreeSum(sigma);
      for (const auto& [tree, coeff] : rest.terms()) {
        ok = ok && tree.potential_energy() > sigma.potential_energy();
      }
    }
    report.add("psi(sigma) - sigma above d(sigma), degree " + n_str(n), ok, "");
  }
  return report;
}

Report oracle(std::size_t max_degree, const Limits& limits) {
  Report report{"oracle", {}};
  check_degree(max_degree, limits.brute_force_max, "verify oracle");
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const auto& planar = enumerate_planar(n, limits);
    std::size_t mismatches = 0;
    std::string first;
    for (const auto& sigma : planar) {
      for (const auto& tau : planar) {
        if (coeff_c_recursive(sigma, tau) != coeff_c_bijections(sigma, tau, limits)) {
          if (mismatches++ == 0) first = ", first " + sigma.serialize() + " " + tau.serialize();
        }
      }
    }
    report.add("c recursive = bijections, degree " + n_str(n), mismatches == 0,
               n_str(planar.size() * planar.size()) + " pairs, " + n_str(mismatches) + " mismatches" + first);
    const auto& trees = enumerate_nonplanar(n, limits);
    mismatches = 0;
    first.clear();
    for (const auto& s : trees) {
      const Integer sym = symmetry_factor(s);
      for (const auto& tau : planar) {
        if (alpha(s, tau) * sym != count_tilde_b(s, tau, limits)) {
          if (mismatches++ == 0) first = ", first " + s.serialize() + " " + tau.serialize();
        }
      }
    }
    report.add("alpha * sym = tilde b, degree " + n_str(n), mismatches == 0,
               n_str(trees.size() * planar.size()) + " pairs, " + n_str(mismatches) + " mismatches" + first);
  }
  return report;
}

// Degree-4 example bases: two tree-grounded, two not.
struct ExampleBasis {
  const char* name;
  std::array<const char*, 4> monomials;
  bool grounded;
};

constexpr std::array<ExampleBasis, 4> kExampleBases = {{
    {"b1", {"[[[g,g],g],g]", "[[g,[g,g]],g]", "[[g,g],[g,g]]", "[g,[g,[g,g]]]"}, true},
    {"b2", {"[[[g,g],g],g]", "[[g,[g,g]],g]", "[g,[[g,g],g]]", "[g,[g,[g,g]]]"}, true},
    {"b3", {"[[[g,g],g],g]", "[[g,g],[g,g]]", "[g,[[g,g],g]]", "[g,[g,[g,g]]]"}, false},
    {"b4", {"[[g,[g,g]],g]", "[[g,g],[g,g]]", "[g,[[g,g],g]]", "[g,[g,[g,g]]]"}, false},
}};

std::string witness(const GroundingReport& r) {
  std::string out;
  for (const auto& t : r.missing) out += (out.empty() ? "missing " : " ") + t.serialize();
  std::string dup;
  for (const auto& t : r.duplicated) dup += (dup.empty() ? "duplicated " : " ") + t.serialize();
  if (!dup.empty()) out += (out.empty() ? "" : "; ") + dup;
  return out.empty() ? "grounded" : out;
}

Report tree_grounded(std::size_t max_degree, const Limits& limits) {
  Report report{"tree-grounded", {}};
  for (const auto& example : kExampleBases) {
    std::vector<MonomialExpr> monomials;
    for (const char* m : example.monomials) monomials.push_back(MonomialExpr::parse(m));
    const GroundingReport r = is_tree_grounded(monomials, 4, limits);
    report.add("example basis " + std::string(example.name) + (example.grounded ? " grounded" : " not grounded"),
               r.grounded == example.grounded, witness(r));
  }
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const MonomialBasis basis = ag_basis(n, {}, limits);
    const GroundingReport r = is_tree_grounded(basis.monomials, n, limits);
    report.add("ag basis degree " + n_str(n) + " grounded", r.grounded,
               n_str(basis.monomials.size()) + " monomials, " + witness(r));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_degree, 5); ++n) {
    const auto sections = all_sections(n, limits);
    std::size_t good = 0;
    for (const auto& s : sections) {
      const MonomialBasis basis = basis_of_section(s, n, limits);
      const bool ok = section_of_basis(basis.monomials, n, limits) == s &&
                      expand_basis(basis, ColumnOrder::LowerEnergyTerm, limits) == beta_matrix(s, n, limits);
      good += ok ? 1 : 0;
    }
    report.add("section round trip degree " + n_str(n), good == sections.size(),
               n_str(good) + "/" + n_str(sections.size()) + " sections: beta matrix = basis expansion");
  }
  return report;
}

}  // namespace

std::vector<std::string_view> verify_suite_names() {
  return {"identities", "sequences", "matrices", "oracle", "tree-grounded"};
}

std::size_t default_verify_degree(std::string_view suite) {
  if (suite == "identities") return 8;
  if (suite == "sequences") return 5;
  if (suite == "matrices") return 5;
  if (suite == "oracle") return 6;
  return 6;
}

Report run_verify_suite(std::string_view suite, const VerifyOptions& options, const Limits& limits) {
  const std::size_t n = options.max_degree.value_or(default_verify_degree(suite));
  if (suite == "identities") return identities(n, options, limits);
  if (suite == "sequences") return sequences(n, limits);
  if (suite == "matrices") return matrices(n, limits);
  if (suite == "oracle") return oracle(n, limits);
  if (suite == "tree-grounded") return tree_grounded(n, limits);
  throw ParseError("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace prelie::cli
