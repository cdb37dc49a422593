#include <doctest.h>

#include "fixtures.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/monomial.hpp"
#include "prelie/projection.hpp"

#include <functional>
#include <set>

using namespace prelie;

namespace {

MonomialExpr M(const char* s) { return MonomialExpr::parse(s); }
Tree T(const char* s) { return Tree::parse(s); }
TreeSum NS(const char* s) { return TreeSum::parse(s, Flavor::NonPlanar); }

std::vector<std::string> serialized(const std::vector<MonomialExpr>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.serialize());
  return out;
}

// Every full bracketing of n copies of g.
std::vector<MonomialExpr> all_bracketings(std::size_t n) {
  if (n == 1) return {MonomialExpr()};
  std::vector<MonomialExpr> out;
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& l : all_bracketings(k)) {
      for (const auto& r : all_bracketings(n - k)) out.emplace_back(l, r);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monomial syntax") {
  CHECK(M("g").is_generator());
  CHECK(M("[g,[g,g]]").degree() == 3);
  CHECK(M(" [ g , [g,g] ] ").serialize() == "[g,[g,g]]");
  CHECK(M("[a,b1]").right().symbol() == "b1");
  CHECK(M("[[g,g],g]") == MonomialExpr(MonomialExpr(MonomialExpr(), MonomialExpr()), MonomialExpr()));
  CHECK_THROWS_AS(M("[g,g"), ParseError);
  CHECK_THROWS_AS(M("[g]"), ParseError);
  CHECK_THROWS_AS(M("G"), ParseError);
  CHECK_THROWS_AS(M("g").left(), DomainError);
  const auto list = parse_monomial_list("# header\n[g,g]\n\ng  # trailing\n");
  CHECK(serialized(list) == std::vector<std::string>{"[g,g]", "g"});
  CHECK_THROWS_WITH_AS(parse_monomial_list("g\n[g,\n"), doctest::Contains("monomial line 2"), ParseError);
  for (const auto& m : all_bracketings(6)) CHECK(MonomialExpr::parse(m.serialize()) == m);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(M("[g,[g,g]]"), ProductKind::Butcher) == NS("(()())"));
  CHECK(evaluate(M("[g,[g,g]]"), ProductKind::Graft) == NS("((())) + (()())"));
  CHECK(evaluate(M("[[g,g],g]"), ProductKind::Graft) == NS("((()))"));
  CHECK(evaluate(M("[g,[g,g]]"), ProductKind::LeftButcher) ==
        TreeSum::parse("(()())", Flavor::Planar));
  CHECK(evaluate(M("[g,[g,g]]"), ProductKind::LeftGraft) ==
        TreeSum::parse("(()()) + ((()))", Flavor::Planar));
  CHECK(evaluate(M("[a,b]"), ProductKind::Butcher) == NS("b(a())"));
  CHECK(evaluate(M("g"), ProductKind::Graft) == NS("()"));
  CHECK(lower_energy_term(M("[g,[g,g]]")) == T("(()())"));
  CHECK(lower_energy_term(M("[[g,g],g]")) == T("((()))"));
  CHECK(lower_energy_term(M("g")) == T("()"));
}

TEST_CASE("the two lower-energy readings agree under projection") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> planar;
    for (const auto& m : all_bracketings(n)) {
      const TreeSum lb = evaluate(m, ProductKind::LeftButcher);
      REQUIRE(lb.size() == 1);
      const PlanarTree sigma = lb.terms().begin()->first;
      CHECK(forget_planarity(sigma) == lower_energy_term(m));
      CHECK(planar_monomial(sigma) == m);
      planar.insert(sigma.serialize());
    }
    CHECK(planar.size() == enumerate_planar(n).size());
  }
}

TEST_CASE("AG basis listings") {
  CHECK(serialized(ag_basis(3).monomials) == std::vector<std::string>{"[[g,g],g]", "[g,[g,g]]"});
  CHECK(serialized(ag_basis(4).monomials) ==
        std::vector<std::string>{"[[[g,g],g],g]", "[[g,[g,g]],g]", "[[g,g],[g,g]]", "[g,[g,[g,g]]]"});
  const std::vector<std::size_t> counts{1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    const MonomialBasis b = ag_basis(n);
    CHECK(b.monomials.size() == counts[n - 1]);
    CHECK(b.monomials.size() == enumerate_nonplanar(n).size());
    REQUIRE(b.lower_terms.size() == b.monomials.size());
    for (std::size_t i = 0; i < b.monomials.size(); ++i) {
      CHECK(b.monomials[i].degree() == n);
      CHECK(b.lower_terms[i] == lower_energy_term(b.monomials[i]));
    }
  }
}

TEST_CASE("AG expansions match the reference listing") {
  const auto expansions = testing::load_expansions("ag_expansions.txt");
  CHECK(expansions.size() == 15);
  for (std::size_t n = 3; n <= 5; ++n) {
    const MonomialBasis b = ag_basis(n);
    const CoeffMatrix m = expand_basis(b);
    std::size_t seen = 0;
    for (const auto& e : expansions) {
      if (e.degree != n) continue;
      REQUIRE(seen < b.monomials.size());
      CHECK(b.monomials[seen] == e.monomial);
      CHECK(evaluate(e.monomial, ProductKind::Graft) == e.expansion);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        CHECK(m.at(r, seen) == e.expansion.coefficient(Tree::parse(m.row_basis()[r])));
      }
      ++seen;
    }
    CHECK(seen == b.monomials.size());
  }
  const CoeffMatrix m3 = expand_basis(ag_basis(3));
  CHECK(m3.at(0, 0) == 1);
  CHECK(m3.at(0, 1) == 1);
  CHECK(m3.at(1, 0) == 0);
  CHECK(m3.at(1, 1) == 1);

  const CoeffMatrix m4 = expand_basis(ag_basis(4));
  std::size_t threes = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) threes += m4.at(r, c) == 3 ? 1 : 0;
  }
  CHECK(threes == 1);
  CHECK(m4.at(2, 3) == 3);

  const CoeffMatrix m5 = expand_basis(ag_basis(5));
  std::multiset<Integer> e9;
  for (std::size_t r = 0; r < 9; ++r) e9.insert(m5.at(r, 8));
  CHECK(e9 == std::multiset<Integer>{1, 1, 3, 1, 4, 4, 3, 6, 1});
}

TEST_CASE("AG bases are unitriangular and tree-grounded") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const MonomialBasis b = ag_basis(n);
    CHECK(is_tree_grounded(b.monomials, n).grounded);
    if (n <= 6) {
      const CoeffMatrix m = expand_basis(b, ColumnOrder::LowerEnergyTerm);
      CHECK(m.is_upper_unitriangular());
      CHECK(m.determinant() == 1);
    }
  }
}

TEST_CASE("tree-grounded examples") {
  for (const char* name : {"b1.monomials", "b2.monomials", "b3.monomials", "b4.monomials"}) {
    const auto ms = load_monomial_list(testing::fixture_path(name));
    CAPTURE(name);
    CHECK(is_tree_grounded(ms, 4).grounded == testing::expected_grounded(name));
    // all four are bases of the degree-4 component, grounded or not
    const Integer det = expand_basis(MonomialBasis{4, {}, ms, {}}).determinant();
    CHECK((det == 1 || det == -1));
  }
  const auto b3 = is_tree_grounded(load_monomial_list(testing::fixture_path("b3.monomials")), 4);
  CHECK(b3.missing == std::vector<Tree>{T("((()()))")});
  CHECK(b3.duplicated == std::vector<Tree>{T("((())())")});
  const auto b4 = is_tree_grounded(load_monomial_list(testing::fixture_path("b4.monomials")), 4);
  CHECK(b4.missing == std::vector<Tree>{T("(((())))")});
  CHECK(b4.duplicated == std::vector<Tree>{T("((())())")});
  CHECK_THROWS_AS(is_tree_grounded(std::vector{M("[g,g]")}, 3), DomainError);
  CHECK_THROWS_AS(is_tree_grounded(std::vector{M("[a,a]")}, 2), DomainError);
  const MonomialBasis b3_basis{4, {}, load_monomial_list(testing::fixture_path("b3.monomials")), {}};
  CHECK_THROWS_AS(expand_basis(b3_basis, ColumnOrder::LowerEnergyTerm), DomainError);
}

TEST_CASE("sections and tree-grounded bases") {
  const auto one = section_of_basis(std::vector{M("g")}, 1);
  CHECK(one(T("()")) == PlanarTree::parse("()"));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& s : all_sections(n)) {
      const MonomialBasis b = basis_of_section(s, n);
      CHECK(is_tree_grounded(b.monomials, n).grounded);
      CHECK(section_of_basis(b.monomials, n) == s);
      CHECK(expand_basis(b, ColumnOrder::LowerEnergyTerm) == beta_matrix(s, n));
    }
  }
  for (const char* name : {"section4_default.txt", "section4_alt.txt"}) {
    const Section s = Section::load(testing::fixture_path(name));
    CHECK(expand_basis(basis_of_section(s, 4), ColumnOrder::LowerEnergyTerm) == beta_matrix(s, 4));
  }
  for (const char* name : {"b1.monomials", "b2.monomials"}) {
    const auto ms = load_monomial_list(testing::fixture_path(name));
    const Section s = section_of_basis(ms, 4);
    MonomialBasis b{4, {}, ms, {}};
    for (const auto& m : ms) b.lower_terms.push_back(lower_energy_term(m));
    CHECK(expand_basis(b, ColumnOrder::LowerEnergyTerm) == beta_matrix(s, 4));
  }
  const MonomialBasis ag4 = ag_basis(4);
  CHECK(section_of_basis(ag4.monomials, 4).covers(4));
  CHECK_THROWS_AS(section_of_basis(load_monomial_list(testing::fixture_path("b3.monomials")), 4),
                  DomainError);
  CHECK_THROWS_AS(basis_of_section(default_section(3), 4), DomainError);
}

TEST_CASE("multi-generator bases") {
  CHECK_THROWS_AS(GeneratorOrder(std::vector<std::string>{}), DomainError);
  CHECK_THROWS_AS(GeneratorOrder({"a", "a"}), DomainError);
  CHECK_THROWS_AS(GeneratorOrder({"A"}), ParseError);
  CHECK(GeneratorOrder().is_single_default());
  CHECK_FALSE(GeneratorOrder({"a"}).is_single_default());

  const GeneratorOrder ab({"a", "b"});
  CHECK(ag_basis_multigen(2, ab).size() == 4);
  CHECK(ag_basis_multigen(3, ab).size() == 14);
  CHECK(ag_basis_multigen(3, GeneratorOrder()).size() == 2);
  CHECK(serialized(ag_basis_multigen(4, GeneratorOrder())) == serialized(ag_basis(4).monomials));

  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < k; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
    const GeneratorOrder order(letters);
    // (s1 ⊳ s2) ⊳ s3 for all s, and s1 ⊳ (s2 ⊳ s3) for s1 >= s2
    std::set<std::string> families;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          const MonomialExpr si(letters[i]), sj(letters[j]), sl(letters[l]);
          families.insert(MonomialExpr(MonomialExpr(si, sj), sl).serialize());
          if (i >= j) families.insert(MonomialExpr(si, MonomialExpr(sj, sl)).serialize());
        }
      }
    }
    const auto basis = ag_basis_multigen(3, order);
    CHECK(basis.size() == k * k * k + k * k * (k + 1) / 2);
    const auto names = serialized(basis);
    CHECK(std::set<std::string>(names.begin(), names.end()) == families);
    CHECK(ag_basis_multigen(1, order).size() == k);
    CHECK(ag_basis_multigen(2, order).size() == k * k);
  }
  CHECK_THROWS_AS(ag_basis_multigen(6, ab), DegreeCapError);
}
