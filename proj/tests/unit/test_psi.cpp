#include <doctest.h>

#include "fixtures.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/products.hpp"
#include "prelie/psi.hpp"

#include <random>

using namespace prelie;

namespace {

PlanarTree P(const char* s) { return PlanarTree::parse(s); }
TreeSum PS(const char* s) { return TreeSum::parse(s, Flavor::Planar); }

}  // namespace

TEST_CASE("decompose") {
  CHECK(decompose(P("(())")) == std::pair{P("()"), P("()")});
  CHECK(decompose(P("(()()())")) == std::pair{P("()"), P("(()())")});
  CHECK(decompose(P("((())())")) == std::pair{P("(())"), P("(())")});
  CHECK_THROWS_AS(decompose(P("()")), DomainError);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& s : enumerate_planar(n)) {
      const auto [left, trunk] = decompose(s);
      CHECK(left_butcher(left, trunk) == s);
    }
  }
  CHECK(split_leftmost_branch(P("(()(()))"), VertexId{{1}}) == std::pair{P("()"), P("(()())")});
  CHECK_THROWS_AS(split_leftmost_branch(P("(()(()))"), VertexId{{0}}), DomainError);
}

TEST_CASE("psi examples") {
  CHECK(psi(P("()")) == PS("()"));
  CHECK(psi(P("(()())")) == PS("(()()) + ((()))"));
  CHECK(psi(P("(()()())")) ==
        PS("(()()()) + ((())()) + 2 (()(())) + ((()())) + (((())))"));
  CHECK(psi(PS("2 (()()) - ((()))")) == PS("2 (()()) + ((()))"));
  CHECK_THROWS_AS(psi(TreeSum::parse("()", Flavor::NonPlanar)), FlavorError);
}

TEST_CASE("psi is triangular for the potential energy") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_planar(n)) {
      const TreeSum image = psi(s);
      CHECK(image.coefficient(s) == 1);
      const TreeSum rest = image - TreeSum(s);
      for (const auto& [tree, coeff] : rest.terms()) {
        CHECK(tree.degree() == n);
        CHECK(tree.potential_energy() > s.potential_energy());
        CHECK(coeff > 0);
      }
    }
  }
}

TEST_CASE("psi inverse") {
  CHECK(psi_inverse(P("()")) == PS("()"));
  CHECK(psi_inverse(P("(()())")) == PS("(()()) - ((()))"));
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_planar(n)) {
      CHECK(psi(psi_inverse(s)) == TreeSum(s));
      CHECK(psi_inverse(psi(s)) == TreeSum(s));
    }
  }
}

TEST_CASE("psi is multiplicative on random pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t a = 1 + rng() % 6;
    const std::size_t b = 1 + rng() % (8 - a);
    const auto& left = enumerate_planar(a);
    const auto& right = enumerate_planar(b);
    const PlanarTree s1 = left[rng() % left.size()];
    const PlanarTree s2 = right[rng() % right.size()];
    CHECK(psi(left_butcher(s1, s2)) == bilinear_extend(ProductKind::LeftGraft, psi(s1), psi(s2)));
  }
}

TEST_CASE("coefficient examples") {
  CHECK(coeff_c_recursive(P("(()(()))"), P("(()()())")) == 2);
  CHECK(coeff_c_bijections(P("(()(()))"), P("(()()())")) == 2);
  CHECK(coeff_c_recursive(P("(()()())"), P("(((())))")) == 0);
  CHECK(coeff_c_recursive(P("(())"), P("(()())")) == 0);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_planar(n)) {
      CHECK(coeff_c_recursive(s, s) == 1);
      CHECK(coeff_c_bijections(s, s) == 1);
    }
  }
  CHECK_THROWS_AS(coeff_c_bijections(P("()"), P("(())")), DomainError);
  CHECK_THROWS_AS(coeff_c_bijections(P("a()"), P("()")), DomainError);
  const auto& nine = enumerate_planar(9);
  CHECK_THROWS_AS(coeff_c_bijections(nine.front(), nine.back()), DegreeCapError);
}

TEST_CASE("recursive and bijective coefficients agree") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto& trees = enumerate_planar(n);
    for (const auto& s : trees) {
      for (const auto& t : trees) {
        CHECK(coeff_c_recursive(s, t) == coeff_c_bijections(s, t));
      }
    }
  }
  std::mt19937_64 rng(11);
  const auto& seven = enumerate_planar(7);
  for (int i = 0; i < 300; ++i) {
    const PlanarTree& s = seven[rng() % seven.size()];
    const PlanarTree& t = seven[rng() % seven.size()];
    CHECK(coeff_c_recursive(s, t) == coeff_c_bijections(s, t));
  }
}

TEST_CASE("psi matrices") {
  const auto printed = testing::load_matrices("psi_matrices.txt");
  REQUIRE(printed.size() == 2);
  for (const auto& reference : printed) {
    const CoeffMatrix m = psi_matrix(reference.degree());
    CHECK(m.col_basis() == reference.col_basis());
    CHECK(m == reference);
  }
  const CoeffMatrix m4 = psi_matrix(4);
  CHECK(m4.entry_sum() == 14);
  std::size_t twos = 0;
  for (std::size_t r = 0; r < m4.rows(); ++r) {
    for (std::size_t c = 0; c < m4.cols(); ++c) twos += m4.at(r, c) == 2;
  }
  CHECK(twos == 1);
  CHECK(psi_matrix(5).entry_sum() == 85);
  for (std::size_t n = 1; n <= 7; ++n) {
    const CoeffMatrix m = psi_matrix(n);
    CHECK(m.is_upper_unitriangular());
    Integer total = 0;
    for (const auto& s : enumerate_planar(n)) total += n_statistic(s);
    CHECK(m.entry_sum() == total);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      CHECK(m.column_sum(c) == n_statistic(enumerate_planar(n)[c]));
    }
    const CoeffMatrix inv = m.inverse_unitriangular();
    CHECK(inv.is_upper_unitriangular());
    CHECK((m * inv).is_identity());
  }
  Limits tight;
  tight.matrix_max_degree = 4;
  CHECK_THROWS_AS(psi_matrix(5, tight), DegreeCapError);
  CHECK_THROWS_AS(psi_matrix(0), DomainError);
}

TEST_CASE("N statistic") {
  CHECK(n_statistic(P("()")) == 1);
  CHECK(n_statistic(P("(()())")) == 2);
  CHECK(n_statistic(P("(()()())")) == 6);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_planar(n)) CHECK(n_statistic(s) == psi(s).coefficient_sum());
  }
}

TEST_CASE("sequence report") {
  const auto expected = testing::load_integers("sequence.txt");
  const SequenceReport report = verify_a088716(8);
  CHECK(report.passed());
  REQUIRE(report.direct.size() == 8);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(report.direct[i] == expected[i]);
  CHECK(report.direct[5] == 621);
  CHECK(report.direct[6] == 5236);
  CHECK(report.direct[7] == 49680);
  CHECK(report.ode.size() == 7);
  CHECK(report.ode.front().order == 0);
  CHECK(report.ode.front().lhs == 1);
  for (const auto& check : report.ode) CHECK(check.ok());
  Limits tight;
  tight.max_degree = 4;
  CHECK_THROWS_AS(verify_a088716(5, tight), DegreeCapError);
}
