#include <doctest.h>

#include "prelie/binary_tree.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/products.hpp"
#include "prelie/statistics.hpp"
#include "prelie/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace prelie;

namespace {

Integer catalan(std::size_t n) {
  // C_0 = 1, C_{k+1} = sum C_i C_{k-i}
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) c[k + 1] += c[i] * c[k - i];
  }
  return c[n];
}

// Automorphisms by brute force: permutations of the vertex set that preserve
// the parent map.
std::size_t brute_automorphisms(const PlanarTree& t) {
  const auto vs = t.vertices();
  std::vector<int> parent(vs.size(), -1);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    VertexId p{std::vector<std::size_t>(vs[i].path.begin(), vs[i].path.end() - 1)};
    parent[i] = static_cast<int>(std::find(vs.begin(), vs.end(), p) - vs.begin());
  }
  std::vector<int> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = perm[0] == 0;
    for (std::size_t i = 1; ok && i < vs.size(); ++i) ok = perm[parent[i]] == parent[perm[i]];
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t depth_sum(const PlanarTree& t) {
  std::size_t total = 0;
  for (const auto& v : t.vertices()) total += v.path.size();
  return total;
}

}  // namespace

TEST_CASE("serialization round trip and grammar") {
  for (const char* text : {"()", "(())", "((())())", "a()", "a(b()c(()))", "x_1(2())"}) {
    CHECK(PlanarTree::parse(text).serialize() == text);
  }
  CHECK(PlanarTree::parse("  (()())\n").serialize() == "(()())");
  CHECK_THROWS_AS(PlanarTree::parse(""), ParseError);
  CHECK_THROWS_AS(PlanarTree::parse("(()"), ParseError);
  CHECK_THROWS_AS(PlanarTree::parse("())"), ParseError);
  CHECK_THROWS_AS(PlanarTree::parse("A()"), ParseError);
  CHECK_THROWS_AS(PlanarTree::parse("( )"), ParseError);
  CHECK_THROWS_AS(PlanarTree({}, std::string("Bad")), ParseError);
}

TEST_CASE("degree and labels") {
  const auto t = PlanarTree::parse("a(b()(c()))");
  CHECK(t.degree() == 4);
  CHECK(t.has_labels());
  CHECK(t.label() == std::optional<std::string>("a"));
  CHECK(t.at(VertexId{{1, 0}}).label() == std::optional<std::string>("c"));
  CHECK_THROWS_AS(t.at(VertexId{{3}}), DomainError);
  CHECK(VertexId{}.to_string() == "r");
  CHECK(VertexId{{0, 2}}.to_string() == "0.2");
}

TEST_CASE("collation puts shorter child lists first") {
  CHECK(PlanarTree::parse("(())") > PlanarTree::parse("()"));
  CHECK(PlanarTree::parse("((())())") > PlanarTree::parse("(()(()))"));
  CHECK(compare_serializations("()", "(())") == std::strong_ordering::less);
}

TEST_CASE("non-planar canonical form") {
  const Tree a = Tree::parse("(()(()))");
  const Tree b = Tree::parse("((())())");
  CHECK(a == b);
  CHECK(a.serialize() == "((())())");
  CHECK(Tree(a.canonical()) == a);
  CHECK(Tree::parse("(()(())(()()))").serialize() == "((()())(())())");
}

TEST_CASE("enumerate_planar") {
  CHECK(enumerate_planar(1).size() == 1);
  CHECK(enumerate_planar(1)[0].serialize() == "()");
  const auto& three = enumerate_planar(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].serialize() == "((()))");
  CHECK(three[1].serialize() == "(()())");
  CHECK(enumerate_planar(4).size() == 5);
  CHECK(enumerate_planar(6).size() == 42);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto& trees = enumerate_planar(n);
    CHECK(Integer(trees.size()) == catalan(n - 1));
    std::set<std::string> distinct;
    for (const auto& t : trees) {
      CHECK(t.degree() == n);
      distinct.insert(t.serialize());
    }
    CHECK(distinct.size() == trees.size());
    CHECK(std::is_sorted(trees.begin(), trees.end(),
                         [](const auto& a, const auto& b) { return canonical_precedes(a, b); }));
  }
  CHECK_THROWS_AS(enumerate_planar(0), DomainError);
  CHECK_THROWS_AS(enumerate_planar(13), DegreeCapError);
  Limits small;
  small.max_degree = 4;
  CHECK_THROWS_AS(enumerate_planar(5, small), DegreeCapError);
}

TEST_CASE("enumerate_nonplanar") {
  CHECK(enumerate_nonplanar(1)[0].serialize() == "()");
  CHECK(enumerate_nonplanar(4).size() == 4);
  CHECK(enumerate_nonplanar(7).size() == 48);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> projected;
    for (const auto& t : enumerate_planar(n)) projected.insert(Tree(t).serialize());
    CHECK(projected.size() == enumerate_nonplanar(n).size());
    for (const auto& t : enumerate_nonplanar(n)) CHECK(projected.count(t.serialize()) == 1);
  }
  const std::vector<std::size_t> counts = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (std::size_t n = 1; n <= counts.size(); ++n) CHECK(enumerate_nonplanar(n).size() == counts[n - 1]);
}

TEST_CASE("canonical_index") {
  const auto& trees = enumerate_planar(5);
  for (std::size_t i = 0; i < trees.size(); ++i) CHECK(canonical_index(trees[i]) == i);
  const auto& np = enumerate_nonplanar(5);
  for (std::size_t i = 0; i < np.size(); ++i) CHECK(canonical_index(np[i]) == i);
  CHECK_THROWS_AS(canonical_index(PlanarTree::parse("a()")), DomainError);
}

TEST_CASE("potential energy") {
  CHECK(potential_energy(PlanarTree::parse("()")) == 0);
  CHECK(potential_energy(PlanarTree::parse("((()))")) == 3);
  CHECK(potential_energy(PlanarTree::parse("(()()())")) == 3);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_planar(n)) {
      CHECK(potential_energy(t) == depth_sum(t));
      CHECK(potential_energy(t) == potential_energy(Tree(t)));
    }
  }
}

TEST_CASE("symmetry factor") {
  CHECK(symmetry_factor(Tree::parse("()")) == 1);
  CHECK(symmetry_factor(Tree::parse("(()())")) == 2);
  CHECK(symmetry_factor(Tree::parse("(()()())")) == 6);
  CHECK(symmetry_factor(Tree::parse("((()())(()()))")) == 8);
  CHECK(symmetry_factor(Tree::parse("a()")) == 1);
  CHECK(symmetry_factor(Tree::parse("(a()b())")) == 1);
  CHECK(symmetry_factor(Tree::parse("(a()a())")) == 2);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : enumerate_nonplanar(n)) {
      CHECK(symmetry_factor(s) == Integer(brute_automorphisms(s.canonical())));
    }
  }
}

TEST_CASE("vertex orders") {
  const auto ladder = PlanarTree::parse("((()))");
  const auto total = vertex_order(ladder, OrderKind::Total);
  CHECK(total.ascending() == std::vector<VertexId>{VertexId{}, VertexId{{0}}, VertexId{{0, 0}}});

  // root, left leaf (v3), right child (v2), its child (v4)
  const auto t = PlanarTree::parse("(()(()))");
  const auto ll = vertex_order(t, OrderKind::LeftRefined);
  const VertexId v2{{1}}, v3{{0}}, v4{{1, 0}};
  CHECK(ll.less(v2, v3));
  CHECK_FALSE(ll.less(v3, v2));
  CHECK(ll.less(v2, v4));
  CHECK_FALSE(ll.less(v4, v3));
  CHECK_FALSE(ll.less(v3, v4));
  const auto lt = vertex_order(t, OrderKind::Tree);
  CHECK_FALSE(lt.less(v2, v3));
  CHECK(lt.less(v2, v4));

  CHECK(parse_order_kind("<<<") == OrderKind::Total);
  CHECK(parse_order_kind("ll") == OrderKind::LeftRefined);
  CHECK(parse_order_kind("tree") == OrderKind::Tree);
  CHECK_THROWS_AS(parse_order_kind("<=>"), ParseError);
  CHECK_THROWS_AS(vertex_order(Tree::parse("(()())"), OrderKind::Total), DomainError);
  CHECK_NOTHROW(vertex_order(Tree::parse("(()())"), OrderKind::Tree));
}

TEST_CASE("order refinement on every planar tree up to degree 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_planar(n)) {
      const auto lt = vertex_order(t, OrderKind::Tree);
      const auto ll = vertex_order(t, OrderKind::LeftRefined);
      const auto lll = vertex_order(t, OrderKind::Total);
      const std::size_t m = t.degree();
      for (std::size_t b = 1; b < m; ++b) CHECK(lt.less(0, b));
      for (std::size_t a = 0; a < m; ++a) {
        CHECK_FALSE(lll.less(a, a));
        CHECK_FALSE(ll.less(a, a));
        for (std::size_t b = 0; b < m; ++b) {
          if (lt.less(a, b)) CHECK(ll.less(a, b));
          if (ll.less(a, b)) CHECK(lll.less(a, b));
          if (a != b) CHECK(lll.less(a, b) != lll.less(b, a));
          for (std::size_t c = 0; c < m; ++c) {
            if (ll.less(a, b) && ll.less(b, c)) CHECK(ll.less(a, c));
            if (lll.less(a, b) && lll.less(b, c)) CHECK(lll.less(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("binary trees") {
  const BinaryTree leaf;
  CHECK(leaf.is_leaf());
  CHECK(leaf.degree() == 1);
  CHECK(leaf.serialize() == ".");
  const BinaryTree y(leaf, leaf);
  CHECK(y.serialize() == "[.,.]");
  CHECK(BinaryTree::parse("[.,[.,.]]").serialize() == "[.,[.,.]]");
  CHECK(BinaryTree::parse("[.,[.,.]]").degree() == 3);
  CHECK_THROWS_AS(BinaryTree::parse("[.,]"), ParseError);
  CHECK_THROWS_AS(leaf.left(), DomainError);
}
