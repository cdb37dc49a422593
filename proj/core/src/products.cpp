#include "prelie/products.hpp"

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"

#include <algorithm>

namespace prelie {

ProductKind parse_product_kind(std::string_view text) {
  if (text == "graft" || text == "prelie" || text == "pre-lie") return ProductKind::Graft;
  if (text == "butcher") return ProductKind::Butcher;
  if (text == "left-butcher") return ProductKind::LeftButcher;
  if (text == "left-graft") return ProductKind::LeftGraft;
  throw ParseError("unknown product '" + std::string(text) + "'");
}

std::string_view product_kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::Graft: return "graft";
    case ProductKind::Butcher: return "butcher";
    case ProductKind::LeftButcher: return "left-butcher";
    case ProductKind::LeftGraft: return "left-graft";
  }
  return "?";
}

Flavor product_flavor(ProductKind kind) {
  return (kind == ProductKind::Graft || kind == ProductKind::Butcher) ? Flavor::NonPlanar
                                                                        : Flavor::Planar;
}

BinaryTree binary_join(const BinaryTree& t1, const BinaryTree& t2) { return BinaryTree(t1, t2); }

PlanarTree rotation(const BinaryTree& t) {
  if (t.is_leaf()) return PlanarTree();
  return left_butcher(rotation(t.left()), rotation(t.right()));
}

namespace {

std::vector<BinaryTree> all_binary(std::size_t n) {
  if (n == 1) return {BinaryTree()};
  std::vector<BinaryTree> out;
  for (std::size_t k = 1; k < n; ++k) {
    const auto lefts = all_binary(k);
    const auto rights = all_binary(n - k);
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.emplace_back(l, r);
    }
  }
  return out;
}

// Every tree obtained from `tau` by inserting `sigma` as the leftmost child of
// one vertex, one entry per vertex in preorder.
void graft_everywhere(const PlanarTree& sigma, const PlanarTree& tau, std::vector<PlanarTree>& out) {
  out.push_back(left_butcher(sigma, tau));
  const auto children = tau.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::vector<PlanarTree> below;
    graft_everywhere(sigma, children[i], below);
    for (auto& replacement : below) {
      std::vector<PlanarTree> updated(children.begin(), children.end());
      updated[i] = std::move(replacement);
      out.emplace_back(std::move(updated), tau.label());
    }
  }
}

}  // namespace

std::vector<BinaryTree> enumerate_binary(std::size_t n, const Limits& limits) {
  check_degree(n, limits.max_degree, "enumerate_binary");
  auto trees = all_binary(n);
  std::vector<std::pair<PlanarTree, BinaryTree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(rotation(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return canonical_precedes(a.first, b.first); });
  std::vector<BinaryTree> out;
  out.reserve(keyed.size());
  for (auto& [image, t] : keyed) out.push_back(std::move(t));
  return out;
}

PlanarTree left_butcher(const PlanarTree& sigma, const PlanarTree& tau) {
  std::vector<PlanarTree> children;
  children.reserve(tau.children().size() + 1);
  children.push_back(sigma);
  children.insert(children.end(), tau.children().begin(), tau.children().end());
  return PlanarTree(std::move(children), tau.label());
}

Tree butcher(const Tree& s, const Tree& t) {
  auto children = t.children();
  children.push_back(s);
  return Tree(std::move(children), t.label());
}

TreeSum left_graft(const PlanarTree& sigma, const PlanarTree& tau) {
  std::vector<PlanarTree> grafts;
  grafts.reserve(tau.degree());
  graft_everywhere(sigma, tau, grafts);
  TreeSum sum(Flavor::Planar);
  for (const auto& t : grafts) sum.add(t, 1);
  return sum;
}

TreeSum graft(const Tree& s, const Tree& t) {
  std::vector<PlanarTree> grafts;
  grafts.reserve(t.degree());
  graft_everywhere(s.canonical(), t.canonical(), grafts);
  TreeSum sum(Flavor::NonPlanar);
  for (const auto& g : grafts) sum.add(Tree(g), 1);
  return sum;
}

TreeSum bilinear_extend(ProductKind kind, const TreeSum& a, const TreeSum& b) {
  const Flavor flavor = product_flavor(kind);
  if (a.flavor() != flavor || b.flavor() != flavor) {
    throw FlavorError("product '" + std::string(product_kind_name(kind)) + "' takes " +
                      std::string(flavor_name(flavor)) + " operands");
  }
  TreeSum result(flavor);
  for (const auto& [left, lc] : a.terms()) {
    for (const auto& [right, rc] : b.terms()) {
      const Integer coeff = lc * rc;
      switch (kind) {
        case ProductKind::Graft: {
          TreeSum term = graft(Tree(left), Tree(right));
          result += coeff * std::move(term);
          break;
        }
        case ProductKind::Butcher:
          result.add(butcher(Tree(left), Tree(right)), coeff);
          break;
        case ProductKind::LeftButcher:
          result.add(left_butcher(left, right), coeff);
          break;
        case ProductKind::LeftGraft: {
          TreeSum term = left_graft(left, right);
          result += coeff * std::move(term);
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace prelie
