#pragma once

#include "prelie/binary_tree.hpp"
#include "prelie/limits.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <string_view>
#include <vector>

namespace prelie {

/// The bilinear products on rooted trees.
enum class ProductKind {
  Graft,        ///< s → t, non-planar pre-Lie grafting
  Butcher,      ///< s ↷ t, non-planar Butcher product
  LeftButcher,  ///< σ ∘↘ τ, planar free magma product
  LeftGraft,    ///< σ ↘ τ, planar left grafting
};

/// Accepts "graft"/"prelie", "butcher", "left-butcher", "left-graft".
ProductKind parse_product_kind(std::string_view text);
std::string_view product_kind_name(ProductKind kind);
/// Flavor of the operands and result of `kind`.
Flavor product_flavor(ProductKind kind);

/// t1 ∨ t2.
BinaryTree binary_join(const BinaryTree& t1, const BinaryTree& t2);

/// Knuth's rotation correspondence: leaf ↦ •, t1 ∨ t2 ↦ Φ(t1) ∘↘ Φ(t2).
PlanarTree rotation(const BinaryTree& t);

/// All planar binary trees with n leaves, ordered like the canonical
/// enumeration of their rotation images.
std::vector<BinaryTree> enumerate_binary(std::size_t n, const Limits& limits = {});

/// σ becomes the leftmost root branch of τ. The root label of τ is kept.
PlanarTree left_butcher(const PlanarTree& sigma, const PlanarTree& tau);

/// s grafted on the root of t.
Tree butcher(const Tree& s, const Tree& t);

/// Sum over the vertices v of τ of σ grafted as the leftmost branch at v.
TreeSum left_graft(const PlanarTree& sigma, const PlanarTree& tau);

/// Sum over the vertices v of t of s grafted at v, like terms collected.
TreeSum graft(const Tree& s, const Tree& t);

/// Extends `kind` bilinearly. Throws FlavorError when an operand has the
/// wrong flavor for `kind`.
TreeSum bilinear_extend(ProductKind kind, const TreeSum& a, const TreeSum& b);

}  // namespace prelie
