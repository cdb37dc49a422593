#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace prelie {

/// Planar binary tree: the free magma on one generator.
///
/// Serialized as "." for the leaf and "[left,right]" for an internal node.
class BinaryTree {
 public:
  /// The leaf (single edge, degree 1).
  BinaryTree();
  BinaryTree(BinaryTree left, BinaryTree right);

  static BinaryTree parse(std::string_view text);

  bool is_leaf() const { return node_ == nullptr; }
  /// Precondition: !is_leaf().
  const BinaryTree& left() const;
  const BinaryTree& right() const;
  /// Number of leaves.
  std::size_t degree() const;
  std::string serialize() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

}  // namespace prelie
