#pragma once

#include "prelie/integer.hpp"
#include "prelie/tree.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

std::size_t potential_energy(const PlanarTree& t);
std::size_t potential_energy(const Tree& t);

/// Number of automorphisms of `s`: the product over distinct child classes of
/// m! * sym(child)^m.
Integer symmetry_factor(const Tree& s);

enum class OrderKind {
  Tree,         ///< "<": v < w when v lies on the path from the root to w.
  LeftRefined,  ///< "≪": closure of "<" and "right sibling before left sibling".
  Total,        ///< "⋘": trunk before leftmost branch, recursively.
};

/// Parses "<", "lt", "tree" / "<<", "ll", "left" / "<<<", "lll", "total".
OrderKind parse_order_kind(std::string_view text);
std::string_view order_kind_name(OrderKind kind);

/// A strict order on the vertices of one tree, stored as a relation matrix
/// over preorder vertex indices.
class VertexOrder {
 public:
  OrderKind kind() const { return kind_; }
  /// Preorder listing of the vertices.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t index_of(const VertexId& v) const;

  bool less(std::size_t a, std::size_t b) const { return relation_[a * size() + b] != 0; }
  bool less(const VertexId& a, const VertexId& b) const {
    return less(index_of(a), index_of(b));
  }
  /// Vertices sorted increasingly; only meaningful for a total order.
  std::vector<VertexId> ascending() const;

 private:
  friend VertexOrder vertex_order(const PlanarTree& t, OrderKind kind);
  friend VertexOrder vertex_order(const Tree& t, OrderKind kind);

  OrderKind kind_ = OrderKind::Tree;
  std::vector<VertexId> vertices_;
  std::vector<char> relation_;
};

VertexOrder vertex_order(const PlanarTree& t, OrderKind kind);
/// Non-planar trees only carry "<"; other kinds throw DomainError.
VertexOrder vertex_order(const Tree& t, OrderKind kind);

}  // namespace prelie
