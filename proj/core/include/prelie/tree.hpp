#pragma once

// Planar and non-planar rooted trees as immutable, shareable values.
//
// Text grammar (bit-exact):
//
//     tree  := label? "(" tree* ")"
//     label := [a-z0-9_]+
//
// The single unlabeled vertex is "()". Serializations are compared with a
// structural collation in which ')' sorts below '(' and both sort below label
// characters, so a child list that is a prefix of another compares smaller.
// A non-planar Tree stores its children in descending collation order.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

using Label = std::optional<std::string>;

/// Three-way comparison of two serializations under the structural collation.
std::strong_ordering compare_serializations(std::string_view a, std::string_view b);

/// True for strings matching [a-z0-9_]+.
bool is_valid_label(std::string_view text);

/// Position of a vertex: child indices from the root. The root is the empty path.
struct VertexId {
  std::vector<std::size_t> path;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

  /// "r" for the root, otherwise dot-separated indices such as "0.2".
  std::string to_string() const;
};

/// Ordered rooted tree. Copies share structure.
class PlanarTree {
 public:
  /// Single unlabeled vertex.
  PlanarTree();
  explicit PlanarTree(std::vector<PlanarTree> children, Label label = std::nullopt);

  static PlanarTree vertex(Label label = std::nullopt);
  /// Throws ParseError on malformed input.
  static PlanarTree parse(std::string_view text);

  const Label& label() const;
  std::span<const PlanarTree> children() const;
  std::size_t degree() const;
  /// Sum of vertex depths, root at depth 0.
  std::size_t potential_energy() const;
  const std::string& serialize() const;
  bool is_single_vertex() const { return children().empty(); }
  /// True when any vertex carries a label.
  bool has_labels() const;

  /// Subtree rooted at `id`; throws DomainError for an invalid path.
  const PlanarTree& at(const VertexId& id) const;
  /// All vertices in preorder (root first, children left to right).
  std::vector<VertexId> vertices() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b);
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Non-planar rooted tree held in canonical form.
class Tree {
 public:
  /// Single unlabeled vertex.
  Tree();
  /// Forgets the planar structure of `embedding`.
  explicit Tree(const PlanarTree& embedding);
  Tree(std::vector<Tree> children, Label label = std::nullopt);

  /// Parses any embedding and canonicalizes it.
  static Tree parse(std::string_view text);

  /// The canonical embedding (children in descending collation order).
  const PlanarTree& canonical() const { return canonical_; }
  const Label& label() const { return canonical_.label(); }
  std::vector<Tree> children() const;
  std::size_t degree() const { return canonical_.degree(); }
  std::size_t potential_energy() const { return canonical_.potential_energy(); }
  const std::string& serialize() const { return canonical_.serialize(); }
  bool is_single_vertex() const { return canonical_.is_single_vertex(); }
  bool has_labels() const { return canonical_.has_labels(); }

  friend bool operator==(const Tree& a, const Tree& b) { return a.canonical_ == b.canonical_; }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  struct CanonicalTag {};
  Tree(CanonicalTag, PlanarTree canonical) : canonical_(std::move(canonical)) {}

  PlanarTree canonical_;
};

/// Canonical enumeration order: descending potential energy, then descending
/// serialization. Returns true when `a` precedes `b`.
bool canonical_precedes(const PlanarTree& a, const PlanarTree& b);
bool canonical_precedes(const Tree& a, const Tree& b);

}  // namespace prelie
