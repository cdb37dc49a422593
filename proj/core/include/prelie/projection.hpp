#pragma once

#include "prelie/coeff_matrix.hpp"
#include "prelie/integer.hpp"
#include "prelie/limits.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

/// π: forget the planar structure.
Tree forget_planarity(const PlanarTree& sigma);
TreeSum forget_planarity(const TreeSum& planar_sum);

/// The fiber π⁻¹(s), in descending serialization order.
std::vector<PlanarTree> planar_embeddings(const Tree& s);

/// Ψ̄ = π ∘ Ψ.
TreeSum psi_bar(const PlanarTree& tau);

/// Number of bijections V(s) → V(τ) increasing from (V(s), <) to (V(τ), ⋘)
/// whose inverse is increasing for "<".
Integer count_tilde_b(const Tree& s, const PlanarTree& tau, const Limits& limits = {});

/// Coefficient of s in Ψ̄(τ), i.e. Σ_{π(σ)=s} c(σ, τ).
Integer alpha(const Tree& s, const PlanarTree& tau);

/// Rectangular |T_n| × |T^pl_n| matrix of α in canonical orders.
CoeffMatrix alpha_matrix(std::size_t n, const Limits& limits = {});

/// A choice of planar representative for each covered non-planar tree, with
/// π ∘ S = id enforced on every entry.
class Section {
 public:
  using Entries = std::map<Tree, PlanarTree, std::greater<>>;

  /// Throws DomainError when π(sigma) != t or t is already assigned
  /// differently. The message names the offending tree.
  void assign(const Tree& t, const PlanarTree& sigma);

  /// One entry per line: "<non-planar> => <planar>"; '#' starts a comment.
  static Section parse(std::string_view text);
  static Section load(const std::string& path);
  std::string to_text() const;

  std::optional<PlanarTree> find(const Tree& t) const;
  /// Throws DomainError for an uncovered tree.
  const PlanarTree& operator()(const Tree& t) const;
  /// True when every tree of degree n is mapped.
  bool covers(std::size_t n, const Limits& limits = {}) const;

  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const Section&, const Section&) = default;

 private:
  Entries entries_;
};

/// Maps every tree of degree 1..n to its canonical embedding (children in
/// descending serialization order, recursively).
Section default_section(std::size_t n, const Limits& limits = {});

/// Every section of degree n exactly: one choice per fiber.
std::vector<Section> all_sections(std::size_t n, const Limits& limits = {});

/// Ψ̃_S(t) = Ψ̄(S(t)).
TreeSum psi_tilde(const Section& section, const Tree& t);

/// Matrix of Ψ̃_S on degree n in canonical non-planar order.
CoeffMatrix beta_matrix(const Section& section, std::size_t n, const Limits& limits = {});

}  // namespace prelie
