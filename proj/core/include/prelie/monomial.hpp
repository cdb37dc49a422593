#pragma once

#include "prelie/coeff_matrix.hpp"
#include "prelie/limits.hpp"
#include "prelie/products.hpp"
#include "prelie/projection.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

/// Symbol of the single generator. It evaluates to the unlabelled vertex "()";
/// any other symbol evaluates to a vertex carrying that label.
inline constexpr std::string_view kDefaultGenerator = "g";

/// Fully parenthesized word in generators with an abstract binary product.
/// Serialized as a generator symbol or "[left,right]".
class MonomialExpr {
 public:
  explicit MonomialExpr(std::string symbol = std::string(kDefaultGenerator));
  MonomialExpr(MonomialExpr left, MonomialExpr right);

  static MonomialExpr parse(std::string_view text);

  bool is_generator() const { return node_ == nullptr; }
  const std::string& symbol() const { return symbol_; }
  const MonomialExpr& left() const;
  const MonomialExpr& right() const;
  std::size_t degree() const { return degree_; }
  std::string serialize() const;

  friend bool operator==(const MonomialExpr& a, const MonomialExpr& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  std::string symbol_;
  std::size_t degree_ = 1;
};

/// Reads one monomial per line; blank lines and '#' comments are skipped.
std::vector<MonomialExpr> parse_monomial_list(std::string_view text);
std::vector<MonomialExpr> load_monomial_list(const std::string& path);

/// Binds the product symbol of `m` to `product` and evaluates it on single
/// vertices.
TreeSum evaluate(const MonomialExpr& m, ProductKind product);

/// The tree obtained by reading the product as the Butcher product.
Tree lower_energy_term(const MonomialExpr& m);

/// The unique monomial whose left Butcher reading is `sigma`. Inverse of
/// evaluate(·, LeftButcher) on single trees.
MonomialExpr planar_monomial(const PlanarTree& sigma);

/// Totally ordered generator alphabet, ascending.
class GeneratorOrder {
 public:
  /// The single generator `g`.
  GeneratorOrder();
  explicit GeneratorOrder(std::vector<std::string> ascending);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  bool is_single_default() const;

  friend bool operator==(const GeneratorOrder&, const GeneratorOrder&) = default;

 private:
  std::vector<std::string> alphabet_;
};

/// Homogeneous monomial basis with its lower-energy terms.
struct MonomialBasis {
  std::size_t degree = 0;
  GeneratorOrder order;
  std::vector<MonomialExpr> monomials;
  /// lower_terms[i] = lower_energy_term(monomials[i]).
  std::vector<Tree> lower_terms;
};

/// Agrachev-Gamkrelidze basis of degree n: u₁ ⊳ (u₂ ⊳ (⋯ (u_r ⊳ s))) with
/// u₁ ≥ ⋯ ≥ u_r lower-degree basis elements of total degree n-1 and s a
/// generator. Elements compare by degree first, then by construction index.
/// Listing order: words by first letter (higher degree first, then lower
/// index), recursively; the final generator varies fastest.
MonomialBasis ag_basis(std::size_t n, const GeneratorOrder& order = {}, const Limits& limits = {});

/// ag_basis for an arbitrary alphabet, capped at limits.multigen_max.
std::vector<MonomialExpr> ag_basis_multigen(std::size_t n, const GeneratorOrder& order,
                                            const Limits& limits = {});

enum class ColumnOrder {
  Basis,            ///< columns follow the basis listing, labelled by monomial
  LowerEnergyTerm,  ///< columns follow the canonical order of lower-energy terms
};

/// Pre-Lie expansion of each monomial over the canonical tree basis.
/// One-generator bases only.
CoeffMatrix expand_basis(const MonomialBasis& basis, ColumnOrder columns = ColumnOrder::Basis,
                         const Limits& limits = {});

struct GroundingReport {
  bool grounded = false;
  /// Trees of T_n that are no lower-energy term.
  std::vector<Tree> missing;
  /// Trees reached by more than one monomial (listed once each).
  std::vector<Tree> duplicated;

  explicit operator bool() const { return grounded; }
};

/// Whether the lower-energy terms are exactly T_n. Throws DomainError when a
/// monomial has the wrong degree or a generator other than `g`.
GroundingReport is_tree_grounded(std::span<const MonomialExpr> monomials, std::size_t n,
                                 const Limits& limits = {});

/// The tree-grounded basis of degree n defined by a section: one monomial
/// planar_monomial(S(t)) per tree t, in canonical order of t. Throws
/// DomainError when the section does not cover degree n.
MonomialBasis basis_of_section(const Section& section, std::size_t n, const Limits& limits = {});

/// S(lower_energy_term(m)) = m read with the left Butcher product. Throws
/// DomainError when the list is not tree-grounded.
Section section_of_basis(std::span<const MonomialExpr> monomials, std::size_t n,
                         const Limits& limits = {});

}  // namespace prelie
