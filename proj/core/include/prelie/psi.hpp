#pragma once

#include "prelie/coeff_matrix.hpp"
#include "prelie/integer.hpp"
#include "prelie/limits.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace prelie {

/// Unique split σ = σ₁ ∘↘ σ₂: σ₁ is the leftmost root branch, σ₂ the trunk.
/// Throws DomainError on a single vertex.
std::pair<PlanarTree, PlanarTree> decompose(const PlanarTree& sigma);

/// Leftmost branch starting at `v` and the trunk left behind. Throws
/// DomainError when `v` has no children.
std::pair<PlanarTree, PlanarTree> split_leftmost_branch(const PlanarTree& sigma, const VertexId& v);

/// The magmatic isomorphism: Ψ(•) = •, Ψ(σ₁ ∘↘ σ₂) = Ψ(σ₁) ↘ Ψ(σ₂).
/// Memoized per process.
TreeSum psi(const PlanarTree& tau);
TreeSum psi(const TreeSum& planar_sum);

/// Ψ⁻¹ by back-substitution: Ψ(τ) = τ + higher potential energy terms, so the
/// lowest-energy term of the remainder is peeled off until nothing is left.
TreeSum psi_inverse(const PlanarTree& sigma);
TreeSum psi_inverse(const TreeSum& planar_sum);

/// Coefficient of σ in Ψ(τ) through the leftmost-branch recursion
/// c(σ, τ₁ ∘↘ τ₂) = Σ_v c(σ^v, τ₁) c(σ_v, τ₂). Memoized per process.
Integer coeff_c_recursive(const PlanarTree& sigma, const PlanarTree& tau);

/// Number of bijections V(σ) → V(τ) increasing from (V(σ), ≪) to (V(τ), ⋘)
/// whose inverse is increasing for "<". Exhaustive search with pruning.
/// Throws DomainError on degree mismatch or labelled input and
/// DegreeCapError above limits.brute_force_max.
Integer coeff_c_bijections(const PlanarTree& sigma, const PlanarTree& tau,
                           const Limits& limits = {});

/// Matrix of Ψ on degree n, rows and columns in canonical planar order.
CoeffMatrix psi_matrix(std::size_t n, const Limits& limits = {});

/// Number of trees, with multiplicity, in Ψ(σ): N(•) = 1,
/// N(σ₁ ∘↘ σ₂) = N(σ₁) N(σ₂) |σ₂|.
Integer n_statistic(const PlanarTree& sigma);

struct OdeOrderCheck {
  std::size_t order = 0;
  Integer lhs;
  Integer rhs;
  bool ok() const { return lhs == rhs; }
};

/// Outcome of the sequence checks for N summed over each degree.
struct SequenceReport {
  std::size_t max_degree = 0;
  /// direct[n-1] = Σ_{σ ∈ T^pl_n} N(σ), by enumeration.
  std::vector<Integer> direct;
  /// recursive[n-1] from Σ_{p+q=n} N(T^pl_p) N(T^pl_q) q.
  std::vector<Integer> recursive;
  /// A = 1 + xA² + x²AA' with a_k = direct[k], checked at orders 0..max_degree-2.
  std::vector<OdeOrderCheck> ode;

  bool recursion_matches() const { return direct == recursive; }
  bool ode_satisfied() const;
  bool passed() const { return recursion_matches() && ode_satisfied(); }
};

SequenceReport verify_a088716(std::size_t max_n, const Limits& limits = {});

}  // namespace prelie
