#pragma once

// Exhaustive and sampled checks of the algebraic identities satisfied by the
// grafting and Butcher products on non-planar trees.

#include "prelie/limits.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prelie {

enum class Identity {
  PreLie,  ///< (x→y)→z − x→(y→z) = (y→x)→z − y→(x→z)
  Nap,     ///< x↷(y↷z) = y↷(x↷z)
};

std::string_view identity_name(Identity identity);

/// Left side minus right side of the pre-Lie identity; zero when it holds.
TreeSum prelie_defect(const Tree& x, const Tree& y, const Tree& z);
bool nap_holds(const Tree& x, const Tree& y, const Tree& z);

struct IdentityReport {
  Identity identity = Identity::PreLie;
  std::size_t max_total_degree = 0;
  std::size_t triples_checked = 0;
  /// "x y z" serializations of failing triples.
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// All triples of trees with |x| + |y| + |z| <= max_total_degree.
IdentityReport check_identity_exhaustive(Identity identity, std::size_t max_total_degree,
                                         const Limits& limits = {});

/// `samples` random triples with total degree in [min_total_degree, max_total_degree],
/// drawn from a generator seeded with `seed`.
IdentityReport check_identity_sampled(Identity identity, std::size_t min_total_degree,
                                      std::size_t max_total_degree, std::size_t samples,
                                      std::uint64_t seed, const Limits& limits = {});

}  // namespace prelie
