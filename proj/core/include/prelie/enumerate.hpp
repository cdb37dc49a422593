#pragma once

#include "prelie/limits.hpp"
#include "prelie/tree.hpp"

#include <cstddef>
#include <vector>

namespace prelie {

/// All planar rooted trees with n vertices in canonical order (descending
/// potential energy, ties by descending serialization). Results are cached
/// for the lifetime of the process; the returned reference stays valid.
const std::vector<PlanarTree>& enumerate_planar(std::size_t n, const Limits& limits = {});

/// All non-planar rooted trees with n vertices in canonical order. Generated
/// directly as multisets of smaller trees on a root.
const std::vector<Tree>& enumerate_nonplanar(std::size_t n, const Limits& limits = {});

/// Position of `t` inside the canonical enumeration of its degree.
std::size_t canonical_index(const PlanarTree& t, const Limits& limits = {});
std::size_t canonical_index(const Tree& t, const Limits& limits = {});

}  // namespace prelie
