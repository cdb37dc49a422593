#pragma once

#include "prelie/integer.hpp"
#include "prelie/statistics.hpp"

namespace prelie::detail {

/// Counts bijections f: V(source) → V(target) such that
///   a ≺ b in `source_order`         ⇒ f(a) ⋘ f(b) in `target_total`, and
///   x < y in the target tree order  ⇒ f⁻¹(x) < f⁻¹(y) in `source_tree`.
///
/// Target vertices are assigned in ⋘ order, so the first condition becomes a
/// linear-extension constraint (every ≺-predecessor already placed) and the
/// second only has to be checked against the parent of each target vertex.
/// The root is forced onto the root.
Integer count_growing_bijections(const VertexOrder& source_order, const VertexOrder& source_tree,
                                 const VertexOrder& target_total);

}  // namespace prelie::detail
