#include "prelie/statistics.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <map>

namespace prelie {

std::size_t potential_energy(const PlanarTree& t) { return t.potential_energy(); }
std::size_t potential_energy(const Tree& t) { return t.potential_energy(); }

Integer symmetry_factor(const Tree& s) {
  Integer result = 1;
  const auto children = s.children();
  // Canonical children are sorted, so equal children are adjacent.
  for (std::size_t i = 0; i < children.size();) {
    std::size_t j = i;
    while (j < children.size() && children[j] == children[i]) ++j;
    const Integer child_sym = symmetry_factor(children[i]);
    for (std::size_t m = 1; m <= j - i; ++m) result *= Integer(m) * child_sym;
    i = j;
  }
  return result;
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "<" || text == "lt" || text == "tree") return OrderKind::Tree;
  if (text == "<<" || text == "ll" || text == "left") return OrderKind::LeftRefined;
  if (text == "<<<" || text == "lll" || text == "total") return OrderKind::Total;
  throw ParseError("unknown vertex order '" + std::string(text) + "'");
}

std::string_view order_kind_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Tree: return "<";
    case OrderKind::LeftRefined: return "<<";
    case OrderKind::Total: return "<<<";
  }
  return "?";
}

std::size_t VertexOrder::index_of(const VertexId& v) const {
  // Preorder listing is exactly the lexicographic order of paths.
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw DomainError("vertex " + v.to_string() + " does not belong to this tree");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<VertexId> VertexOrder::ascending() const {
  std::vector<std::size_t> idx(size());
  for (std::size_t i = 0; i < size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less(a, b); });
  std::vector<VertexId> out;
  out.reserve(size());
  for (std::size_t i : idx) out.push_back(vertices_[i]);
  return out;
}

namespace {

bool is_proper_prefix(const VertexId& a, const VertexId& b) {
  return a.path.size() < b.path.size() && std::equal(a.path.begin(), a.path.end(), b.path.begin());
}

bool is_right_sibling_of(const VertexId& v, const VertexId& w) {
  if (v.path.empty() || v.path.size() != w.path.size()) return false;
  if (!std::equal(v.path.begin(), v.path.end() - 1, w.path.begin())) return false;
  return v.path.back() > w.path.back();
}

// Vertices listed in "⋘" order, from t = t₁ ∘↘ t₂: all of V(t₂) first, then V(t₁).
std::vector<VertexId> total_order_sequence(const PlanarTree& t) {
  if (t.is_single_vertex()) return {VertexId{}};
  const PlanarTree& branch = t.children()[0];
  std::vector<PlanarTree> rest(t.children().begin() + 1, t.children().end());
  const PlanarTree trunk = rest.empty() ? PlanarTree::vertex(t.label())
                                        : PlanarTree(std::move(rest), t.label());
  std::vector<VertexId> out;
  out.reserve(t.degree());
  for (VertexId v : total_order_sequence(trunk)) {
    if (!v.path.empty()) ++v.path.front();
    out.push_back(std::move(v));
  }
  for (VertexId v : total_order_sequence(branch)) {
    v.path.insert(v.path.begin(), 0);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

VertexOrder vertex_order(const PlanarTree& t, OrderKind kind) {
  VertexOrder order;
  order.kind_ = kind;
  order.vertices_ = t.vertices();
  const std::size_t n = order.vertices_.size();
  order.relation_.assign(n * n, 0);
  const auto& vs = order.vertices_;
  switch (kind) {
    case OrderKind::Tree:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) order.relation_[a * n + b] = is_proper_prefix(vs[a], vs[b]);
      }
      break;
    case OrderKind::LeftRefined:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          order.relation_[a * n + b] =
              is_proper_prefix(vs[a], vs[b]) || is_right_sibling_of(vs[a], vs[b]);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
          if (!order.relation_[a * n + k]) continue;
          for (std::size_t b = 0; b < n; ++b) {
            if (order.relation_[k * n + b]) order.relation_[a * n + b] = 1;
          }
        }
      }
      break;
    case OrderKind::Total: {
      const auto sequence = total_order_sequence(t);
      std::vector<std::size_t> rank(n);
      for (std::size_t r = 0; r < n; ++r) rank[order.index_of(sequence[r])] = r;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) order.relation_[a * n + b] = rank[a] < rank[b];
      }
      break;
    }
  }
  return order;
}

VertexOrder vertex_order(const Tree& t, OrderKind kind) {
  if (kind != OrderKind::Tree) {
    throw DomainError("order '" + std::string(order_kind_name(kind)) +
                      "' needs a planar tree; " + t.serialize() + " is non-planar");
  }
  return vertex_order(t.canonical(), kind);
}

}  // namespace prelie
