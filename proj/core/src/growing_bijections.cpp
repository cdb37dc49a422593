#include "growing_bijections.hpp"

#include "prelie/errors.hpp"

#include <cstdint>
#include <vector>

namespace prelie::detail {

namespace {

struct Search {
  std::size_t n = 0;
  std::vector<std::uint64_t> predecessors;  // ≺-predecessor mask per source vertex
  const VertexOrder* source_tree = nullptr;
  std::vector<std::size_t> target_sequence;  // target preorder indices in ⋘ order
  std::vector<std::size_t> target_parent;    // by target preorder index; n for the root
  std::vector<std::size_t> preimage;         // target preorder index → source vertex
  std::uint64_t count = 0;

  void run(std::size_t step, std::uint64_t used) {
    if (step == n) {
      ++count;
      return;
    }
    const std::size_t w = target_sequence[step];
    const std::size_t parent = target_parent[w];
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if (used & bit) continue;
      if ((predecessors[x] & used) != predecessors[x]) continue;
      if (parent != n && !source_tree->less(preimage[parent], x)) continue;
      preimage[w] = x;
      run(step + 1, used | bit);
    }
  }
};

}  // namespace

Integer count_growing_bijections(const VertexOrder& source_order, const VertexOrder& source_tree,
                                 const VertexOrder& target_total) {
  const std::size_t n = source_order.size();
  if (target_total.size() != n) throw DomainError("bijection count: vertex counts differ");
  if (n > 63) throw DegreeCapError("bijection count: more than 63 vertices");

  Search search;
  search.n = n;
  search.source_tree = &source_tree;
  search.predecessors.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (source_order.less(y, x)) search.predecessors[x] |= std::uint64_t{1} << y;
    }
  }
  const auto& targets = target_total.vertices();
  for (const auto& v : target_total.ascending()) search.target_sequence.push_back(target_total.index_of(v));
  search.target_parent.assign(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    if (targets[w].path.empty()) continue;
    VertexId parent = targets[w];
    parent.path.pop_back();
    search.target_parent[w] = target_total.index_of(parent);
  }
  search.preimage.assign(n, n);
  search.run(0, 0);
  return Integer(search.count);
}

}  // namespace prelie::detail
