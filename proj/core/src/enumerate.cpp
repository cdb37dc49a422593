#include "prelie/enumerate.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace prelie {

namespace {

template <typename T>
class DegreeCache {
 public:
  template <typename Build>
  const std::vector<T>& get(std::size_t n, Build build) {
    std::lock_guard lock(mutex_);
    return get_locked(n, build);
  }

 private:
  template <typename Build>
  const std::vector<T>& get_locked(std::size_t n, Build build) {
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      auto lower = [&](std::size_t k) -> const std::vector<T>& { return get_locked(k, build); };
      it = cache_.emplace(n, std::make_unique<const std::vector<T>>(build(n, lower))).first;
    }
    return *it->second;
  }

  std::mutex mutex_;
  std::map<std::size_t, std::unique_ptr<const std::vector<T>>> cache_;
};

DegreeCache<PlanarTree>& planar_cache() {
  static DegreeCache<PlanarTree> cache;
  return cache;
}

DegreeCache<Tree>& nonplanar_cache() {
  static DegreeCache<Tree> cache;
  return cache;
}

template <typename Lower>
std::vector<PlanarTree> build_planar(std::size_t n, Lower lower) {
  if (n == 1) return {PlanarTree()};
  // Every tree with n >= 2 vertices is uniquely (leftmost branch) ∘↘ (trunk).
  std::vector<PlanarTree> out;
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& branch : lower(k)) {
      for (const auto& trunk : lower(n - k)) {
        std::vector<PlanarTree> children;
        children.reserve(trunk.children().size() + 1);
        children.push_back(branch);
        children.insert(children.end(), trunk.children().begin(), trunk.children().end());
        out.emplace_back(std::move(children));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PlanarTree& a, const PlanarTree& b) { return canonical_precedes(a, b); });
  return out;
}

// Appends to `out` every root carrying a non-increasing child sequence whose
// sizes add up to `remaining`, each child no larger than `bound`.
template <typename Lower>
void build_forests(std::size_t remaining, const Tree* bound, std::vector<Tree>& current,
                   Lower& lower, std::vector<Tree>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t k = 1; k <= remaining; ++k) {
    for (const auto& child : lower(k)) {
      if (bound != nullptr && child > *bound) continue;
      current.push_back(child);
      build_forests(remaining - k, &child, current, lower, out);
      current.pop_back();
    }
  }
}

template <typename Lower>
std::vector<Tree> build_nonplanar(std::size_t n, Lower lower) {
  if (n == 1) return {Tree()};
  std::vector<Tree> out;
  std::vector<Tree> current;
  build_forests(n - 1, nullptr, current, lower, out);
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return canonical_precedes(a, b); });
  return out;
}

}  // namespace

const std::vector<PlanarTree>& enumerate_planar(std::size_t n, const Limits& limits) {
  check_degree(n, limits.max_degree, "enumerate_planar");
  return planar_cache().get(n, [](std::size_t k, auto lower) { return build_planar(k, lower); });
}

const std::vector<Tree>& enumerate_nonplanar(std::size_t n, const Limits& limits) {
  check_degree(n, limits.max_degree, "enumerate_nonplanar");
  return nonplanar_cache().get(n,
                               [](std::size_t k, auto lower) { return build_nonplanar(k, lower); });
}

std::size_t canonical_index(const PlanarTree& t, const Limits& limits) {
  const auto& all = enumerate_planar(t.degree(), limits);
  auto it = std::lower_bound(all.begin(), all.end(), t, [](const PlanarTree& a, const PlanarTree& b) {
    return canonical_precedes(a, b);
  });
  if (it == all.end() || *it != t) {
    throw DomainError("tree " + t.serialize() + " is not in the canonical enumeration");
  }
  return static_cast<std::size_t>(it - all.begin());
}

std::size_t canonical_index(const Tree& t, const Limits& limits) {
  const auto& all = enumerate_nonplanar(t.degree(), limits);
  auto it = std::lower_bound(all.begin(), all.end(), t,
                             [](const Tree& a, const Tree& b) { return canonical_precedes(a, b); });
  if (it == all.end() || *it != t) {
    throw DomainError("tree " + t.serialize() + " is not in the canonical enumeration");
  }
  return static_cast<std::size_t>(it - all.begin());
}

}  // namespace prelie
