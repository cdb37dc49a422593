#include "prelie/psi.hpp"

#include "growing_bijections.hpp"
#include "memo.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/products.hpp"
#include "prelie/series.hpp"
#include "prelie/statistics.hpp"

#include <algorithm>

namespace prelie {

namespace {

PlanarTree without_first_child(const PlanarTree& t) {
  if (t.children().size() == 1) return PlanarTree::vertex(t.label());
  return PlanarTree(std::vector<PlanarTree>(t.children().begin() + 1, t.children().end()), t.label());
}

PlanarTree replace_at(const PlanarTree& t, std::span<const std::size_t> path,
                      const PlanarTree& replacement) {
  if (path.empty()) return replacement;
  std::vector<PlanarTree> children(t.children().begin(), t.children().end());
  children[path.front()] = replace_at(children[path.front()], path.subspan(1), replacement);
  return PlanarTree(std::move(children), t.label());
}

// (σ^v, σ_v) for every vertex v of σ that has children.
std::vector<std::pair<PlanarTree, PlanarTree>> leftmost_cuts(const PlanarTree& sigma) {
  std::vector<std::pair<PlanarTree, PlanarTree>> out;
  if (sigma.is_single_vertex()) return out;
  out.emplace_back(sigma.children()[0], without_first_child(sigma));
  const auto children = sigma.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    for (auto& [branch, trunk] : leftmost_cuts(children[i])) {
      std::vector<PlanarTree> updated(children.begin(), children.end());
      updated[i] = std::move(trunk);
      out.emplace_back(std::move(branch), PlanarTree(std::move(updated), sigma.label()));
    }
  }
  return out;
}

detail::Memo<TreeSum>& psi_memo() {
  static detail::Memo<TreeSum> memo;
  return memo;
}

detail::Memo<Integer>& coeff_memo() {
  static detail::Memo<Integer> memo;
  return memo;
}

}  // namespace

std::pair<PlanarTree, PlanarTree> decompose(const PlanarTree& sigma) {
  if (sigma.is_single_vertex()) {
    throw DomainError("decompose: the single vertex " + sigma.serialize() + " has no branches");
  }
  return {sigma.children()[0], without_first_child(sigma)};
}

std::pair<PlanarTree, PlanarTree> split_leftmost_branch(const PlanarTree& sigma, const VertexId& v) {
  const PlanarTree& at = sigma.at(v);
  if (at.is_single_vertex()) {
    throw DomainError("split_leftmost_branch: vertex " + v.to_string() + " of " +
                      sigma.serialize() + " is a leaf");
  }
  return {at.children()[0], replace_at(sigma, v.path, without_first_child(at))};
}

TreeSum psi(const PlanarTree& tau) {
  if (tau.is_single_vertex()) return TreeSum(tau);
  if (auto cached = psi_memo().find(tau.serialize())) return *cached;
  const auto [branch, trunk] = decompose(tau);
  TreeSum result = bilinear_extend(ProductKind::LeftGraft, psi(branch), psi(trunk));
  psi_memo().insert(tau.serialize(), result);
  return result;
}

TreeSum psi(const TreeSum& planar_sum) {
  if (planar_sum.flavor() != Flavor::Planar) throw FlavorError("psi takes a planar sum");
  TreeSum result(Flavor::Planar);
  for (const auto& [tree, coeff] : planar_sum.terms()) result += coeff * psi(tree);
  return result;
}

TreeSum psi_inverse(const TreeSum& planar_sum) {
  if (planar_sum.flavor() != Flavor::Planar) throw FlavorError("psi_inverse takes a planar sum");
  TreeSum remainder = planar_sum;
  TreeSum result(Flavor::Planar);
  while (!remainder.empty()) {
    auto lowest = std::min_element(remainder.terms().begin(), remainder.terms().end(),
                                   [](const auto& a, const auto& b) {
                                     return a.first.potential_energy() < b.first.potential_energy();
                                   });
    const PlanarTree tree = lowest->first;
    const Integer coeff = lowest->second;
    result.add(tree, coeff);
    remainder -= coeff * psi(tree);
  }
  return result;
}

TreeSum psi_inverse(const PlanarTree& sigma) { return psi_inverse(TreeSum(sigma)); }

Integer coeff_c_recursive(const PlanarTree& sigma, const PlanarTree& tau) {
  if (sigma.degree() != tau.degree()) return 0;
  if (tau.is_single_vertex()) return sigma == tau ? 1 : 0;
  const std::string key = sigma.serialize() + "|" + tau.serialize();
  if (auto cached = coeff_memo().find(key)) return *cached;
  const auto [tau1, tau2] = decompose(tau);
  Integer total = 0;
  for (const auto& [branch, trunk] : leftmost_cuts(sigma)) {
    if (branch.degree() != tau1.degree()) continue;
    const Integer left = coeff_c_recursive(branch, tau1);
    if (left == 0) continue;
    total += left * coeff_c_recursive(trunk, tau2);
  }
  coeff_memo().insert(key, total);
  return total;
}

Integer coeff_c_bijections(const PlanarTree& sigma, const PlanarTree& tau, const Limits& limits) {
  if (sigma.degree() != tau.degree()) {
    throw DomainError("coeff_c_bijections: degrees differ (" + std::to_string(sigma.degree()) +
                      " vs " + std::to_string(tau.degree()) + ")");
  }
  if (sigma.has_labels() || tau.has_labels()) {
    throw DomainError("coeff_c_bijections: labelled trees are not supported");
  }
  check_degree(sigma.degree(), limits.brute_force_max, "coeff_c_bijections");
  return detail::count_growing_bijections(vertex_order(sigma, OrderKind::LeftRefined),
                                          vertex_order(sigma, OrderKind::Tree),
                                          vertex_order(tau, OrderKind::Total));
}

CoeffMatrix psi_matrix(std::size_t n, const Limits& limits) {
  check_degree(n, limits.matrix_max_degree, "psi_matrix");
  const auto& basis = enumerate_planar(n, limits);
  std::vector<std::string> labels;
  labels.reserve(basis.size());
  for (const auto& t : basis) labels.push_back(t.serialize());
  CoeffMatrix m(n, labels, labels);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const TreeSum column = psi(basis[col]);
    for (const auto& [tree, coeff] : column.terms()) {
      m.at(canonical_index(tree, limits), col) = coeff;
    }
  }
  return m;
}

Integer n_statistic(const PlanarTree& sigma) {
  if (sigma.is_single_vertex()) return 1;
  const auto [branch, trunk] = decompose(sigma);
  return n_statistic(branch) * n_statistic(trunk) * Integer(trunk.degree());
}

bool SequenceReport::ode_satisfied() const {
  return std::all_of(ode.begin(), ode.end(), [](const OdeOrderCheck& c) { return c.ok(); });
}

SequenceReport verify_a088716(std::size_t max_n, const Limits& limits) {
  check_degree(max_n, limits.max_degree, "verify_a088716");
  SequenceReport report;
  report.max_degree = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Integer total = 0;
    for (const auto& sigma : enumerate_planar(n, limits)) total += n_statistic(sigma);
    report.direct.push_back(total);
  }
  report.recursive.push_back(1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    Integer total = 0;
    for (std::size_t p = 1; p < n; ++p) {
      const std::size_t q = n - p;
      total += report.recursive[p - 1] * report.recursive[q - 1] * Integer(q);
    }
    report.recursive.push_back(total);
  }
  if (max_n >= 2) {
    const std::size_t order = max_n - 2;
    const TruncatedSeries a(order, report.direct);
    TruncatedSeries one(order);
    one[0] = 1;
    const TruncatedSeries rhs = one + (a * a).shifted(1) + (a * a.derivative()).shifted(2);
    for (std::size_t k = 0; k <= order; ++k) report.ode.push_back({k, a[k], rhs[k]});
  }
  return report;
}

}  // namespace prelie
