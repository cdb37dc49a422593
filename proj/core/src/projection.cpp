#include "prelie/projection.hpp"

#include "growing_bijections.hpp"
#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"
#include "prelie/psi.hpp"
#include "prelie/statistics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace prelie {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> serializations(const auto& trees) {
  std::vector<std::string> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(t.serialize());
  return out;
}

}  // namespace

Tree forget_planarity(const PlanarTree& sigma) { return Tree(sigma); }

TreeSum forget_planarity(const TreeSum& planar_sum) {
  if (planar_sum.flavor() != Flavor::Planar) throw FlavorError("forget_planarity takes a planar sum");
  TreeSum result(Flavor::NonPlanar);
  for (const auto& [tree, coeff] : planar_sum.terms()) result.add(Tree(tree), coeff);
  return result;
}

std::vector<PlanarTree> planar_embeddings(const Tree& s) {
  if (s.is_single_vertex()) return {s.canonical()};
  // Children are stored in descending order, so next_permutation with
  // std::greater walks every distinct arrangement exactly once.
  std::vector<Tree> children = s.children();
  std::vector<PlanarTree> out;
  do {
    std::vector<std::vector<PlanarTree>> options;
    options.reserve(children.size());
    for (const auto& child : children) options.push_back(planar_embeddings(child));
    std::vector<std::size_t> choice(children.size(), 0);
    while (true) {
      std::vector<PlanarTree> picked;
      picked.reserve(children.size());
      for (std::size_t i = 0; i < children.size(); ++i) picked.push_back(options[i][choice[i]]);
      out.emplace_back(std::move(picked), s.label());
      std::size_t i = children.size();
      while (i > 0 && ++choice[i - 1] == options[i - 1].size()) choice[--i] = 0;
      if (i == 0) break;
    }
  } while (std::next_permutation(children.begin(), children.end(), std::greater<>()));
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeSum psi_bar(const PlanarTree& tau) { return forget_planarity(psi(tau)); }

Integer count_tilde_b(const Tree& s, const PlanarTree& tau, const Limits& limits) {
  if (s.degree() != tau.degree()) {
    throw DomainError("count_tilde_b: degrees differ (" + std::to_string(s.degree()) + " vs " +
                      std::to_string(tau.degree()) + ")");
  }
  if (s.has_labels() || tau.has_labels()) {
    throw DomainError("count_tilde_b: labelled trees are not supported");
  }
  check_degree(s.degree(), limits.brute_force_max, "count_tilde_b");
  const VertexOrder tree_order = vertex_order(s.canonical(), OrderKind::Tree);
  return detail::count_growing_bijections(tree_order, tree_order,
                                          vertex_order(tau, OrderKind::Total));
}

Integer alpha(const Tree& s, const PlanarTree& tau) {
  if (s.degree() != tau.degree()) {
    throw DomainError("alpha: degrees differ (" + std::to_string(s.degree()) + " vs " +
                      std::to_string(tau.degree()) + ")");
  }
  return psi_bar(tau).coefficient(s);
}

CoeffMatrix alpha_matrix(std::size_t n, const Limits& limits) {
  check_degree(n, limits.matrix_max_degree, "alpha_matrix");
  const auto& rows = enumerate_nonplanar(n, limits);
  const auto& cols = enumerate_planar(n, limits);
  CoeffMatrix m(n, serializations(rows), serializations(cols));
  for (std::size_t col = 0; col < cols.size(); ++col) {
    const TreeSum column = psi_bar(cols[col]);
    for (const auto& [tree, coeff] : column.terms()) {
      m.at(canonical_index(Tree(tree), limits), col) = coeff;
    }
  }
  return m;
}

void Section::assign(const Tree& t, const PlanarTree& sigma) {
  if (Tree(sigma) != t) {
    throw DomainError("section entry " + t.serialize() + " => " + sigma.serialize() +
                      " is not an embedding of " + t.serialize());
  }
  auto [it, inserted] = entries_.try_emplace(t, sigma);
  if (!inserted && it->second != sigma) {
    throw DomainError("section assigns " + t.serialize() + " twice (" +
                      it->second.serialize() + " and " + sigma.serialize() + ")");
  }
}

Section Section::parse(std::string_view text) {
  Section section;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto arrow = content.find("=>");
    if (arrow == std::string::npos) {
      throw ParseError("section line " + std::to_string(line_no) + ": expected '<tree> => <planar tree>'");
    }
    try {
      section.assign(Tree::parse(trim(std::string_view(content).substr(0, arrow))),
                     PlanarTree::parse(trim(std::string_view(content).substr(arrow + 2))));
    } catch (const ParseError& e) {
      throw ParseError("section line " + std::to_string(line_no) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("section line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return section;
}

Section Section::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read section file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string Section::to_text() const {
  std::vector<std::pair<Tree, PlanarTree>> sorted(entries_.begin(), entries_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return canonical_precedes(a.first, b.first);
  });
  std::string out;
  for (const auto& [t, sigma] : sorted) out += t.serialize() + " => " + sigma.serialize() + "\n";
  return out;
}

std::optional<PlanarTree> Section::find(const Tree& t) const {
  auto it = entries_.find(t);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const PlanarTree& Section::operator()(const Tree& t) const {
  auto it = entries_.find(t);
  if (it == entries_.end()) throw DomainError("section does not cover " + t.serialize());
  return it->second;
}

bool Section::covers(std::size_t n, const Limits& limits) const {
  const auto& trees = enumerate_nonplanar(n, limits);
  return std::all_of(trees.begin(), trees.end(),
                     [this](const Tree& t) { return entries_.count(t) != 0; });
}

Section default_section(std::size_t n, const Limits& limits) {
  check_degree(n, limits.max_degree, "default_section");
  Section section;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& t : enumerate_nonplanar(k, limits)) section.assign(t, t.canonical());
  }
  return section;
}

std::vector<Section> all_sections(std::size_t n, const Limits& limits) {
  constexpr std::size_t kMaxSections = 1'000'000;
  check_degree(n, limits.matrix_max_degree, "all_sections");
  const auto& trees = enumerate_nonplanar(n, limits);
  std::vector<std::vector<PlanarTree>> fibers;
  std::size_t total = 1;
  for (const auto& t : trees) {
    fibers.push_back(planar_embeddings(t));
    total *= fibers.back().size();
    if (total > kMaxSections) {
      throw DegreeCapError("all_sections: more than " + std::to_string(kMaxSections) +
                           " sections in degree " + std::to_string(n));
    }
  }
  std::vector<Section> out;
  out.reserve(total);
  std::vector<std::size_t> choice(trees.size(), 0);
  while (true) {
    Section s;
    for (std::size_t i = 0; i < trees.size(); ++i) s.assign(trees[i], fibers[i][choice[i]]);
    out.push_back(std::move(s));
    std::size_t i = trees.size();
    while (i > 0 && ++choice[i - 1] == fibers[i - 1].size()) choice[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

TreeSum psi_tilde(const Section& section, const Tree& t) { return psi_bar(section(t)); }

CoeffMatrix beta_matrix(const Section& section, std::size_t n, const Limits& limits) {
  check_degree(n, limits.matrix_max_degree, "beta_matrix");
  if (!section.covers(n, limits)) {
    throw DomainError("section does not cover every tree of degree " + std::to_string(n));
  }
  const auto& basis = enumerate_nonplanar(n, limits);
  const auto labels = serializations(basis);
  CoeffMatrix m(n, labels, labels);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const TreeSum column = psi_tilde(section, basis[col]);
    for (const auto& [tree, coeff] : column.terms()) {
      m.at(canonical_index(Tree(tree), limits), col) = coeff;
    }
  }
  return m;
}

}  // namespace prelie
