#include "prelie/monomial.hpp"

#include "prelie/enumerate.hpp"
#include "prelie/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace prelie {

struct MonomialExpr::Node {
  MonomialExpr left;
  MonomialExpr right;
};

MonomialExpr::MonomialExpr(std::string symbol) : symbol_(std::move(symbol)) {
  if (!is_valid_label(symbol_)) throw ParseError("invalid generator symbol '" + symbol_ + "'");
}

MonomialExpr::MonomialExpr(MonomialExpr left, MonomialExpr right)
    : degree_(left.degree() + right.degree()) {
  node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
}

const MonomialExpr& MonomialExpr::left() const {
  if (!node_) throw DomainError("generator " + symbol_ + " has no left factor");
  return node_->left;
}

const MonomialExpr& MonomialExpr::right() const {
  if (!node_) throw DomainError("generator " + symbol_ + " has no right factor");
  return node_->right;
}

std::string MonomialExpr::serialize() const {
  if (is_generator()) return symbol_;
  return "[" + left().serialize() + "," + right().serialize() + "]";
}

bool operator==(const MonomialExpr& a, const MonomialExpr& b) {
  if (a.is_generator() || b.is_generator()) {
    return a.is_generator() && b.is_generator() && a.symbol_ == b.symbol_;
  }
  return a.node_ == b.node_ || (a.left() == b.left() && a.right() == b.right());
}

namespace {

class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  MonomialExpr parse_all() {
    MonomialExpr m = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return m;
  }

 private:
  MonomialExpr parse_expr() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      MonomialExpr left = parse_expr();
      expect(',');
      MonomialExpr right = parse_expr();
      expect(']');
      return MonomialExpr(std::move(left), std::move(right));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_valid_label(text_.substr(pos_, 1))) ++pos_;
    if (pos_ == start) fail("expected a generator or '['");
    return MonomialExpr(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("monomial parse error at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Label generator_label(const std::string& symbol) {
  if (symbol == kDefaultGenerator) return std::nullopt;
  return symbol;
}

PlanarTree planar_reading(const MonomialExpr& m) {
  if (m.is_generator()) return PlanarTree::vertex(generator_label(m.symbol()));
  return left_butcher(planar_reading(m.left()), planar_reading(m.right()));
}

void require_single_generator(const MonomialExpr& m, const char* what) {
  if (m.is_generator()) {
    if (m.symbol() != kDefaultGenerator) {
      throw DomainError(std::string(what) + ": generator '" + m.symbol() +
                        "' is not the single generator g");
    }
    return;
  }
  require_single_generator(m.left(), what);
  require_single_generator(m.right(), what);
}

}  // namespace

MonomialExpr MonomialExpr::parse(std::string_view text) { return MonomialParser(text).parse_all(); }

std::vector<MonomialExpr> parse_monomial_list(std::string_view text) {
  std::vector<MonomialExpr> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    line.erase(line.find_last_not_of(" \t\r") + 1);
    try {
      out.push_back(MonomialExpr::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("monomial line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<MonomialExpr> load_monomial_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read monomial file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_monomial_list(buffer.str());
}

TreeSum evaluate(const MonomialExpr& m, ProductKind product) {
  if (m.is_generator()) {
    const PlanarTree v = PlanarTree::vertex(generator_label(m.symbol()));
    if (product_flavor(product) == Flavor::Planar) return TreeSum(v);
    return TreeSum(Tree(v));
  }
  return bilinear_extend(product, evaluate(m.left(), product), evaluate(m.right(), product));
}

Tree lower_energy_term(const MonomialExpr& m) {
  if (m.is_generator()) return Tree(PlanarTree::vertex(generator_label(m.symbol())));
  return butcher(lower_energy_term(m.left()), lower_energy_term(m.right()));
}

MonomialExpr planar_monomial(const PlanarTree& sigma) {
  if (sigma.is_single_vertex()) {
    return MonomialExpr(sigma.label().value_or(std::string(kDefaultGenerator)));
  }
  const PlanarTree trunk = sigma.children().size() == 1
                               ? PlanarTree::vertex(sigma.label())
                               : PlanarTree(std::vector<PlanarTree>(sigma.children().begin() + 1,
                                                                    sigma.children().end()),
                                            sigma.label());
  return MonomialExpr(planar_monomial(sigma.children()[0]), planar_monomial(trunk));
}

GeneratorOrder::GeneratorOrder() : alphabet_{std::string(kDefaultGenerator)} {}

GeneratorOrder::GeneratorOrder(std::vector<std::string> ascending) : alphabet_(std::move(ascending)) {
  if (alphabet_.empty()) throw DomainError("generator alphabet is empty");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (!is_valid_label(alphabet_[i])) {
      throw ParseError("invalid generator symbol '" + alphabet_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[j] == alphabet_[i]) throw DomainError("generator '" + alphabet_[i] + "' repeated");
    }
  }
}

bool GeneratorOrder::is_single_default() const {
  return alphabet_.size() == 1 && alphabet_.front() == kDefaultGenerator;
}

namespace {

// Position of a basis element in the extended order: degree first, then index.
struct Letter {
  std::size_t degree;
  std::size_t index;
  auto operator<=>(const Letter&) const = default;
};

// Weakly decreasing words of letters with total degree `remaining`, every
// letter ≤ `bound`. Listed by first letter (higher degree first, then lower
// index), recursively.
void words(const std::vector<std::vector<MonomialExpr>>& levels, std::size_t remaining, Letter bound,
           std::vector<Letter>& prefix, std::vector<std::vector<Letter>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t d = std::min(remaining, bound.degree); d >= 1; --d) {
    const std::size_t count = levels[d].size();
    for (std::size_t i = 0; i < count; ++i) {
      const Letter letter{d, i};
      if (bound < letter) break;
      prefix.push_back(letter);
      words(levels, remaining - d, letter, prefix, out);
      prefix.pop_back();
    }
  }
}

// levels[d] holds the basis of degree d, for d = 1..n.
std::vector<std::vector<MonomialExpr>> ag_levels(std::size_t n, const GeneratorOrder& order) {
  std::vector<std::vector<MonomialExpr>> levels(n + 1);
  for (const auto& s : order.alphabet()) levels[1].emplace_back(s);
  for (std::size_t d = 2; d <= n; ++d) {
    std::vector<std::vector<Letter>> all;
    std::vector<Letter> prefix;
    words(levels, d - 1, Letter{d - 1, levels[d - 1].size()}, prefix, all);
    for (const auto& word : all) {
      for (const auto& s : order.alphabet()) {
        MonomialExpr m{s};
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          m = MonomialExpr(levels[it->degree][it->index], std::move(m));
        }
        levels[d].push_back(std::move(m));
      }
    }
  }
  return levels;
}

}  // namespace

std::vector<MonomialExpr> ag_basis_multigen(std::size_t n, const GeneratorOrder& order,
                                            const Limits& limits) {
  check_degree(n, limits.multigen_max, "ag_basis_multigen");
  return ag_levels(n, order)[n];
}

MonomialBasis ag_basis(std::size_t n, const GeneratorOrder& order, const Limits& limits) {
  check_degree(n, order.size() == 1 ? limits.max_degree : limits.multigen_max, "ag_basis");
  MonomialBasis basis;
  basis.degree = n;
  basis.order = order;
  basis.monomials = std::move(ag_levels(n, order)[n]);
  basis.lower_terms.reserve(basis.monomials.size());
  for (const auto& m : basis.monomials) basis.lower_terms.push_back(lower_energy_term(m));
  return basis;
}

CoeffMatrix expand_basis(const MonomialBasis& basis, ColumnOrder columns, const Limits& limits) {
  check_degree(basis.degree, limits.matrix_max_degree, "expand_basis");
  if (!basis.order.is_single_default()) {
    throw DomainError("expand_basis: only one-generator bases have a tree-basis matrix");
  }
  for (const auto& m : basis.monomials) require_single_generator(m, "expand_basis");
  const auto& rows = enumerate_nonplanar(basis.degree, limits);
  std::vector<std::size_t> order(basis.monomials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (columns == ColumnOrder::LowerEnergyTerm) {
    const GroundingReport report = is_tree_grounded(basis.monomials, basis.degree, limits);
    if (!report) throw DomainError("expand_basis: basis is not tree-grounded");
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return canonical_precedes(lower_energy_term(basis.monomials[a]),
                                lower_energy_term(basis.monomials[b]));
    });
  }
  std::vector<std::string> row_labels;
  for (const auto& t : rows) row_labels.push_back(t.serialize());
  std::vector<std::string> col_labels;
  for (std::size_t i : order) {
    col_labels.push_back(columns == ColumnOrder::Basis
                             ? basis.monomials[i].serialize()
                             : lower_energy_term(basis.monomials[i]).serialize());
  }
  CoeffMatrix m(basis.degree, row_labels, col_labels);
  for (std::size_t col = 0; col < order.size(); ++col) {
    const MonomialExpr& mono = basis.monomials[order[col]];
    if (mono.degree() != basis.degree) {
      throw DomainError("expand_basis: monomial " + mono.serialize() + " has degree " +
                        std::to_string(mono.degree()));
    }
    const TreeSum column = evaluate(mono, ProductKind::Graft);
    for (const auto& [tree, coeff] : column.terms()) {
      m.at(canonical_index(Tree(tree), limits), col) = coeff;
    }
  }
  return m;
}

GroundingReport is_tree_grounded(std::span<const MonomialExpr> monomials, std::size_t n,
                                 const Limits& limits) {
  check_degree(n, limits.max_degree, "is_tree_grounded");
  std::map<Tree, std::size_t, std::greater<>> hits;
  for (const auto& m : monomials) {
    if (m.degree() != n) {
      throw DomainError("is_tree_grounded: monomial " + m.serialize() + " has degree " +
                        std::to_string(m.degree()) + ", expected " + std::to_string(n));
    }
    require_single_generator(m, "is_tree_grounded");
    ++hits[lower_energy_term(m)];
  }
  GroundingReport report;
  for (const auto& t : enumerate_nonplanar(n, limits)) {
    auto it = hits.find(t);
    if (it == hits.end()) {
      report.missing.push_back(t);
    } else if (it->second > 1) {
      report.duplicated.push_back(t);
    }
  }
  report.grounded = report.missing.empty() && report.duplicated.empty();
  return report;
}

MonomialBasis basis_of_section(const Section& section, std::size_t n, const Limits& limits) {
  check_degree(n, limits.max_degree, "basis_of_section");
  MonomialBasis basis;
  basis.degree = n;
  for (const auto& t : enumerate_nonplanar(n, limits)) {
    basis.monomials.push_back(planar_monomial(section(t)));
    basis.lower_terms.push_back(t);
  }
  return basis;
}

Section section_of_basis(std::span<const MonomialExpr> monomials, std::size_t n,
                         const Limits& limits) {
  const GroundingReport report = is_tree_grounded(monomials, n, limits);
  if (!report) throw DomainError("section_of_basis: the monomials are not tree-grounded");
  Section section;
  for (const auto& m : monomials) section.assign(lower_energy_term(m), planar_reading(m));
  return section;
}

}  // namespace prelie
