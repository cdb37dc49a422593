#include "prelie/tree.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <functional>

namespace prelie {

namespace {

int collation_rank(char c) {
  if (c == ')') return 0;
  if (c == '(') return 1;
  return 2 + static_cast<unsigned char>(c);
}

bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::strong_ordering compare_serializations(std::string_view a, std::string_view b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = collation_rank(a[i]);
    const int rb = collation_rank(b[i]);
    if (ra != rb) return ra <=> rb;
  }
  return a.size() <=> b.size();
}

bool is_valid_label(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), is_label_char);
}

std::string VertexId::to_string() const {
  if (path.empty()) return "r";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i != 0) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

struct PlanarTree::Node {
  Label label;
  std::vector<PlanarTree> children;
  std::string key;
  std::size_t degree = 1;
  std::size_t energy = 0;
  bool labeled = false;
};

PlanarTree::PlanarTree() {
  static const auto single = [] {
    auto node = std::make_shared<Node>();
    node->key = "()";
    return std::shared_ptr<const Node>(std::move(node));
  }();
  node_ = single;
}

PlanarTree::PlanarTree(std::vector<PlanarTree> children, Label label) {
  if (label && !is_valid_label(*label)) {
    throw ParseError("invalid vertex label '" + *label + "'");
  }
  auto node = std::make_shared<Node>();
  node->labeled = label.has_value();
  node->key = label.value_or("");
  node->key += '(';
  for (const auto& child : children) {
    node->key += child.serialize();
    node->degree += child.degree();
    node->energy += child.potential_energy() + child.degree();
    node->labeled = node->labeled || child.has_labels();
  }
  node->key += ')';
  node->label = std::move(label);
  node->children = std::move(children);
  node_ = std::move(node);
}

PlanarTree PlanarTree::vertex(Label label) {
  if (!label) return PlanarTree();
  return PlanarTree({}, std::move(label));
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse_all() {
    skip_space();
    PlanarTree tree = parse_tree();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return tree;
  }

 private:
  PlanarTree parse_tree() {
    Label label;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ > start) label = std::string(text_.substr(start, pos_ - start));
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::vector<PlanarTree> children;
    while (pos_ < text_.size() && text_[pos_] != ')') children.push_back(parse_tree());
    if (pos_ >= text_.size()) fail("unbalanced parentheses");
    ++pos_;
    if (!label && children.empty()) return PlanarTree();
    return PlanarTree(std::move(children), std::move(label));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarTree PlanarTree::parse(std::string_view text) { return TreeParser(text).parse_all(); }

const Label& PlanarTree::label() const { return node_->label; }
std::span<const PlanarTree> PlanarTree::children() const { return node_->children; }
std::size_t PlanarTree::degree() const { return node_->degree; }
std::size_t PlanarTree::potential_energy() const { return node_->energy; }
const std::string& PlanarTree::serialize() const { return node_->key; }
bool PlanarTree::has_labels() const { return node_->labeled; }

const PlanarTree& PlanarTree::at(const VertexId& id) const {
  const PlanarTree* current = this;
  for (std::size_t index : id.path) {
    if (index >= current->children().size()) {
      throw DomainError("vertex " + id.to_string() + " not in tree " + serialize());
    }
    current = &current->children()[index];
  }
  return *current;
}

std::vector<VertexId> PlanarTree::vertices() const {
  std::vector<VertexId> out;
  out.reserve(degree());
  VertexId current;
  std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& t) {
    out.push_back(current);
    for (std::size_t i = 0; i < t.children().size(); ++i) {
      current.path.push_back(i);
      walk(t.children()[i]);
      current.path.pop_back();
    }
  };
  walk(*this);
  return out;
}

bool operator==(const PlanarTree& a, const PlanarTree& b) {
  return a.node_ == b.node_ || a.node_->key == b.node_->key;
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return compare_serializations(a.node_->key, b.node_->key);
}

Tree::Tree() = default;

Tree::Tree(const PlanarTree& embedding) {
  if (embedding.is_single_vertex()) {
    canonical_ = embedding;
    return;
  }
  std::vector<Tree> children;
  children.reserve(embedding.children().size());
  for (const auto& child : embedding.children()) children.emplace_back(child);
  *this = Tree(std::move(children), embedding.label());
}

Tree::Tree(std::vector<Tree> children, Label label) {
  std::sort(children.begin(), children.end(), std::greater<>());
  std::vector<PlanarTree> planar;
  planar.reserve(children.size());
  for (auto& child : children) planar.push_back(child.canonical_);
  canonical_ = planar.empty() ? PlanarTree::vertex(std::move(label))
                              : PlanarTree(std::move(planar), std::move(label));
}

Tree Tree::parse(std::string_view text) { return Tree(PlanarTree::parse(text)); }

std::vector<Tree> Tree::children() const {
  std::vector<Tree> out;
  out.reserve(canonical_.children().size());
  for (const auto& child : canonical_.children()) out.push_back(Tree(CanonicalTag{}, child));
  return out;
}

bool canonical_precedes(const PlanarTree& a, const PlanarTree& b) {
  if (a.potential_energy() != b.potential_energy()) {
    return a.potential_energy() > b.potential_energy();
  }
  return a > b;
}

bool canonical_precedes(const Tree& a, const Tree& b) {
  return canonical_precedes(a.canonical(), b.canonical());
}

}  // namespace prelie
