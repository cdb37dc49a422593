#include "prelie/binary_tree.hpp"

#include "prelie/errors.hpp"

namespace prelie {

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  std::size_t degree;
};

BinaryTree::BinaryTree() = default;

BinaryTree::BinaryTree(BinaryTree left, BinaryTree right) {
  const std::size_t degree = left.degree() + right.degree();
  node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), degree});
}

const BinaryTree& BinaryTree::left() const {
  if (is_leaf()) throw DomainError("the leaf has no left branch");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (is_leaf()) throw DomainError("the leaf has no right branch");
  return node_->right;
}

std::size_t BinaryTree::degree() const { return is_leaf() ? 1 : node_->degree; }

std::string BinaryTree::serialize() const {
  if (is_leaf()) return ".";
  return "[" + node_->left.serialize() + "," + node_->right.serialize() + "]";
}

bool operator==(const BinaryTree& a, const BinaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

namespace {

class BinaryParser {
 public:
  explicit BinaryParser(std::string_view text) : text_(text) {}

  BinaryTree parse_all() {
    BinaryTree t = parse_one();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  BinaryTree parse_one() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '.') {
      ++pos_;
      return BinaryTree();
    }
    expect('[');
    BinaryTree left = parse_one();
    expect(',');
    BinaryTree right = parse_one();
    expect(']');
    return BinaryTree(std::move(left), std::move(right));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("binary tree parse error at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BinaryTree BinaryTree::parse(std::string_view text) { return BinaryParser(text).parse_all(); }

}  // namespace prelie
