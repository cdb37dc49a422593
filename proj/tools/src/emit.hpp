#pragma once

#include "prelie/binary_tree.hpp"
#include "prelie/coeff_matrix.hpp"
#include "prelie/tree.hpp"
#include "prelie/tree_sum.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prelie::cli {

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view text);

/// Ordered key/value result. Text prints "key: value" lines, CSV "key,value"
/// rows and JSON one object.
using Record = std::vector<std::pair<std::string, nlohmann::json>>;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool passed, std::string detail = {});
};

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  Format format() const { return format_; }

  void trees(std::string_view kind, std::size_t degree, const std::vector<PlanarTree>& trees);
  void binary_trees(std::size_t degree, const std::vector<BinaryTree>& trees);
  void sum(const TreeSum& sum);
  void matrix(const CoeffMatrix& m);
  void record(const Record& record);
  void report(const Report& report);
  /// Raw text for every format; JSON wraps it as {"text": ...}.
  void text_block(std::string_view key, const std::string& text);

 private:
  std::ostream& out_;
  Format format_;
};

}  // namespace prelie::cli
