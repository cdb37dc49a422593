#include "prelie/json.hpp"

#include "prelie/errors.hpp"

#include <cstdint>
#include <limits>

namespace prelie {

using nlohmann::json;

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("not a decimal integer: '" + text + "'");
    }
    return Integer(text);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "' in " + j.dump());
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return to_string(value);
}

json to_json(const PlanarTree& t) {
  json children = json::array();
  for (const auto& child : t.children()) children.push_back(to_json(child));
  return {{"label", t.label() ? json(*t.label()) : json(nullptr)}, {"children", std::move(children)}};
}

json to_json(const Tree& t) { return to_json(t.canonical()); }

json to_json(const TreeSum& sum) {
  json out = json::array();
  for (const auto& [tree, coeff] : sum.terms()) {
    out.push_back({{"coeff", to_string(coeff)}, {"tree", to_json(tree)}});
  }
  return out;
}

json to_json(const CoeffMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  json out = {{"degree", m.degree()}, {"basis", m.col_basis()}};
  if (m.row_basis() != m.col_basis()) out["row_basis"] = m.row_basis();
  out["entries"] = std::move(entries);
  return out;
}

json to_json(const MonomialBasis& basis) {
  json monomials = json::array();
  for (const auto& m : basis.monomials) monomials.push_back(m.serialize());
  return {{"degree", basis.degree},
          {"generator_order", basis.order.alphabet()},
          {"monomials", std::move(monomials)}};
}

PlanarTree planar_tree_from_json(const json& j) {
  const json& label = member(j, "label");
  const json& children = member(j, "children");
  Label parsed;
  if (label.is_string()) {
    parsed = label.get<std::string>();
  } else if (!label.is_null()) {
    throw ParseError("tree label must be a string or null");
  }
  if (!children.is_array()) throw ParseError("tree children must be an array");
  std::vector<PlanarTree> kids;
  for (const auto& child : children) kids.push_back(planar_tree_from_json(child));
  if (kids.empty()) return PlanarTree::vertex(std::move(parsed));
  return PlanarTree(std::move(kids), std::move(parsed));
}

Tree tree_from_json(const json& j) { return Tree(planar_tree_from_json(j)); }

TreeSum tree_sum_from_json(const json& j, Flavor flavor) {
  if (!j.is_array()) throw ParseError("tree sum must be an array");
  TreeSum sum(flavor);
  for (const auto& term : j) {
    const PlanarTree t = planar_tree_from_json(member(term, "tree"));
    const Integer coeff = integer_from_json(member(term, "coeff"));
    if (flavor == Flavor::Planar) {
      sum.add(t, coeff);
    } else {
      sum.add(Tree(t), coeff);
    }
  }
  return sum;
}

CoeffMatrix coeff_matrix_from_json(const json& j) {
  const json& degree = member(j, "degree");
  if (!degree.is_number_unsigned()) throw ParseError("matrix degree must be a non-negative integer");
  auto cols = string_list(member(j, "basis"), "basis");
  auto rows = j.contains("row_basis") ? string_list(j.at("row_basis"), "row_basis") : cols;
  const json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != rows.size()) {
    throw ParseError("matrix entries must have one row per basis element");
  }
  CoeffMatrix m(degree.get<std::size_t>(), std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!entries[r].is_array() || entries[r].size() != m.cols()) {
      throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = integer_from_json(entries[r][c]);
  }
  return m;
}

}  // namespace prelie
