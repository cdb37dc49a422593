#include "prelie/tree_sum.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace prelie {

std::string_view flavor_name(Flavor flavor) {
  return flavor == Flavor::Planar ? "planar" : "nonplanar";
}

TreeSum::TreeSum(const PlanarTree& t, Integer coeff) : flavor_(Flavor::Planar) { add(t, coeff); }

TreeSum::TreeSum(const Tree& t, Integer coeff) : flavor_(Flavor::NonPlanar) { add(t, coeff); }

void TreeSum::require_flavor(Flavor wanted, const char* what) const {
  if (flavor_ != wanted) {
    throw FlavorError(std::string(what) + ": expected a " + std::string(flavor_name(wanted)) +
                      " sum, got a " + std::string(flavor_name(flavor_)) + " one");
  }
}

void TreeSum::add_key(const PlanarTree& key, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void TreeSum::add(const PlanarTree& t, const Integer& coeff) {
  require_flavor(Flavor::Planar, "TreeSum::add");
  add_key(t, coeff);
}

void TreeSum::add(const Tree& t, const Integer& coeff) {
  require_flavor(Flavor::NonPlanar, "TreeSum::add");
  add_key(t.canonical(), coeff);
}

Integer TreeSum::coefficient(const PlanarTree& t) const {
  require_flavor(Flavor::Planar, "TreeSum::coefficient");
  auto it = terms_.find(t);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer TreeSum::coefficient(const Tree& t) const {
  require_flavor(Flavor::NonPlanar, "TreeSum::coefficient");
  auto it = terms_.find(t.canonical());
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer TreeSum::coefficient_sum() const {
  Integer total = 0;
  for (const auto& [tree, coeff] : terms_) total += coeff;
  return total;
}

TreeSum& TreeSum::operator+=(const TreeSum& other) {
  require_flavor(other.flavor_, "TreeSum::operator+=");
  for (const auto& [tree, coeff] : other.terms_) add_key(tree, coeff);
  return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& other) {
  require_flavor(other.flavor_, "TreeSum::operator-=");
  for (const auto& [tree, coeff] : other.terms_) add_key(tree, -coeff);
  return *this;
}

TreeSum& TreeSum::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [tree, coeff] : terms_) coeff *= scalar;
  return *this;
}

std::string TreeSum::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [tree, coeff] : terms_) {
    const bool negative = coeff < 0;
    const Integer magnitude = negative ? Integer(-coeff) : coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      out += magnitude.str();
      out += ' ';
    }
    out += tree.serialize();
    first = false;
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

TreeSum TreeSum::parse(std::string_view text, Flavor flavor) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    for (std::string token; in >> token;) tokens.push_back(token);
  }
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("tree sum parse error in '" + std::string(text) + "': " + what);
  };
  TreeSum sum(flavor);
  if (tokens.empty()) fail("empty input");
  if (tokens.size() == 1 && tokens[0] == "0") return sum;

  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Integer sign = 1;
    if (!first) {
      if (tokens[i] != "+" && tokens[i] != "-") fail("expected '+' or '-' before '" + tokens[i] + "'");
      if (tokens[i] == "-") sign = -1;
      ++i;
      if (i >= tokens.size()) fail("dangling operator");
    }
    std::string token = tokens[i];
    if (token == "-" || token == "+") {
      if (token == "-") sign = -sign;
      ++i;
      if (i >= tokens.size()) fail("dangling sign");
      token = tokens[i];
    }
    if (!token.empty() && (token[0] == '-' || token[0] == '+') && token.size() > 1) {
      if (token[0] == '-') sign = -sign;
      token.erase(0, 1);
    }
    Integer coeff = 1;
    if (all_digits(token)) {
      coeff = Integer(token);
      ++i;
      if (i >= tokens.size()) fail("coefficient without a tree");
      token = tokens[i];
    }
    if (flavor == Flavor::Planar) {
      sum.add(PlanarTree::parse(token), sign * coeff);
    } else {
      sum.add(Tree::parse(token), sign * coeff);
    }
    ++i;
    first = false;
  }
  return sum;
}

}  // namespace prelie
