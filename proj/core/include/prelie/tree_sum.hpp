#pragma once

#include "prelie/integer.hpp"
#include "prelie/tree.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace prelie {

enum class Flavor { Planar, NonPlanar };

std::string_view flavor_name(Flavor flavor);

/// Finite integer linear combination of planar or non-planar trees.
///
/// Terms are keyed by tree and kept in descending serialization order; like
/// terms are collected on insertion and zero coefficients are dropped. Trees
/// of a non-planar sum are stored by their canonical embedding.
class TreeSum {
 public:
  using Terms = std::map<PlanarTree, Integer, std::greater<>>;

  explicit TreeSum(Flavor flavor) : flavor_(flavor) {}
  explicit TreeSum(const PlanarTree& t, Integer coeff = 1);
  explicit TreeSum(const Tree& t, Integer coeff = 1);

  /// Text form "c1 T1 + c2 T2 - c3 T3"; "0" is the empty sum.
  static TreeSum parse(std::string_view text, Flavor flavor);

  Flavor flavor() const { return flavor_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Planar sums only.
  void add(const PlanarTree& t, const Integer& coeff);
  /// Non-planar sums only.
  void add(const Tree& t, const Integer& coeff);

  Integer coefficient(const PlanarTree& t) const;
  Integer coefficient(const Tree& t) const;
  /// Number of trees counted with multiplicity.
  Integer coefficient_sum() const;

  TreeSum& operator+=(const TreeSum& other);
  TreeSum& operator-=(const TreeSum& other);
  TreeSum& operator*=(const Integer& scalar);

  friend TreeSum operator+(TreeSum a, const TreeSum& b) { return a += b; }
  friend TreeSum operator-(TreeSum a, const TreeSum& b) { return a -= b; }
  friend TreeSum operator*(const Integer& s, TreeSum a) { return a *= s; }
  friend TreeSum operator-(TreeSum a) { return a *= -1; }
  friend bool operator==(const TreeSum& a, const TreeSum& b) = default;

  std::string to_text() const;

 private:
  void add_key(const PlanarTree& key, const Integer& coeff);
  void require_flavor(Flavor wanted, const char* what) const;

  Flavor flavor_;
  Terms terms_;
};

}  // namespace prelie
