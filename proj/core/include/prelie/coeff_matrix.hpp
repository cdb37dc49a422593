#pragma once

#include "prelie/integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace prelie {

/// Dense integer matrix with labelled rows and columns. Labels are tree (or
/// monomial) serializations in the order used to build the matrix.
class CoeffMatrix {
 public:
  CoeffMatrix(std::size_t degree, std::vector<std::string> row_basis,
              std::vector<std::string> col_basis);

  std::size_t degree() const { return degree_; }
  std::size_t rows() const { return row_basis_.size(); }
  std::size_t cols() const { return col_basis_.size(); }
  const std::vector<std::string>& row_basis() const { return row_basis_; }
  const std::vector<std::string>& col_basis() const { return col_basis_; }
  bool is_square() const { return rows() == cols(); }

  const Integer& at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  Integer& at(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }

  Integer entry_sum() const;
  Integer column_sum(std::size_t col) const;
  /// Square, zero below the diagonal, ones on it.
  bool is_upper_unitriangular() const;
  /// Fraction-free Gaussian elimination (Bareiss). Square matrices only.
  Integer determinant() const;
  /// Back-substitution inverse; throws DomainError unless upper unitriangular.
  CoeffMatrix inverse_unitriangular() const;
  /// Row and column labels of the product are taken from the operands.
  CoeffMatrix operator*(const CoeffMatrix& other) const;
  bool is_identity() const;

  /// Header row "basis,<col labels>", then one row per row label.
  std::string to_csv() const;
  /// Aligned text table with the column labels as a header.
  std::string to_text() const;

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;

 private:
  std::size_t degree_;
  std::vector<std::string> row_basis_;
  std::vector<std::string> col_basis_;
  std::vector<Integer> entries_;
};

}  // namespace prelie
