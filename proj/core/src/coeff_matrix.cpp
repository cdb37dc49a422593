#include "prelie/coeff_matrix.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <sstream>

namespace prelie {

CoeffMatrix::CoeffMatrix(std::size_t degree, std::vector<std::string> row_basis,
                         std::vector<std::string> col_basis)
    : degree_(degree),
      row_basis_(std::move(row_basis)),
      col_basis_(std::move(col_basis)),
      entries_(row_basis_.size() * col_basis_.size()) {}

Integer CoeffMatrix::entry_sum() const {
  Integer total = 0;
  for (const auto& e : entries_) total += e;
  return total;
}

Integer CoeffMatrix::column_sum(std::size_t col) const {
  Integer total = 0;
  for (std::size_t r = 0; r < rows(); ++r) total += at(r, col);
  return total;
}

bool CoeffMatrix::is_upper_unitriangular() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (at(r, r) != 1) return false;
    for (std::size_t c = 0; c < r; ++c) {
      if (at(r, c) != 0) return false;
    }
  }
  return true;
}

bool CoeffMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      if (at(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Integer CoeffMatrix::determinant() const {
  if (!is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = rows();
  if (n == 0) return 1;
  std::vector<Integer> m = entries_;
  auto a = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a(r, c) = (a(r, c) * a(k, k) - a(r, k) * a(k, c)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

CoeffMatrix CoeffMatrix::inverse_unitriangular() const {
  if (!is_upper_unitriangular()) {
    throw DomainError("inverse_unitriangular: matrix is not upper unitriangular");
  }
  const std::size_t n = rows();
  CoeffMatrix inv(degree_, col_basis_, row_basis_);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Integer value = (i == col) ? 1 : 0;
      for (std::size_t k = i + 1; k < n; ++k) value -= at(i, k) * inv.at(k, col);
      inv.at(i, col) = value;
    }
  }
  return inv;
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& other) const {
  if (cols() != other.rows()) throw DomainError("matrix product: dimension mismatch");
  CoeffMatrix out(degree_, row_basis_, other.col_basis_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k = 0; k < cols(); ++k) {
      if (at(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols(); ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  }
  return out;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string CoeffMatrix::to_csv() const {
  std::ostringstream out;
  out << "basis";
  for (const auto& label : col_basis_) out << ',' << csv_field(label);
  out << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    out << csv_field(row_basis_[r]);
    for (std::size_t c = 0; c < cols(); ++c) out << ',' << at(r, c);
    out << '\n';
  }
  return out.str();
}

std::string CoeffMatrix::to_text() const {
  std::size_t label_width = 0;
  for (const auto& label : row_basis_) label_width = std::max(label_width, label.size());
  std::vector<std::size_t> widths(cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    widths[c] = col_basis_[c].size();
    for (std::size_t r = 0; r < rows(); ++r) widths[c] = std::max(widths[c], at(r, c).str().size());
  }
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) {
    out << std::string(w > s.size() ? w - s.size() : 0, ' ') << s;
  };
  pad("", label_width);
  for (std::size_t c = 0; c < cols(); ++c) {
    out << "  ";
    pad(col_basis_[c], widths[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    pad(row_basis_[r], label_width);
    for (std::size_t c = 0; c < cols(); ++c) {
      out << "  ";
      pad(at(r, c).str(), widths[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prelie
