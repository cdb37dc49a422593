#pragma once

#include <cstddef>

namespace prelie {

/// Degree caps shared by enumeration, exhaustive searches and basis builders.
struct Limits {
  /// Largest degree for enumeration and per-degree matrices (planar count 58,786 at 12).
  std::size_t max_degree = 12;
  /// Largest degree for dense per-degree matrices (planar count 1,430 at 9).
  std::size_t matrix_max_degree = 9;
  /// Largest degree for exhaustive bijection counting.
  std::size_t brute_force_max = 8;
  /// Largest degree for multi-generator monomial bases.
  std::size_t multigen_max = 5;
};

/// Throws DomainError for n == 0 and DegreeCapError for n > cap.
void check_degree(std::size_t n, std::size_t cap, const char* what);

}  // namespace prelie
