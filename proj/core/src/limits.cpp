#include "prelie/limits.hpp"

#include "prelie/errors.hpp"

#include <string>

namespace prelie {

void check_degree(std::size_t n, std::size_t cap, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": degree must be at least 1");
  if (n > cap) {
    throw DegreeCapError(std::string(what) + ": degree " + std::to_string(n) +
                         " exceeds the configured cap " + std::to_string(cap));
  }
}

}  // namespace prelie
