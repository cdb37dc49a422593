#pragma once

#include "emit.hpp"
#include "prelie/limits.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace prelie::cli {

struct VerifyOptions {
  /// Suite-specific default when unset.
  std::optional<std::size_t> max_degree;
  std::uint64_t seed = 0;
  std::size_t samples = 64;
};

std::vector<std::string_view> verify_suite_names();
std::size_t default_verify_degree(std::string_view suite);

/// Throws ParseError for an unknown suite.
Report run_verify_suite(std::string_view suite, const VerifyOptions& options, const Limits& limits);

}  // namespace prelie::cli
