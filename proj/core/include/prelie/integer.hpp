#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace prelie {

/// Exact coefficient type. Base-change entries grow super-exponentially in
/// the degree, so no fixed-width type is used anywhere for coefficients.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace prelie
