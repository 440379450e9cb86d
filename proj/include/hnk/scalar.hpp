#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hnk/error.hpp"

namespace hnk {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; every operation is exact.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p/q" or a plain integer literal. Whitespace is not allowed.
Scalar parse_scalar(const std::string &text);

/// Formats as "p" or "p/q", the inverse of parse_scalar.
std::string scalar_to_string(const Scalar &s);

} // namespace hnk
