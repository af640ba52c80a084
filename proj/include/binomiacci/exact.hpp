#pragma once

// Exact scalar types shared by every module.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace binomiacci {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Decimal representation, e.g. "-1234".
std::string to_decimal(const ExactInteger& value);

/// Parses an optionally signed decimal string; throws std::invalid_argument
/// on anything else.
ExactInteger parse_decimal(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const ExactRational& value);

bool is_integral(const ExactRational& value);

/// Natural log of |value|, accurate to double precision for any magnitude.
/// Requires value != 0.
double log_abs(const ExactInteger& value);

}  // namespace binomiacci
