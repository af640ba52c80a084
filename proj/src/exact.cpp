#include "binomiacci/exact.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace binomiacci {

std::string to_decimal(const ExactInteger& value) { return value.str(); }

ExactInteger parse_decimal(std::string_view text) {
  std::size_t digits_from = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) digits_from = 1;
  if (digits_from == text.size()) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = digits_from; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  ExactInteger value(std::string(text.substr(digits_from)));
  return text[0] == '-' ? ExactInteger(-value) : value;
}

std::string to_string(const ExactRational& value) {
  const ExactInteger num = boost::multiprecision::numerator(value);
  const ExactInteger den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integral(const ExactRational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

double log_abs(const ExactInteger& value) {
  if (value == 0) throw std::domain_error("log_abs of zero");
  ExactInteger magnitude = abs(value);
  const std::size_t bits = boost::multiprecision::msb(magnitude) + 1;
  // Keep the top 64 bits as a double mantissa and account for the rest as a shift.
  std::size_t shift = bits > 64 ? bits - 64 : 0;
  magnitude >>= shift;
  return std::log(magnitude.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace binomiacci
