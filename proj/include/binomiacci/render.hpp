#pragma once

/**
 * @file render.hpp
 * @brief Tabular documents and their csv / json encodings.
 *
 * Exact integers are always written as decimal strings, reals with 12
 * significant digits. CSV uses a header row, commas and LF line endings.
 * JSON is {"command": ..., "params": {...}, "rows": [{column: value}, ...]}
 * printed with two-space indentation.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "binomiacci/exact.hpp"

namespace binomiacci {

enum class OutputFormat { pretty, csv, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Indices are plain numbers; exact values become strings; reals use
/// format_real; text is copied verbatim.
struct Real {
  double value;
};
using Cell = std::variant<std::int64_t, ExactInteger, Real, std::string>;

struct Document {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// printf("%.12g"). Non-finite values are spelled "inf", "-inf", "nan".
std::string format_real(double value);

/// 12 significant digits of sign * exp(log_abs), in %.12g style, without
/// requiring the value to fit in a double.
std::string format_real_from_log(int sign, double log_abs);

std::string cell_text(const Cell& cell);

std::string to_csv(const Document& doc);
std::string to_json(const Document& doc);

/// Parsed csv: header plus raw string fields.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Throws std::invalid_argument on ragged rows or missing header.
CsvTable parse_csv(std::string_view text);
std::string write_csv(const CsvTable& table);

/// Re-serializes parsed json in the same layout to_json uses.
std::string reformat_json(std::string_view text);

}  // namespace binomiacci
