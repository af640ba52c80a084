#include "binomiacci/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace binomiacci {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kJsonIndent = 2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ojson cell_json(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return ojson(v); },
                        [](const ExactInteger& v) { return ojson(to_decimal(v)); },
                        [](Real r) {
                          if (!std::isfinite(r.value)) return ojson(format_real(r.value));
                          return ojson(std::stod(format_real(r.value)));
                        },
                        [](const std::string& s) { return ojson(s); },
                    },
                    cell);
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::pretty;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string format_real_from_log(int sign, double log_abs) {
  if (sign == 0) return "0";
  const double direct = std::exp(log_abs);
  if (std::isfinite(direct) && direct > 0.0) return format_real(sign * direct);

  const double log10_value = log_abs / std::log(10.0);
  long long exponent = static_cast<long long>(std::floor(log10_value));
  double mantissa = std::pow(10.0, log10_value - static_cast<double>(exponent));
  char digits[64];
  std::snprintf(digits, sizeof digits, "%.11f", mantissa);
  if (digits[0] == '1' && digits[1] == '0') {  // rounded up to 10.000...
    ++exponent;
    std::snprintf(digits, sizeof digits, "%.11f", mantissa / 10.0);
  }
  std::string text = digits;
  while (text.back() == '0') text.pop_back();
  if (text.back() == '.') text.pop_back();
  char suffix[32];
  std::snprintf(suffix, sizeof suffix, "e%c%02lld", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  return (sign < 0 ? "-" : "") + text + suffix;
}

std::string cell_text(const Cell& cell) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const ExactInteger& v) { return to_decimal(v); },
                        [](Real r) { return format_real(r.value); },
                        [](const std::string& s) { return s; },
                    },
                    cell);
}

std::string to_csv(const Document& doc) {
  CsvTable table;
  table.header = doc.columns;
  for (const auto& row : doc.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    table.rows.push_back(std::move(fields));
  }
  return write_csv(table);
}

std::string to_json(const Document& doc) {
  ojson out = ojson::object();
  out["command"] = doc.command;
  out["params"] = doc.params;
  ojson rows = ojson::array();
  for (const auto& row : doc.rows) {
    ojson entry = ojson::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) entry[doc.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(entry));
  }
  out["rows"] = std::move(rows);
  return out.dump(kJsonIndent) + "\n";
}

std::string write_csv(const CsvTable& table) {
  std::string text;
  const auto append_field = [&text](const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
      text += field;
      return;
    }
    text += '"';
    for (const char c : field) {
      if (c == '"') text += '"';
      text += c;
    }
    text += '"';
  };
  const auto append_line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) text += ',';
      append_field(fields[i]);
    }
    text += '\n';
  };
  append_line(table.header);
  for (const auto& row : table.rows) append_line(row);
  return text;
}

// RFC 4180 subset: quoted fields may hold commas, doubled quotes and newlines.
CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c != '"') {
        field += c;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(fields));
      fields.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted csv field");
  if (!field.empty() || !fields.empty()) {
    fields.push_back(std::move(field));
    lines.push_back(std::move(fields));
  }
  if (lines.empty()) throw std::invalid_argument("csv has no header row");
  CsvTable table;
  table.header = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != table.header.size()) throw std::invalid_argument("ragged csv row");
    table.rows.push_back(std::move(lines[i]));
  }
  return table;
}

std::string reformat_json(std::string_view text) {
  return ojson::parse(text).dump(kJsonIndent) + "\n";
}

}  // namespace binomiacci
