#include "binomiacci/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "binomiacci/asymptotics.hpp"
#include "binomiacci/power_series.hpp"
#include "binomiacci/render.hpp"
#include "binomiacci/sequence.hpp"
#include "binomiacci/verify.hpp"

namespace binomiacci {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "pretty";
  std::string out_path;
  bool force = false;

  long long rows = -1;
  long long cols = -1;
  std::string which;
  long long order = -1;
  long long max = -1;
  std::string suite = "all";
};

std::size_t checked_extent(long long value, const char* flag, const Options& opts, long long minimum = 0) {
  if (value < minimum) {
    throw UsageError(std::string(flag) + " must be >= " + std::to_string(minimum));
  }
  if (value > kGuardLimit && !opts.force) {
    throw UsageError(std::string(flag) + " exceeds " + std::to_string(kGuardLimit) + "; pass --force to override");
  }
  return static_cast<std::size_t>(value);
}

std::string align(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::string text;
  const auto line = [&](const std::vector<std::string>& fields) {
    std::string l;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) l += "  ";
      l += std::string(width[i] - fields[i].size(), ' ') + fields[i];
    }
    text += l + '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return text;
}

std::string pretty_document(const Document& doc) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : doc.rows) {
    std::vector<std::string> fields;
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    rows.push_back(std::move(fields));
  }
  return align(doc.columns, rows);
}

std::string render(const Document& doc, OutputFormat format, const std::string& pretty) {
  switch (format) {
    case OutputFormat::csv: return to_csv(doc);
    case OutputFormat::json: return to_json(doc);
    case OutputFormat::pretty: break;
  }
  return pretty;
}

// Wide layout: one row per k, one column per power n.
Document grid_document(std::string command, nlohmann::ordered_json params,
                       const std::vector<std::vector<Cell>>& grid, std::size_t max_n) {
  Document doc{std::move(command), std::move(params), {"k"}, {}};
  for (std::size_t n = 0; n <= max_n; ++n) doc.columns.push_back(std::to_string(n));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<Cell> row{static_cast<std::int64_t>(k)};
    row.insert(row.end(), grid[k].begin(), grid[k].end());
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string pretty_grid(const Document& doc) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    std::vector<std::string> fields;
    for (std::size_t c = 0; c < doc.rows[r].size(); ++c) {
      std::string text = cell_text(doc.rows[r][c]);
      // Column c holds power n = c - 1; mark the diagonal.
      if (c >= 1 && c - 1 == r) text = "[" + text + "]";
      fields.push_back(std::move(text));
    }
    rows.push_back(std::move(fields));
  }
  return align(doc.columns, rows);
}

std::string cmd_table(const Options& opts, OutputFormat format) {
  const std::size_t max_k = checked_extent(opts.rows, "--rows", opts);
  const std::size_t max_n = checked_extent(opts.cols, "--cols", opts);
  const BinomiacciTable t = table(max_k, max_n);
  std::vector<std::vector<Cell>> grid;
  for (const auto& row : t.cells()) grid.emplace_back(row.begin(), row.end());
  const Document doc = grid_document("table", {{"rows", max_k}, {"cols", max_n}}, grid, max_n);
  return render(doc, format, format == OutputFormat::pretty ? pretty_grid(doc) : "");
}

std::string cmd_triangle(const Options& opts, OutputFormat format) {
  const std::size_t rows = checked_extent(opts.rows, "--rows", opts, 1);
  const BinomiacciTable t = table(rows - 1, rows - 1);
  Document doc{"triangle", {{"rows", rows}}, {"m", "k", "value"}, {}};
  std::vector<std::string> lines;
  for (std::size_t m = 0; m < rows; ++m) {
    std::string line;
    for (std::size_t k = 0; k <= m; ++k) {
      const ExactInteger& value = t.at(k, m - k);
      doc.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(k), value});
      if (k > 0) line += ' ';
      line += to_decimal(value);
    }
    lines.push_back(std::move(line));
  }
  std::string pretty;
  const std::size_t width = lines.back().size();
  for (const auto& line : lines) pretty += std::string((width - line.size()) / 2, ' ') + line + '\n';
  return render(doc, format, pretty);
}

std::size_t parse_row_index(std::string_view text) {
  std::size_t k = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("malformed --which row index: '" + std::string(text) + "'");
  }
  return k;
}

Cell exact_cell(const ExactRational& value) {
  if (is_integral(value)) return ExactInteger(boost::multiprecision::numerator(value));
  return to_string(value);
}

std::string cmd_series(const Options& opts, OutputFormat format) {
  const std::size_t order = checked_extent(opts.order, "--order", opts);
  nlohmann::ordered_json params{{"which", opts.which}, {"order", order}};

  if (opts.which == "bivariate") {
    const BivariateSeries g = bivariate_gf(order, order);
    std::vector<std::vector<Cell>> grid(order + 1);
    for (std::size_t k = 0; k <= order; ++k)
      for (std::size_t n = 0; n <= order; ++n) grid[k].push_back(exact_cell(g.at(k, n)));
    const Document doc = grid_document("series", std::move(params), grid, order);
    return render(doc, format, format == OutputFormat::pretty ? pretty_grid(doc) : "");
  }

  TruncatedSeries series(0);
  if (opts.which == "fib") {
    series = fibonacci_gf(order);
  } else if (opts.which == "central") {
    series = central_gf(order);
  } else if (opts.which.starts_with("row:")) {
    series = row_gf(parse_row_index(std::string_view(opts.which).substr(4)), order);
  } else {
    throw UsageError("--which must be fib, row:<k>, central or bivariate");
  }

  Document doc{"series", std::move(params), {"power", "coefficient"}, {}};
  std::string pretty;
  for (std::size_t i = 0; i <= series.order(); ++i) {
    doc.rows.push_back({static_cast<std::int64_t>(i), exact_cell(series[i])});
    if (i > 0) pretty += ' ';
    pretty += to_string(series[i]);
  }
  return render(doc, format, pretty + '\n');
}

std::string cmd_asympt(const Options& opts, OutputFormat format) {
  const std::size_t n_max = checked_extent(opts.max, "--max", opts, 1);
  Document doc{"asympt", {{"max", n_max}}, {"n", "exact", "estimate", "ratio"}, {}};
  for (const EstimateRow& row : ratio_table(n_max)) {
    Cell estimate = std::isfinite(row.estimate) ? Cell(Real{row.estimate}) : Cell(format_real_from_log(1, row.log_estimate));
    doc.rows.push_back({static_cast<std::int64_t>(row.n), row.exact, std::move(estimate), Real{row.ratio}});
  }
  return render(doc, format, pretty_document(doc));
}

std::string cmd_verify(const Options& opts, OutputFormat format, bool& all_passed) {
  const auto suite = parse_suite(opts.suite);
  if (!suite) throw UsageError("unknown suite '" + opts.suite + "'");
  const auto results = run_suite(*suite);

  Document doc{"verify", {{"suite", opts.suite}}, {"suite", "check", "status", "measured", "tolerance"}, {}};
  std::size_t failed = 0;
  std::string pretty;
  for (const auto& r : results) {
    failed += !r.passed;
    const std::string status = r.passed ? "PASS" : "FAIL";
    doc.rows.push_back({r.suite, r.name, status, Real{r.measured}, Real{r.tolerance}});
    pretty += status + "  [" + r.suite + "] " + r.name + "  (measured " + format_real(r.measured);
    if (r.tolerance > 0.0) pretty += ", tolerance " + format_real(r.tolerance);
    pretty += ")\n";
  }
  all_passed = failed == 0 && !results.empty();
  pretty += std::to_string(results.size()) + " checks, " + std::to_string(failed) + " failed: " +
            (all_passed ? "PASS" : "FAIL") + "\n";
  return render(doc, format, pretty);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomiacci numbers: recurrence, generating functions, residues and asymptotics", "binomiacci"};
  app.require_subcommand(1, 1);
  Options opts;

  const auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));
    cmd->add_option("--out", opts.out_path, "write output to this file instead of stdout");
    cmd->add_flag("--force", opts.force, "lift the size guard");
  };

  CLI::App* table_cmd = app.add_subcommand("table", "Binomiacci table B(k, n)");
  table_cmd->add_option("--rows", opts.rows, "largest k")->required();
  table_cmd->add_option("--cols", opts.cols, "largest n")->required();
  add_common(table_cmd);

  CLI::App* triangle_cmd = app.add_subcommand("triangle", "Binomiacci triangle");
  triangle_cmd->add_option("--rows", opts.rows, "number of rows")->required();
  add_common(triangle_cmd);

  CLI::App* series_cmd = app.add_subcommand("series", "generating-function coefficients");
  series_cmd->add_option("--which", opts.which, "fib, row:<k>, central or bivariate")->required();
  series_cmd->add_option("--order", opts.order, "truncation order")->required();
  add_common(series_cmd);

  CLI::App* asympt_cmd = app.add_subcommand("asympt", "B(n,n) against 3*4^n/sqrt(pi n)");
  asympt_cmd->add_option("--max", opts.max, "largest n")->required();
  add_common(asympt_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-verification suites");
  verify_cmd->add_option("--suite", opts.suite, "all, recurrence, gf, diagonal, residues or asymptotics");
  add_common(verify_cmd);

  std::vector<const char*> argv{"binomiacci"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitSuccess;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const OutputFormat format = *parse_format(opts.format);
    std::string text;
    bool passed = true;
    if (table_cmd->parsed()) {
      text = cmd_table(opts, format);
    } else if (triangle_cmd->parsed()) {
      text = cmd_triangle(opts, format);
    } else if (series_cmd->parsed()) {
      text = cmd_series(opts, format);
    } else if (asympt_cmd->parsed()) {
      text = cmd_asympt(opts, format);
    } else {
      text = cmd_verify(opts, format, passed);
    }

    if (opts.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(opts.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + opts.out_path + "' for writing");
      file << text;
    }
    return passed ? kExitSuccess : kExitCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Anything else is an argument the computation rejected.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace binomiacci
