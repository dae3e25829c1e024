#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspidal {

enum class OutputFormat { Csv, Json, Human };

/// Accepts csv, json and human; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Shortest decimal that parses back to the same double; nan, inf and -inf spelled out.
std::string format_double(double x);

/// Rows of preformatted cells plus the meta and summary blocks of the JSON form.
/// json_rows carries the typed values; cells are their text rendering.
struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  /// Adds one row; values must be in column order.
  void add_row(const nlohmann::ordered_json& row);
};

/// RFC 4180 quoting, LF line endings, header first.
std::string to_csv(const Report& report);
/// {"meta": ..., "rows": [...], "summary": ...}, two-space indent, trailing newline.
std::string to_json(const Report& report);
/// Left-aligned columns followed by the summary as key: value lines.
std::string to_human(const Report& report);

std::string render(const Report& report, OutputFormat format);

}  // namespace cuspidal
