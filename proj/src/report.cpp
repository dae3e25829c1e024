#include "cuspidal/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cuspidal {

namespace {

std::string cell_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// nlohmann writes finite doubles shortest round-trip but nan and inf as null.
nlohmann::ordered_json shortest(const nlohmann::ordered_json& v) {
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) return format_double(x);
    return v;
  }
  if (v.is_structured()) {
    nlohmann::ordered_json out = v;
    for (auto& item : out) item = shortest(item);
    return out;
  }
  return v;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "human") return OutputFormat::Human;
  throw std::invalid_argument("unknown format '" + name + "' (csv, json, human)");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void Report::add_row(const nlohmann::ordered_json& row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the columns");
  std::vector<std::string> line;
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  std::size_t i = 0;
  for (const auto& v : row) {
    line.push_back(cell_text(v));
    obj[columns[i++]] = v;
  }
  cells.push_back(std::move(line));
  json_rows.push_back(std::move(obj));
}

std::string to_csv(const Report& report) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_quote(row[i]);
    }
    out += '\n';
  };
  emit(report.columns);
  for (const auto& row : report.cells) emit(row);
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["meta"] = shortest(report.meta);
  doc["rows"] = shortest(report.json_rows);
  doc["summary"] = shortest(report.summary);
  return doc.dump(2) + "\n";
}

std::string to_human(const Report& report) {
  std::vector<std::size_t> width(report.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = report.columns[i].size();
  for (const auto& row : report.cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << '\n';
  };
  emit(report.columns);
  for (const auto& row : report.cells) emit(row);
  if (!report.summary.empty()) {
    os << '\n';
    for (const auto& [key, value] : report.summary.items()) os << key << ": " << cell_text(value) << '\n';
  }
  return os.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return to_csv(report);
    case OutputFormat::Json: return to_json(report);
    case OutputFormat::Human: return to_human(report);
  }
  return {};
}

}  // namespace cuspidal
