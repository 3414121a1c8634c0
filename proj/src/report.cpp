#include "magnitude/report.hpp"

#include <algorithm>

#include "magnitude/error.hpp"

namespace magnitude {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

}  // namespace

std::string emit(const Report& report, std::string_view format) {
  if (format == "json") {
    Json j = report.json;
    if (j.is_null()) j = Json{{"kind", report.kind}, {"columns", report.columns}, {"rows", report.rows}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = join_csv(report.columns);
    for (const auto& row : report.rows) out += join_csv(row);
    return out;
  }
  if (format == "table") {
    std::vector<std::size_t> width(report.columns.size(), 0);
    for (std::size_t c = 0; c < report.columns.size(); ++c) width[c] = report.columns[c].size();
    for (const auto& row : report.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& fields) {
      std::string out;
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (c) out += "  ";
        out += fields[c];
        if (c + 1 < fields.size() && c < width.size()) out += std::string(width[c] - fields[c].size(), ' ');
      }
      return out + "\n";
    };
    std::string out = line(report.columns);
    for (const auto& row : report.rows) out += line(row);
    if (!report.summary.empty()) out += report.summary + "\n";
    return out;
  }
  throw Error(ErrorCode::UnsupportedFormat, "unsupported output format '" + std::string(format) + "'",
              {std::string(format)});
}

}  // namespace magnitude
