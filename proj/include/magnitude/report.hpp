#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "magnitude/io.hpp"

namespace magnitude {

/// A tabular result plus its JSON form. `json` is what the json format prints;
/// when it is null, the table is printed as {"kind", "columns", "rows"}.
struct Report {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Json json;
  /// Printed after the table in the table format.
  std::string summary;
};

/// format ∈ {json, csv, table}; throws UnsupportedFormat otherwise.
/// Output depends only on the report contents.
std::string emit(const Report& report, std::string_view format);

}  // namespace magnitude
