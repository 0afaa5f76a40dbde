#include "casimir/scan_result.hpp"

#include "casimir/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace casimir {

void ScanResult::check_shape() const {
  std::size_t expected = axes.empty() ? rows.size() : 1;
  for (const auto& axis : axes) expected *= axis.values.size();
  if (rows.size() != expected) {
    std::ostringstream os;
    os << "scan result: " << rows.size() << " rows for an axis grid of " << expected
       << " points";
    throw ParameterError(os.str());
  }
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw ParameterError("scan result: row width does not match the column count");
  }
}

std::string format_csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string ScanResult::to_csv() const {
  check_shape();
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c].name;
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_csv_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json ScanResult::to_json() const {
  check_shape();
  nlohmann::json axes_json = nlohmann::json::array();
  for (const auto& a : axes)
    axes_json.push_back({{"name", a.name}, {"unit", a.unit}, {"values", a.values}});
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) cols.push_back({{"name", c.name}, {"unit", c.unit}});
  return {{"axes", axes_json}, {"columns", cols}, {"rows", rows}, {"metadata", metadata}};
}

} // namespace casimir
