#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace casimir {

struct ScanAxis {
  std::string name; // column name, unit-suffixed (e.g. "d_m")
  std::string unit;
  std::vector<double> values;
};

struct ScanColumn {
  std::string name;
  std::string unit;
};

/// Tabulated output. Each row holds one value per column; the leading
/// columns repeat the axis coordinates of that grid point. For a full
/// tensor grid rows.size() equals the product of the axis lengths.
struct ScanResult {
  std::vector<ScanAxis> axes;
  std::vector<ScanColumn> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  /// Throws ParameterError when the row count or widths do not match.
  void check_shape() const;

  /// Header row of column names, then one line per row with %.9g values.
  std::string to_csv() const;

  /// Axes, columns, rows and metadata; doubles are written losslessly.
  nlohmann::json to_json() const;
};

/// Formats a double the way CSV output does (%.9g).
std::string format_csv_number(double x);

} // namespace casimir
