#pragma once

// Serialization of run reports and result tables.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "csse/metrics.hpp"

namespace csse::cli {

nlohmann::json params_to_json(const SchemeParams& p);
SchemeParams params_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RunReport& r);
/// Throws ConfigError on missing or mistyped fields.
RunReport report_from_json(const nlohmann::json& j);

/// Reals are written as %.12e in CSV; NaN becomes "nan" (CSV) or null (JSON).
using Cell = std::variant<double, long long, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_real(double v);
void write_csv(const ResultTable& t, std::ostream& out);
nlohmann::json table_to_json(const ResultTable& t);
void write_table(const ResultTable& t, const std::string& format, std::ostream& out);

}  // namespace csse::cli
