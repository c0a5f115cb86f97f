#include "csse/cli/report_io.hpp"

#include <cmath>
#include <cstdio>

#include "csse/cli/config.hpp"
#include "csse/errors.hpp"

namespace csse::cli {

using nlohmann::json;

namespace {

json real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double real_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

json params_to_json(const SchemeParams& p) {
  json j;
  j["scheme"] = scheme_name(p.kind);
  j["alpha"] = p.alpha;
  j["phi"] = p.phi;
  j["beta"] = p.beta();
  j["input_phase"] = p.input_phase();
  j["x"] = p.outcomes();
  if (!is_scheme1(p.kind)) {
    j["r"] = p.r;
    j["gamma"] = p.gamma;
    j["n_css"] = p.n_css;
  }
  return j;
}

SchemeParams params_from_json(const json& j) {
  try {
    SchemeParams p;
    p.kind = parse_scheme(j.at("scheme").get<std::string>());
    p.alpha = j.at("alpha").get<double>();
    p.phi = j.at("phi").get<double>();
    if (!is_scheme1(p.kind)) {
      p.r = j.at("r").get<double>();
      p.gamma = j.at("gamma").get<double>();
      p.n_css = j.at("n_css").get<int>();
    }
    p.set_outcomes(j.at("x").get<std::vector<double>>());
    return p;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }
}

json report_to_json(const RunReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["mode"] = r.mode;
  j["target"] = r.target;
  j["params"] = params_to_json(r.params);
  j["epsilon"] = real(r.epsilon);
  if (r.epsilon_literal) j["epsilon_literal"] = real(*r.epsilon_literal);
  j["per_measurement_p"] = r.per_measurement_p;
  j["window_p"] = real(r.window_p);
  j["overall_p"] = real(r.overall_p);
  j["multiplicity"] = r.multiplicity;
  j["epsilon_avg"] = real(r.epsilon_avg);
  j["delta"] = r.delta;
  j["grid_points"] = r.grid_points;
  if (r.gamma_fit_epsilon) j["gamma_fit_epsilon"] = real(*r.gamma_fit_epsilon);
  j["seed"] = r.seed;
  j["evaluations"] = r.evaluations;
  return j;
}

RunReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ConfigError("report: unsupported schema_version");
    }
    RunReport r;
    r.mode = j.at("mode").get<std::string>();
    r.target = j.at("target").get<std::string>();
    r.params = params_from_json(j.at("params"));
    r.epsilon = real_from(j.at("epsilon"));
    if (j.contains("epsilon_literal")) r.epsilon_literal = real_from(j.at("epsilon_literal"));
    r.per_measurement_p = j.at("per_measurement_p").get<std::vector<double>>();
    r.window_p = real_from(j.at("window_p"));
    r.overall_p = real_from(j.at("overall_p"));
    r.multiplicity = j.at("multiplicity").get<int>();
    r.epsilon_avg = real_from(j.at("epsilon_avg"));
    r.delta = j.at("delta").get<double>();
    r.grid_points = j.at("grid_points").get<int>();
    if (j.contains("gamma_fit_epsilon")) r.gamma_fit_epsilon = real_from(j.at("gamma_fit_epsilon"));
    r.seed = j.at("seed").get<std::uint64_t>();
    r.evaluations = j.at("evaluations").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw InvalidArgument("ResultTable: row has " + std::to_string(row.size()) +
                          " cells for " + std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

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

struct CellText {
  std::string operator()(double v) const { return format_real(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const { return csv_field(s); }
};

struct CellJson {
  json operator()(double v) const { return real(v); }
  json operator()(long long v) const { return v; }
  json operator()(const std::string& s) const { return s; }
};

}  // namespace

void write_csv(const ResultTable& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << std::visit(CellText{}, row[i]);
    }
    out << '\n';
  }
}

json table_to_json(const ResultTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[t.columns[i]] = std::visit(CellJson{}, row[i]);
    rows.push_back(std::move(o));
  }
  return json{{"schema_version", kSchemaVersion}, {"columns", t.columns}, {"rows", rows}};
}

void write_table(const ResultTable& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << table_to_json(t).dump(2) << '\n';
  } else {
    write_csv(t, out);
  }
}

}  // namespace csse::cli
