#pragma once

// Published parameter sets and figures of merit of Tables I-V.

#include <string>
#include <vector>

#include "csse/scheme.hpp"

namespace csse::cli {

struct PublishedRow {
  std::string table;  ///< "I" .. "V"
  std::string label;
  SchemeKind scheme;
  std::string target;
  double epsilon;
  double alpha;
  double phi;
  double beta;
  double x1, x2, x3;
  double r, gamma;
  double delta;    ///< NaN where the table has no probability columns
  double p;        ///< NaN likewise
  double epsilon_avg;
};

const std::vector<PublishedRow>& published_rows();
std::vector<PublishedRow> published_table(const std::string& id);
/// Throws ConfigError for an unknown table or label.
const PublishedRow& published_row(const std::string& table, const std::string& label);

/// Parameters with the tabulated beta, phi and results; alpha is the printed value,
/// so the input phase is not yet resolved.
SchemeParams literal_params(const PublishedRow& row);

/// Achieved-vs-published tolerance factor for epsilon: 10, or 100 below 1e-5.
double epsilon_tolerance_factor(double published);

}  // namespace csse::cli
