#pragma once

#include <Eigen/Dense>

namespace csse {

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Adequate for the small dense generators used here (dimension <= a few hundred).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

}  // namespace csse
