#pragma once

#include <functional>

namespace csse {

/// Adaptive Gauss-Legendre integration: each panel is evaluated with a 20-point
/// rule and bisected until the panel estimate agrees with its two halves to
/// within the (proportionally shared) absolute tolerance.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                double abs_tol = 1e-10);

}  // namespace csse
