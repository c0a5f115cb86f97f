#include "csse/targets.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <Eigen/Dense>

#include "csse/errors.hpp"
#include "csse/linalg.hpp"

namespace csse {

namespace {

// Levels beyond n_max used while exponentiating, so truncation of the
// generator does not leak into the returned levels.
constexpr int kSqueezePadding = 64;

void require_tail(const FockVector& v, const char* what) {
  if (!v.tail_converged()) {
    throw TailTooHeavy(std::string(what) + ": tail mass " + std::to_string(v.tail_mass()) +
                       " at n_max = " + std::to_string(v.n_max()));
  }
}

Eigen::MatrixXd squeeze_matrix(double r, int dim) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 2 < dim; ++n) {
    // <n+2| a^dag^2 |n> = sqrt((n+1)(n+2))
    const double e = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
    g(n + 2, n) = e;
    g(n, n + 2) = -e;
  }
  return expm(g);
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& tok, const std::string& text) {
  std::string t;
  for (char ch : tok) {
    if (ch != ' ' && ch != '\t') t += ch;
  }
  if (t.rfind("sqrt(", 0) == 0 && !t.empty() && t.back() == ')') {
    return std::sqrt(parse_number(t.substr(5, t.size() - 6), text));
  }
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ConfigError("target '" + text + "': bad number '" + tok + "'");
  }
  return v;
}

int as_int(double v, const std::string& text) {
  if (v != std::floor(v) || std::abs(v) > 1e6) {
    throw ConfigError("target '" + text + "': expected an integer, got " + fmt_num(v));
  }
  return static_cast<int>(v);
}

}  // namespace

FockVector amplitude_squeezed(double alpha0, double u, double delta, int n_max) {
  if (!(u > 0.0) || !(alpha0 > 0.0)) {
    throw InvalidArgument("amplitude_squeezed: requires u > 0 and alpha0 > 0");
  }
  // Log-domain weights, shifted by their maximum before exponentiation.
  std::vector<double> logw(static_cast<std::size_t>(n_max) + 1);
  double top = -INFINITY;
  for (int n = 0; n <= n_max; ++n) {
    const double d = delta - n;
    logw[n] = n * std::log(alpha0) - log_sqrt_factorial(n) - d * d / (2.0 * u * u);
    top = std::max(top, logw[n]);
  }
  FockVector v(n_max);
  for (int n = 0; n <= n_max; ++n) v[n] = std::exp(logw[n] - top);
  v = v.normalized();
  require_tail(v, "amplitude_squeezed");
  return v;
}

FockVector binomial_state(double p, int m, int n_max) {
  if (!(p >= 0.0 && p <= 1.0) || m < 0 || m > n_max) {
    throw InvalidArgument("binomial_state: requires 0 <= p <= 1 and 0 <= M <= n_max");
  }
  FockVector v(n_max);
  double binom = 1.0;
  for (int n = 0; n <= m; ++n) {
    if (n > 0) binom = binom * (m - n + 1) / n;
    v[n] = std::sqrt(binom * std::pow(p, n) * std::pow(1.0 - p, m - n));
  }
  return v;
}

FockVector squeezed_vacuum(double r, double theta, int n_max) {
  if (!(r >= 0.0)) throw InvalidArgument("squeezed_vacuum: r must be >= 0");
  FockVector v(n_max);
  const cplx t = std::polar(std::tanh(r), theta);
  cplx c = 1.0 / std::sqrt(std::cosh(r));
  v[0] = c;
  for (int m = 1; 2 * m <= n_max; ++m) {
    c *= t * std::sqrt((2.0 * m - 1.0) / (2.0 * m));
    v[2 * m] = c;
  }
  require_tail(v, "squeezed_vacuum");
  return v.normalized();
}

std::vector<std::vector<double>> squeeze_operator_dense(double r, int dim) {
  const Eigen::MatrixXd s = squeeze_matrix(r, dim);
  std::vector<std::vector<double>> out(dim, std::vector<double>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out[i][j] = s(i, j);
  }
  return out;
}

FockVector squeezed_number(int n, double r, int n_max) {
  if (n < 0 || !(r >= 0.0) || n > n_max) {
    throw InvalidArgument("squeezed_number: requires 0 <= n <= n_max and r >= 0");
  }
  const int dim = n_max + 1 + kSqueezePadding;
  const Eigen::MatrixXd s = squeeze_matrix(r, dim);
  FockVector v(n_max);
  for (int m = 0; m <= n_max; ++m) {
    // Parity is exact by construction of the generator; zero explicitly
    // rather than carry round-off.
    v[m] = ((m - n) % 2 == 0) ? s(m, n) : 0.0;
  }
  require_tail(v, "squeezed_number");
  return v.normalized();
}

FockVector adhoc_superposition(const std::vector<double>& coeffs, int n_max) {
  if (coeffs.empty() || static_cast<int>(coeffs.size()) > n_max + 1) {
    throw InvalidArgument("adhoc_superposition: need 1..n_max+1 coefficients");
  }
  FockVector v(n_max);
  bool any = false;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    v[static_cast<int>(n)] = coeffs[n];
    any = any || coeffs[n] != 0.0;
  }
  if (!any) throw InvalidArgument("adhoc_superposition: all coefficients are zero");
  return v.normalized();
}

TargetSpec parse_target(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      text.find_first_not_of(" \t", close + 1) != std::string::npos) {
    throw ConfigError("target '" + text + "': expected NAME(args)");
  }
  std::string name;
  for (char ch : text.substr(0, open)) {
    if (ch != ' ' && ch != '\t') name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  std::vector<double> args;
  const std::string inner = text.substr(open + 1, close - open - 1);
  // Split on commas at nesting depth zero so sqrt(2) survives.
  int depth = 0;
  std::string tok;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args.push_back(parse_number(tok, text));
      tok.clear();
    } else {
      tok += ch;
    }
  }
  args.push_back(parse_number(tok, text));

  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw ConfigError("target '" + text + "': " + name + " takes " + std::to_string(k) +
                        " arguments");
    }
  };
  if (name == "AS") {
    need(3);
    return AmplitudeSqueezedSpec{args[0], args[1], args[2]};
  }
  if (name == "B") {
    need(2);
    return BinomialSpec{args[0], as_int(args[1], text)};
  }
  if (name == "NS") {
    need(2);
    return SqueezedNumberSpec{as_int(args[0], text), args[1]};
  }
  if (name == "SV") {
    need(2);
    return SqueezedVacuumSpec{args[0], args[1]};
  }
  if (name == "ADHOC") return AdHocSpec{args};
  throw ConfigError("target '" + text + "': unknown family '" + name + "'");
}

std::string format_target(const TargetSpec& spec) {
  struct Visitor {
    std::string operator()(const AmplitudeSqueezedSpec& s) const {
      return "AS(" + fmt_num(s.alpha0) + "," + fmt_num(s.u) + "," + fmt_num(s.delta) + ")";
    }
    std::string operator()(const BinomialSpec& s) const {
      return "B(" + fmt_num(s.p) + "," + std::to_string(s.m) + ")";
    }
    std::string operator()(const SqueezedNumberSpec& s) const {
      return "NS(" + std::to_string(s.n) + "," + fmt_num(s.r) + ")";
    }
    std::string operator()(const SqueezedVacuumSpec& s) const {
      return "SV(" + fmt_num(s.r) + "," + fmt_num(s.theta) + ")";
    }
    std::string operator()(const AdHocSpec& s) const {
      std::string out = "ADHOC(";
      for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i) out += ",";
        out += fmt_num(s.coeffs[i]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

FockVector build_target(const TargetSpec& spec, int n_max) {
  struct Visitor {
    int n_max;
    FockVector operator()(const AmplitudeSqueezedSpec& s) const {
      return amplitude_squeezed(s.alpha0, s.u, s.delta, n_max);
    }
    FockVector operator()(const BinomialSpec& s) const { return binomial_state(s.p, s.m, n_max); }
    FockVector operator()(const SqueezedNumberSpec& s) const {
      return squeezed_number(s.n, s.r, n_max);
    }
    FockVector operator()(const SqueezedVacuumSpec& s) const {
      return squeezed_vacuum(s.r, s.theta, n_max);
    }
    FockVector operator()(const AdHocSpec& s) const {
      return adhoc_superposition(s.coeffs, n_max);
    }
  };
  try {
    return std::visit(Visitor{n_max}, spec);
  } catch (const Error& e) {
    throw TargetUnbuildable(format_target(spec) + ": " + e.what());
  }
}

}  // namespace csse
