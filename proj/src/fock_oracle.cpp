#include "csse/fock_oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "csse/errors.hpp"
#include "csse/linalg.hpp"

namespace csse {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Eigen::MatrixXd>& bs_blocks(int n_max) {
  static std::mutex mu;
  static std::map<int, std::vector<Eigen::MatrixXd>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_max);
  if (it == cache.end()) {
    std::vector<Eigen::MatrixXd> blocks;
    for (int total = 0; total <= n_max; ++total) blocks.push_back(bs50_block(total));
    it = cache.emplace(n_max, std::move(blocks)).first;
  }
  return it->second;
}

// Frame-shifted input sum_{+-} e^{-i Im(lambda conj(+-d))} |+-d> such that
// D(lambda) applied to it gives |lambda + d> + |lambda - d>.
FockVector framed_input(cplx center, cplx offset, int n_max) {
  FockVector v(n_max);
  for (const cplx d : {offset, -offset}) {
    const cplx phase = std::polar(1.0, -(center * std::conj(d)).imag());
    const FockVector c = coherent_to_fock(d, n_max);
    for (int n = 0; n <= n_max; ++n) v[n] += phase * c[n];
  }
  return v;
}

// Kept mode after a unit splitter whose detector sees the sum port.
FockVector unit_kept(cplx center, cplx offset, double theta, double x, int n_max) {
  const FockVector in = framed_input(center, offset, n_max);
  const TwoModeFock mixed = bs50_fock(product_state(in, in));
  return project_quadrature(mixed, 0, theta, x, std::sqrt(2.0) * center);
}

}  // namespace

TwoModeFock::TwoModeFock(int n_max) : coeffs_(Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1)) {
  if (n_max < 0) throw InvalidArgument("TwoModeFock: negative n_max");
}

double TwoModeFock::mean_total_photons() const {
  double s = 0.0;
  for (int i = 0; i <= n_max(); ++i) {
    for (int j = 0; j <= n_max(); ++j) s += (i + j) * std::norm(coeffs_(i, j));
  }
  return s / norm_squared();
}

TwoModeFock product_state(const FockVector& mode0, const FockVector& mode1) {
  const int n_max = std::max(mode0.n_max(), mode1.n_max());
  TwoModeFock out(n_max);
  for (int i = 0; i <= mode0.n_max(); ++i) {
    for (int j = 0; j <= mode1.n_max(); ++j) out(i, j) = mode0[i] * mode1[j];
  }
  return out;
}

Eigen::MatrixXd bs50_block(int total) {
  const int d = total + 1;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    // a0^dag a1 |k, N-k> and a0 a1^dag |k, N-k>
    if (k + 1 < d) g(k + 1, k) += std::sqrt((k + 1.0) * (total - k));
    if (k > 0) g(k - 1, k) -= std::sqrt(static_cast<double>(k) * (total - k + 1.0));
  }
  Eigen::MatrixXd u = expm(Eigen::MatrixXd(0.25 * kPi * g));
  for (int k = 0; k < d; ++k) {
    if ((total - k) % 2 != 0) u.row(k) *= -1.0;
  }
  return u;
}

TwoModeFock bs50_fock(const TwoModeFock& state) {
  const int n_max = state.n_max();
  double dropped = 0.0;
  for (int i = 0; i <= n_max; ++i) {
    for (int j = n_max - i + 1; j <= n_max; ++j) dropped += std::norm(state(i, j));
  }
  const double total_norm = state.norm_squared();
  if (dropped > 1e-10 * std::max(total_norm, 1e-300)) {
    throw TailTooHeavy("bs50_fock: " + std::to_string(dropped / total_norm) +
                       " of the norm lies above the total-photon cutoff");
  }
  const auto& blocks = bs_blocks(n_max);
  TwoModeFock out(n_max);
  for (int total = 0; total <= n_max; ++total) {
    const Eigen::MatrixXd& u = blocks[total];
    Eigen::VectorXcd in(total + 1);
    for (int k = 0; k <= total; ++k) in(k) = state(k, total - k);
    const Eigen::VectorXcd res = u * in;
    for (int k = 0; k <= total; ++k) out(k, total - k) = res(k);
  }
  return out;
}

std::vector<cplx> displaced_quadrature_row(int n_max, double theta, double x, cplx frame) {
  const cplx w = frame * std::polar(1.0, -theta);
  const double p = w.real();
  const double q = w.imag();
  const std::vector<double> psi = hermite_psi_table(n_max, x - std::sqrt(2.0) * p);
  const cplx global = std::polar(1.0, std::sqrt(2.0) * q * x - p * q);
  std::vector<cplx> row(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) row[n] = global * std::polar(psi[n], -n * theta);
  return row;
}

FockVector project_quadrature(const TwoModeFock& state, int measured_mode, double theta, double x,
                              cplx frame) {
  if (measured_mode != 0 && measured_mode != 1) {
    throw InvalidArgument("project_quadrature: mode must be 0 or 1");
  }
  const int n_max = state.n_max();
  const std::vector<cplx> row = displaced_quadrature_row(n_max, theta, x, frame);
  FockVector out(n_max);
  for (int m = 0; m <= n_max; ++m) {
    cplx s{};
    for (int n = 0; n <= n_max; ++n) {
      s += row[n] * (measured_mode == 0 ? state(n, m) : state(m, n));
    }
    out[m] = s;
  }
  return out;
}

FockVector simulate_scheme(const SchemeParams& p, int n_max) {
  p.validate();
  const double c = std::cos(0.5 * p.phi);
  const double b = p.beta();
  const cplx line_center{0.0, p.alpha * c};
  const cplx line_offset{-b, 0.0};

  const FockVector kept1 = unit_kept(line_center, line_offset, 0.0, p.x1, n_max);
  FockVector result;
  if (is_scheme1(p.kind)) {
    FockVector kept2;
    if (p.kind == SchemeKind::kS1Lattice) {
      kept2 = unit_kept(cplx{p.alpha * c, 0.0}, cplx{0.0, b}, 0.5 * kPi, p.x2, n_max);
    } else {
      kept2 = unit_kept(line_center, line_offset, 0.0, p.x2, n_max);
    }
    // Third splitter: the difference port (mode 1) is measured.
    result = project_quadrature(bs50_fock(product_state(kept1, kept2)), 1, 0.0, p.x3);
  } else {
    const FockVector sv =
        css_to_fock(squeezed_vacuum_css(p.r, s2_squeeze_theta(p.kind), p.n_css, p.gamma), n_max);
    result = project_quadrature(bs50_fock(product_state(kept1, sv)), 0, 0.0, p.x2);
  }
  const double n2 = result.norm_squared();
  if (!(n2 > kDegenerateNorm)) {
    throw DegenerateSuperposition("simulate_scheme: conditional norm^2 = " + std::to_string(n2));
  }
  return result.normalized();
}

}  // namespace csse
