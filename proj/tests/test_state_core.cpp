#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "csse/errors.hpp"
#include "csse/quadrature.hpp"
#include "csse/state_core.hpp"

using namespace csse;

namespace {

constexpr double kPi = std::numbers::pi;

// <x_theta|alpha> written out directly from the Gaussian wavefunction,
// exp(-x^2/2 + sqrt2 x w - w^2/2 - |alpha|^2/2), w = alpha e^{-i theta}.
cplx literal_overlap(double x, double theta, cplx alpha) {
  const cplx w = alpha * std::polar(1.0, -theta);
  return std::pow(kPi, -0.25) *
         std::exp(-0.5 * x * x + std::sqrt(2.0) * x * w - 0.5 * w * w - 0.5 * std::norm(alpha));
}

// Hermite functions in long double via the physicists' polynomial, for small n.
long double psi_reference(int n, long double x) {
  long double h0 = 1.0L, h1 = 2.0L * x;
  long double h = n == 0 ? h0 : h1;
  for (int k = 2; k <= n; ++k) {
    h = 2.0L * x * h1 - 2.0L * (k - 1) * h0;
    h0 = h1;
    h1 = h;
  }
  long double fact = 1.0L;
  for (int k = 2; k <= n; ++k) fact *= k;
  return h * std::exp(-0.5L * x * x) /
         std::sqrt(std::pow(2.0L, n) * fact * std::sqrt(std::numbers::pi_v<long double>));
}

}  // namespace

TEST_CASE("coherent overlap examples") {
  const cplx a{0.3, -1.1};
  CHECK(std::abs(coherent_overlap(a, a) - 1.0) < 1e-15);
  const cplx b{0.7, 0.4};
  CHECK(std::abs(coherent_overlap(0.0, b) - std::exp(-0.5 * std::norm(b))) < 1e-15);

  // Fock-sum reference for a = 1, b = 2i.
  const FockVector fa = coherent_to_fock(1.0, 60);
  const FockVector fb = coherent_to_fock({0.0, 2.0}, 60);
  CHECK(std::abs(coherent_overlap(1.0, {0.0, 2.0}) - inner(fa, fb)) < 1e-12);
}

TEST_CASE("coherent_to_fock") {
  const FockVector vac = coherent_to_fock(0.0, 10);
  CHECK(vac[0] == cplx(1.0));
  for (int n = 1; n <= 10; ++n) CHECK(vac[n] == cplx(0.0));

  CHECK(std::abs(coherent_to_fock(1.0, 40)[0] - std::exp(-0.5)) < 1e-15);
  CHECK(std::abs(coherent_to_fock({2.5, 1.0}, 64).norm_squared() - 1.0) < 1e-10);
  CHECK_THROWS_AS(coherent_to_fock(6.0, 30), TailTooHeavy);
}

TEST_CASE("misfit examples and symmetry") {
  const FockVector v0 = fock_basis_state(0, 20);
  const FockVector v1 = fock_basis_state(1, 20);
  CHECK(misfit(v0, v0) == doctest::Approx(0.0));
  CHECK(misfit(v0, v1) == doctest::Approx(1.0));
  const FockVector c = coherent_to_fock(1.0, 40);
  CHECK(std::abs(misfit(v0, c) - (1.0 - std::exp(-1.0))) < 1e-12);
  CHECK(misfit(v0, c) == misfit(c, v0));

  FockVector half(20);
  half[0] = 0.5;
  CHECK_THROWS_AS(misfit(half, v0), NotNormalized);
}

TEST_CASE("misfit is exactly symmetric on random states") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    FockVector a(15), b(15);
    for (int n = 0; n <= 15; ++n) {
      a[n] = {g(rng), g(rng)};
      b[n] = {g(rng), g(rng)};
    }
    a = a.normalized();
    b = b.normalized();
    CHECK(misfit(a, b) == misfit(b, a));
  }
}

TEST_CASE("hermite functions against long-double reference") {
  for (int n : {0, 1, 2, 5, 12}) {
    for (double x : {-3.1, -0.4, 0.0, 1.7, 4.2}) {
      CHECK(hermite_psi(n, x) == doctest::Approx(static_cast<double>(psi_reference(n, x))).epsilon(1e-12));
    }
  }
  CHECK(std::abs(hermite_psi(12, 1.7) - static_cast<double>(psi_reference(12, 1.7L))) < 1e-14);
}

TEST_CASE("quadrature overlap: stable form equals the literal exponential") {
  for (double theta : {0.0, 0.5 * kPi, 1.1}) {
    for (cplx a : {cplx(0.0), cplx(1.2, -0.7), cplx(-2.0, 3.0)}) {
      for (double x : {-2.5, 0.3, 3.3}) {
        const cplx ref = literal_overlap(x, theta, a);
        CHECK(std::abs(quadrature_overlap(x, theta, a) - ref) < 1e-13);
      }
    }
  }
}

TEST_CASE("quadrature overlap equals the Fock sum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amp(-2.8, 2.8), xs(-10.0, 10.0), th(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 40; ++trial) {
    const cplx a{amp(rng), amp(rng)};
    if (std::abs(a) > 4.0) continue;
    const double x = xs(rng);
    const double theta = th(rng);
    const FockVector f = coherent_to_fock(a, 64);
    const auto psi = hermite_psi_table(64, x);
    cplx s{};
    for (int n = 0; n <= 64; ++n) s += psi[n] * std::polar(1.0, -n * theta) * f[n];
    CHECK(std::abs(quadrature_overlap(x, theta, a) - s) < 1e-9);
  }
}

TEST_CASE("quadrature density integrates to one") {
  for (double theta : {0.0, 0.9, 0.5 * kPi}) {
    for (cplx a : {cplx(0.0), cplx(3.0, -1.5), cplx(-0.2, 2.9)}) {
      const double total = integrate_gauss_legendre(
          [&](double x) { return std::norm(quadrature_overlap(x, theta, a)); }, -20.0, 20.0);
      CHECK(std::abs(total - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("large amplitudes stay finite") {
  const cplx big{0.0, 600.0};
  const cplx v = quadrature_overlap(0.5, 0.0, big);
  CHECK(std::isfinite(v.real()));
  CHECK(std::abs(std::abs(v) - std::pow(kPi, -0.25) * std::exp(-0.125)) < 1e-14);
}

TEST_CASE("log factorial switches smoothly") {
  double direct = 0.0;
  for (int k = 2; k <= 151; ++k) direct += std::log(static_cast<double>(k));
  CHECK(log_sqrt_factorial(151) == doctest::Approx(0.5 * direct).epsilon(1e-13));
  CHECK_THROWS_AS(log_sqrt_factorial(-1), InvalidArgument);
}
