#include <doctest.h>

#include <cmath>
#include <random>

#include "qml/fock.hpp"

using qml::Complex;
using qml::FockVector;

namespace {

// Independent series oracle for the coherent coefficients: direct
// high-precision evaluation of e^{-|a|^2/2} a^n / sqrt(n!) in long double,
// no recurrence shared with the implementation.
std::complex<long double> coherent_coefficient_oracle(Complex alpha, int n) {
  const std::complex<long double> a(alpha.real(), alpha.imag());
  long double log_fact = 0.0L;
  for (int k = 2; k <= n; ++k) log_fact += std::log(static_cast<long double>(k));
  const std::complex<long double> an = std::pow(a, n);
  return std::exp(-0.5L * std::norm(a)) * an * std::exp(-0.5L * log_fact);
}

// Tail bound sum_{n>N} |a|^{2n} / n! for the truncated norm.
long double norm_tail_oracle(double amag, int N) {
  long double term = 1.0L;
  for (int k = 1; k <= N + 1; ++k) term *= amag * amag / k;
  long double s = 0.0L;
  for (int n = N + 1; n < N + 200; ++n) {
    s += term;
    term *= amag * amag / (n + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("coherent_fock vacuum") {
  const FockVector v = qml::coherent_fock(0.0, 4);
  CHECK(v.truncation_order() == 4);
  CHECK(v.amplitudes[0] == Complex(1.0));
  for (int n = 1; n <= 4; ++n) CHECK(v.amplitudes[n] == Complex(0.0));
}

TEST_CASE("coherent_fock alpha=1 matches series oracle") {
  const FockVector v = qml::coherent_fock(1.0, 2);
  CHECK(v.amplitudes[0].real() == doctest::Approx(0.6065306597126334).epsilon(1e-12));
  CHECK(v.amplitudes[1].real() == doctest::Approx(0.6065306597126334).epsilon(1e-12));
  CHECK(v.amplitudes[2].real() == doctest::Approx(0.4288819424803534).epsilon(1e-12));
}

TEST_CASE("coherent coefficients match the direct series for complex alpha") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex alpha(u(rng), u(rng));
    const FockVector v = qml::coherent_fock(alpha, 32);
    for (int n = 0; n <= 32; ++n) {
      const auto expect = coherent_coefficient_oracle(alpha, n);
      CHECK(std::abs(v.amplitudes[n] - Complex(static_cast<double>(expect.real()),
                                               static_cast<double>(expect.imag())))
            < 1e-13);
    }
  }
}

TEST_CASE("truncated coherent norm deficit equals the tail") {
  const FockVector v = qml::coherent_fock(0.5, 64);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  const long double tail = norm_tail_oracle(0.5, 64);
  CHECK(std::abs(v.norm_squared() - (1.0 - static_cast<double>(tail))) < 1e-13);
}

TEST_CASE("inner_product on the number basis") {
  const FockVector f0 = qml::number_state(0, 4);
  const FockVector f1 = qml::number_state(1, 4);
  CHECK(qml::inner_product(f0, f0) == Complex(1.0));
  CHECK(qml::inner_product(f0, f1) == Complex(0.0));
}

TEST_CASE("inner_product rejects mismatched truncation") {
  CHECK_THROWS_AS(qml::inner_product(qml::number_state(0, 4), qml::number_state(0, 5)),
                  qml::TruncationMismatch);
}

TEST_CASE("truncated overlap against the closed form") {
  const Complex numeric = qml::inner_product(qml::coherent_fock(1.0, 64),
                                             qml::coherent_fock(0.0, 64));
  CHECK(std::abs(numeric - qml::overlap_analytic(0.0, 1.0)) < 1e-10);
  CHECK(numeric.real() == doctest::Approx(0.6065306597126334).epsilon(1e-10));
}

TEST_CASE("annihilate ladder action") {
  const FockVector a0 = qml::annihilate(qml::number_state(0, 4));
  CHECK(a0.amplitudes.norm() == 0.0);
  const FockVector a2 = qml::annihilate(qml::number_state(2, 4));
  CHECK(std::abs(a2.amplitudes[1] - Complex(std::sqrt(2.0))) < 1e-15);
  CHECK(a2.amplitudes[0] == Complex(0.0));
}

TEST_CASE("coherent state is a truncated eigenstate of annihilation") {
  const FockVector c = qml::coherent_fock(0.5, 32);
  const FockVector ac = qml::annihilate(c);
  CHECK((ac.amplitudes - 0.5 * c.amplitudes).norm() < 1e-10);
  CHECK(ac.truncation_loss > 0.0);
}

TEST_CASE("mean_photon") {
  CHECK(qml::mean_photon(qml::number_state(0, 4)) == 0.0);
  CHECK(qml::mean_photon(qml::number_state(3, 4)) == 3.0);
  CHECK(qml::mean_photon(qml::coherent_fock(0.5, 64)) ==
        doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("mean_photon refuses unnormalized input") {
  FockVector v = qml::number_state(0, 4);
  v.amplitudes *= 2.0;
  CHECK_THROWS_AS(qml::mean_photon(v), qml::NotNormalized);
}

TEST_CASE("overlap_analytic special values") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a(u(rng), u(rng));
    CHECK(std::abs(qml::overlap_analytic(a, a) - Complex(1.0)) < 1e-14);
  }
  CHECK(std::abs(qml::overlap_analytic(0.0, 1.0) - Complex(std::exp(-0.5))) < 1e-15);
  CHECK(std::norm(qml::overlap_analytic(-1.0, 1.0)) ==
        doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
}

TEST_CASE("overlap properties: conjugate symmetry and Gaussian modulus") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    const Complex o = qml::overlap_analytic(b, a);
    CHECK(std::abs(o - std::conj(qml::overlap_analytic(a, b))) < 1e-14);
    CHECK(std::abs(std::norm(o) - std::exp(-std::norm(a - b))) < 1e-12);
  }
}

TEST_CASE("eigen_residual: vacuum exact, bounded, decreasing in N") {
  CHECK(qml::eigen_residual(0.0, 8) == 0.0);
  CHECK(qml::eigen_residual(0.5, 32) < 1e-10);

  // where the residual is well above rounding noise it must agree with the
  // direct vector-difference route
  const FockVector big = qml::coherent_fock(2.0, 8);
  const double direct =
      (qml::annihilate(big).amplitudes - 2.0 * big.amplitudes).norm();
  CHECK(qml::eigen_residual(2.0, 8) == doctest::Approx(direct).epsilon(1e-12));

  double prev = qml::eigen_residual(2.0, 8);
  CHECK(prev > 0.0);
  for (int N = 12; N <= 32; N += 4) {
    const double cur = qml::eigen_residual(2.0, N);
    CHECK(cur < prev);
    prev = cur;
  }

  // residual <= 2 |a|^{N+1} / sqrt(N!)
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double amag = u(rng);
    const Complex alpha = std::polar(amag, u(rng));
    for (int N : {8, 16, 32}) {
      long double bound = 1.0L;
      for (int k = 1; k <= N; ++k) bound /= std::sqrt(static_cast<long double>(k));
      bound *= std::pow(static_cast<long double>(amag), N + 1);
      CHECK(qml::eigen_residual(alpha, N) <= 2.0 * static_cast<double>(bound));
    }
  }
}

TEST_CASE("gauss_legendre integrates the radial oracle") {
  // integral_0^inf e^{-r^2} 2 r dr = 1; at R=6 the tail is ~e^{-36}.
  Eigen::VectorXd r, w;
  qml::gauss_legendre(48, 0.0, 6.0, r, w);
  double s = 0.0;
  for (int i = 0; i < r.size(); ++i) s += w[i] * std::exp(-r[i] * r[i]) * 2.0 * r[i];
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("identity resolution on the vacuum block") {
  CHECK(qml::identity_resolution_residual(0, 6.0) < 1e-6);
}

TEST_CASE("identity resolution at N=8") {
  const double res = qml::identity_resolution_residual(8, 6.0);
  CHECK(res < 1e-3);
}

TEST_CASE("identity resolution flags an under-resolved grid") {
  qml::QuadratureSpec coarse;
  coarse.radial_nodes = 8;
  coarse.angular_nodes = 8;  // aliases the |n-m| = 8 angular mode onto DC
  CHECK_THROWS_AS(qml::identity_resolution_residual(8, 6.0, coarse),
                  qml::QuadratureUnderResolved);
}

TEST_CASE("polar accessors") {
  const Complex z(3.0, -4.0);
  CHECK(qml::amplitude(z) == doctest::Approx(5.0));
  CHECK(qml::amplitude(z) * std::cos(qml::phase(z)) == doctest::Approx(3.0));
  CHECK(qml::amplitude(z) * std::sin(qml::phase(z)) == doctest::Approx(-4.0));
}
