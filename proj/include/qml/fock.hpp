#ifndef QML_FOCK_HPP
#define QML_FOCK_HPP

#include <Eigen/Dense>
#include <complex>

#include "qml/errors.hpp"

namespace qml {

using Complex = std::complex<double>;

inline double amplitude(Complex z) { return std::abs(z); }
inline double phase(Complex z) { return std::arg(z); }  // in (-pi, pi]

inline constexpr double kDefaultNormTol = 1e-9;
inline constexpr int kDefaultTruncation = 64;

/// A state expanded over number states |0>..|N>. Truncation is explicit:
/// nothing here ever renormalizes behind the caller's back; lossy operations
/// record an estimate of what fell off the top slot instead.
struct FockVector {
  Eigen::VectorXcd amplitudes;  // length N + 1
  double truncation_loss = 0.0;

  int truncation_order() const {
    return static_cast<int>(amplitudes.size()) - 1;
  }
  double norm_squared() const { return amplitudes.squaredNorm(); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = kDefaultNormTol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
  }
};

/// Number state |n> at truncation order N.
FockVector number_state(int n, int N);

/// Coherent state |alpha> truncated at order N. Coefficients follow the
/// recurrence c_{n+1} = c_n * alpha / sqrt(n+1) seeded with
/// c_0 = exp(-|alpha|^2 / 2); factorials are never formed.
FockVector coherent_fock(Complex alpha, int N);

/// <u|v>, conjugate-linear in the first argument.
/// Throws TruncationMismatch when the orders differ.
Complex inner_product(const FockVector& u, const FockVector& v);

/// Annihilation operator: (a u)_n = sqrt(n+1) u_{n+1}, top slot zeroed.
FockVector annihilate(const FockVector& u);

/// <a† a> = sum n |c_n|^2. Requires u normalized within tol.
double mean_photon(const FockVector& u, double tol = kDefaultNormTol);

/// Closed-form overlap <beta|alpha> = exp(-(|beta|^2 + |alpha|^2
/// - 2 conj(beta) alpha) / 2).
Complex overlap_analytic(Complex beta, Complex alpha);

/// || a|alpha>_N - alpha |alpha>_N ||, the truncation error of the
/// eigenrelation at order N.
double eigen_residual(Complex alpha, int N);

struct QuadratureSpec {
  int radial_nodes = 64;    // Gauss-Legendre on [0, R]
  int angular_nodes = 64;   // uniform on [0, 2*pi)
  double tail_tol = 1e-6;   // basis indices with a larger radial tail are
                            // excluded from the residual
};

/// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, Eigen::VectorXd& nodes,
                    Eigen::VectorXd& weights);

/// Numerically evaluates (1/pi) * integral over |alpha| <= R of
/// |alpha><alpha| d^2 alpha in the truncated basis and returns the max-entry
/// deviation from the identity, restricted to indices whose radial tail
/// beyond R is below grid.tail_tol. Throws QuadratureUnderResolved when
/// doubling the grid moves the answer by more than the answer itself.
double identity_resolution_residual(int N, double R,
                                    const QuadratureSpec& grid = {});

}  // namespace qml

#endif  // QML_FOCK_HPP
