#include "qml/fock.hpp"

#include <cmath>
#include <numbers>

namespace qml {

FockVector number_state(int n, int N) {
  if (N < 1) throw Error("E_BAD_TRUNCATION", "truncation order must be >= 1");
  if (n < 0 || n > N)
    throw Error("E_BAD_TRUNCATION", "number state outside truncated basis");
  FockVector v;
  v.amplitudes = Eigen::VectorXcd::Zero(N + 1);
  v.amplitudes[n] = 1.0;
  return v;
}

FockVector coherent_fock(Complex alpha, int N) {
  if (N < 1) throw Error("E_BAD_TRUNCATION", "truncation order must be >= 1");
  FockVector v;
  v.amplitudes.resize(N + 1);
  Complex c = std::exp(-0.5 * std::norm(alpha));
  v.amplitudes[0] = c;
  for (int n = 0; n < N; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
    v.amplitudes[n + 1] = c;
  }
  return v;
}

Complex inner_product(const FockVector& u, const FockVector& v) {
  if (u.amplitudes.size() != v.amplitudes.size())
    throw TruncationMismatch("inner_product: truncation orders differ");
  return u.amplitudes.dot(v.amplitudes);  // Eigen conjugates the left factor
}

FockVector annihilate(const FockVector& u) {
  const int N = u.truncation_order();
  FockVector r;
  r.amplitudes = Eigen::VectorXcd::Zero(N + 1);
  for (int n = 0; n < N; ++n)
    r.amplitudes[n] = std::sqrt(static_cast<double>(n + 1)) * u.amplitudes[n + 1];
  // Slot N would need u_{N+1}, which the truncation discarded. Record the
  // conventional bound sqrt(N+1)*|u_N| for a decaying tail.
  r.truncation_loss =
      u.truncation_loss + std::sqrt(static_cast<double>(N + 1)) * std::abs(u.amplitudes[N]);
  return r;
}

double mean_photon(const FockVector& u, double tol) {
  if (!u.is_normalized(tol))
    throw NotNormalized("mean_photon: vector is not normalized within tolerance");
  double s = 0.0;
  for (int n = 1; n <= u.truncation_order(); ++n)
    s += n * std::norm(u.amplitudes[n]);
  return s;
}

Complex overlap_analytic(Complex beta, Complex alpha) {
  return std::exp(-0.5 * (std::norm(beta) + std::norm(alpha) -
                          2.0 * std::conj(beta) * alpha));
}

double eigen_residual(Complex alpha, int N) {
  if (N < 1) throw Error("E_BAD_TRUNCATION", "truncation order must be >= 1");
  // Slots n < N of a|alpha>_N - alpha|alpha>_N cancel identically in the
  // recurrence, leaving only the zeroed top slot: the residual is
  // |alpha| * |c_N|. Evaluating that directly keeps the truncation signal
  // visible far below the rounding floor of the naive double difference.
  const long double amag = std::abs(alpha);
  long double c = std::exp(-0.5L * amag * amag);
  for (int n = 0; n < N; ++n) c *= amag / std::sqrt(static_cast<long double>(n + 1));
  return static_cast<double>(amag * c);
}

void gauss_legendre(int n, double a, double b, Eigen::VectorXd& nodes,
                    Eigen::VectorXd& weights) {
  nodes.resize(n);
  weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double xl = 0.5 * (b - a);
    const double xm = 0.5 * (b + a);
    nodes[i] = xm - xl * x;
    nodes[n - 1 - i] = xm + xl * x;
    weights[i] = 2.0 * xl / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

namespace {

// Regularized upper incomplete gamma Q(n+1, x) = e^{-x} sum_{k<=n} x^k / k!,
// the radial tail of basis index n beyond radius sqrt(x).
double radial_tail(int n, double x) {
  double term = std::exp(-x);
  double s = term;
  for (int k = 1; k <= n; ++k) {
    term *= x / k;
    s += term;
  }
  return s;
}

double resolution_residual_once(int N, double R, int n_rad, int n_ang,
                                double tail_tol) {
  Eigen::VectorXd r, w;
  gauss_legendre(n_rad, 0.0, R, r, w);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N + 1, N + 1);
  const double dtheta = 2.0 * std::numbers::pi / n_ang;
  for (int i = 0; i < n_rad; ++i) {
    for (int j = 0; j < n_ang; ++j) {
      const double theta = j * dtheta;
      const Complex alpha = std::polar(r[i], theta);
      // coherent_fock insists on order >= 1; the N = 0 block just truncates
      const FockVector v = coherent_fock(alpha, std::max(N, 1));
      const auto head = v.amplitudes.head(N + 1);
      const double weight = w[i] * r[i] * dtheta / std::numbers::pi;
      M.noalias() += weight * (head * head.adjoint());
    }
  }
  double res = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (radial_tail(n, R * R) > tail_tol) continue;
    for (int m = 0; m <= N; ++m) {
      if (radial_tail(m, R * R) > tail_tol) continue;
      const double target = (n == m) ? 1.0 : 0.0;
      res = std::max(res, std::abs(M(n, m) - Complex(target)));
    }
  }
  return res;
}

}  // namespace

double identity_resolution_residual(int N, double R, const QuadratureSpec& grid) {
  if (N < 0) throw Error("E_BAD_TRUNCATION", "negative truncation order");
  if (R <= 0.0) throw Error("E_BAD_RADIUS", "integration radius must be positive");
  const double coarse = resolution_residual_once(N, R, grid.radial_nodes,
                                                 grid.angular_nodes, grid.tail_tol);
  const double fine = resolution_residual_once(N, R, 2 * grid.radial_nodes,
                                               2 * grid.angular_nodes, grid.tail_tol);
  if (std::abs(coarse - fine) > fine)
    throw QuadratureUnderResolved(
        "identity_resolution_residual: refinement moved the residual by more "
        "than the residual itself");
  return fine;
}

}  // namespace qml
