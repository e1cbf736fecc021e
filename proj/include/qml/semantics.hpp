#ifndef QML_SEMANTICS_HPP
#define QML_SEMANTICS_HPP

#include <Eigen/Dense>

#include "qml/fock.hpp"
#include "qml/logic.hpp"

namespace qml {

inline constexpr double kDefaultMetaTol = 1e-6;

/// Assertion degree g and truth degree v = |g|^2 of a quantum atom.
struct AssertionSemantics {
  Complex g;
  double v = 0.0;
};

/// Two-term qubit extracted from a superposition of coherent states.
/// The normalization constraint is carried as a residual, never silently
/// enforced; renormalize() is the explicit, flagged alternative.
struct QubitState {
  Complex lambda0;
  Complex lambda1;
  bool renormalized = false;

  double constraint_residual() const {
    return std::abs(std::norm(lambda0) + std::norm(lambda1) - 1.0);
  }
};

struct MetadataResult {
  bool admissible = false;
  double residual = 0.0;
};

struct ProjectorPair {
  Eigen::Matrix2cd p0;  // diag(1, 0)
  Eigen::Matrix2cd p1;  // diag(0, 1)
};

ProjectorPair classical_projectors();

/// diag(1,0) for "p0", diag(0,1) for "p1". Throws UnknownAtom.
Eigen::Matrix2cd interpret_classical_atom(const std::string& id);

/// A quantum atom denotes the coherent state named by its label.
FockVector interpret_quantum_atom(const QuantumAtom& atom,
                                  int N = kDefaultTruncation);

/// Computes g = <a|a_op|a>/norm^2 and v = <a_op a|a_op a>/norm^2 on the
/// truncated vector; both converge to the closed forms g = alpha,
/// v = |alpha|^2. Throws DegreeOutOfRange when |alpha| > 1.
AssertionSemantics assertion_semantics(Complex alpha,
                                       int N = kDefaultTruncation);

/// Superposition of two coherent states. Weighted mode scales each branch by
/// its own label (alpha|alpha> + beta|beta>); unweighted mode is the plain
/// sum |alpha> + |beta>, the combination whose n = 0,1 components are the
/// extracted qubit amplitudes. The result keeps its norm.
FockVector superpose_state(Complex alpha, Complex beta,
                           int N = kDefaultTruncation, bool weighted = false);

/// lambda0 = e^{-|a|^2/2} + e^{-|b|^2/2},
/// lambda1 = a e^{-|a|^2/2} + b e^{-|b|^2/2}.
QubitState qubit_extract(Complex alpha, Complex beta);

/// Admissible iff | |l0|^2 + |l1|^2 - 1 | <= tol.
MetadataResult metadata_check(const QubitState& q,
                              double tol = kDefaultMetaTol);

/// Scales both components to unit norm and flags the result. Throws
/// ZeroState on the zero vector. Idempotent on admissible states.
QubitState renormalize(const QubitState& q);

enum class SymmetricShape { Antipodal, Equal };

/// Real positive t at which the symmetric pair meets the metadata constraint:
/// antipodal (t, -t) solves 4 e^{-t^2} = 1 in closed form; equal (t, t)
/// solves 4 e^{-t^2} (1 + t^2) = 1 by bracketing bisection on [1, 3].
double solve_symmetric_metadata(SymmetricShape shape, double tol = 1e-12);

}  // namespace qml

#endif  // QML_SEMANTICS_HPP
