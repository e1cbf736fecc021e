#include "qml/semantics.hpp"

#include <cmath>

namespace qml {

ProjectorPair classical_projectors() {
  ProjectorPair p;
  p.p0 << 1, 0, 0, 0;
  p.p1 << 0, 0, 0, 1;
  return p;
}

Eigen::Matrix2cd interpret_classical_atom(const std::string& id) {
  const ProjectorPair p = classical_projectors();
  if (id == "p0") return p.p0;
  if (id == "p1") return p.p1;
  throw UnknownAtom("classical atom must be p0 or p1, got '" + id + "'");
}

FockVector interpret_quantum_atom(const QuantumAtom& atom, int N) {
  return coherent_fock(atom.label, N);
}

AssertionSemantics assertion_semantics(Complex alpha, int N) {
  if (std::abs(alpha) > 1.0)
    throw DegreeOutOfRange("assertion degree requires |alpha| <= 1");
  const FockVector u = coherent_fock(alpha, N);
  const FockVector au = annihilate(u);
  const double n2 = u.norm_squared();
  AssertionSemantics s;
  s.g = inner_product(u, au) / n2;
  s.v = inner_product(au, au).real() / n2;
  return s;
}

FockVector superpose_state(Complex alpha, Complex beta, int N, bool weighted) {
  const FockVector a = coherent_fock(alpha, N);
  const FockVector b = coherent_fock(beta, N);
  FockVector r;
  r.amplitudes = weighted ? (alpha * a.amplitudes + beta * b.amplitudes).eval()
                          : (a.amplitudes + b.amplitudes).eval();
  return r;
}

QubitState qubit_extract(Complex alpha, Complex beta) {
  const double wa = std::exp(-0.5 * std::norm(alpha));
  const double wb = std::exp(-0.5 * std::norm(beta));
  QubitState q;
  q.lambda0 = wa + wb;
  q.lambda1 = alpha * wa + beta * wb;
  return q;
}

MetadataResult metadata_check(const QubitState& q, double tol) {
  if (tol <= 0.0) throw Error("E_BAD_TOLERANCE", "tolerance must be positive");
  const double r = q.constraint_residual();
  return MetadataResult{r <= tol, r};
}

QubitState renormalize(const QubitState& q) {
  const double n2 = std::norm(q.lambda0) + std::norm(q.lambda1);
  if (n2 <= 0.0) throw ZeroState("cannot renormalize the zero state");
  const double s = 1.0 / std::sqrt(n2);
  return QubitState{q.lambda0 * s, q.lambda1 * s, true};
}

double solve_symmetric_metadata(SymmetricShape shape, double tol) {
  if (tol <= 0.0) throw Error("E_BAD_TOLERANCE", "tolerance must be positive");
  if (shape == SymmetricShape::Antipodal) return std::sqrt(std::log(4.0));
  // Equal pair: 4 e^{-t^2} (1 + t^2) = 1, single root in [1, 3].
  const auto f = [](double t) {
    return 4.0 * std::exp(-t * t) * (1.0 + t * t) - 1.0;
  };
  double lo = 1.0, hi = 3.0;
  if (f(lo) <= 0.0 || f(hi) >= 0.0)
    throw NoRoot("bracket [1, 3] does not straddle the metadata root");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qml
