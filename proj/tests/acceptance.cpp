// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "qml/dsl.hpp"
#include "qml/fock.hpp"
#include "qml/logic.hpp"
#include "qml/robot.hpp"
#include "qml/semantics.hpp"

using namespace qml;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion
            << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

Complex random_disk(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> r(0.0, radius);
  std::uniform_real_distribution<double> th(-3.141592653589793, 3.141592653589793);
  return std::polar(r(rng), th(rng));
}

// 1. Analytic overlap vs truncated inner product; Gaussian modulus identity.
void criterion_overlap() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(2026);
  double worst_truncated = 0.0, worst_modulus = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a = random_disk(rng, 2.0), b = random_disk(rng, 2.0);
    const Complex analytic = overlap_analytic(b, a);
    const Complex numeric =
        inner_product(coherent_fock(b, 64), coherent_fock(a, 64));
    worst_truncated = std::max(worst_truncated, std::abs(analytic - numeric));
    worst_modulus = std::max(
        worst_modulus, std::abs(std::norm(analytic) - std::exp(-std::norm(a - b))));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "overlap oracle",
         worst_truncated <= 1e-8 && worst_modulus <= 1e-12 && seconds < 5.0,
         "max truncation gap " + std::to_string(worst_truncated) +
             ", max modulus gap " + std::to_string(worst_modulus) + ", " +
             std::to_string(seconds) + " s");
}

// 2. eigen_residual(alpha, 32) <= 2 |alpha|^33 / sqrt(33!).
void criterion_eigenrelation() {
  std::mt19937 rng(7);
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Complex alpha = random_disk(rng, 2.0);
    long double bound = 2.0L;
    for (int k = 1; k <= 32; ++k) bound /= std::sqrt(static_cast<long double>(k));
    bound *= std::pow(static_cast<long double>(std::abs(alpha)), 33);
    if (eigen_residual(alpha, 32) > static_cast<double>(bound)) ok = false;
  }
  report(2, "eigenrelation residual bound", ok);
}

// 3. g = alpha and v = |alpha|^2 within 1e-8; v = |g|^2 within 1e-12.
void criterion_degrees() {
  std::mt19937 rng(11);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Complex alpha = random_disk(rng, 1.0);
    const AssertionSemantics s = assertion_semantics(alpha, 64);
    if (std::abs(s.g - alpha) > 1e-8) ok = false;
    if (std::abs(s.v - std::norm(alpha)) > 1e-8) ok = false;
    if (std::abs(s.v - std::norm(s.g)) > 1e-12) ok = false;
  }
  report(3, "assertion and truth degrees", ok);
}

// 4. Antipodal root gives (1, 0); equal root is admissible; Fock projection
//    of the unweighted superposition equals the extracted qubit exactly.
void criterion_qubit_extraction() {
  const double anti = solve_symmetric_metadata(SymmetricShape::Antipodal);
  const QubitState q = qubit_extract(anti, -anti);
  bool ok = std::abs(q.lambda0 - Complex(1.0)) <= 1e-9 &&
            std::abs(q.lambda1) <= 1e-9 && q.constraint_residual() <= 1e-9;

  const double equal = solve_symmetric_metadata(SymmetricShape::Equal, 1e-12);
  ok = ok && metadata_check(qubit_extract(equal, equal), 1e-6).admissible;

  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = random_disk(rng, 2.0), b = random_disk(rng, 2.0);
    const FockVector s = superpose_state(a, b, 8, false);
    const QubitState qq = qubit_extract(a, b);
    if (s.amplitudes[0] != qq.lambda0 || s.amplitudes[1] != qq.lambda1)
      ok = false;
  }
  report(4, "qubit extraction and metadata constraint", ok);
}

// 5. Reflection round trip on 1000 junctions; dedicated level codes; both
//    structural rules rejected on every generated sequent.
void criterion_reflection() {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  std::uniform_real_distribution<double> th(-3.14, 3.14);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    MetaJunction m;
    if (trial % 2 == 0) {
      m.parts = {Assertion::classical(make_classical_atom("p0")),
                 Assertion::classical(make_classical_atom("p1"))};
    } else {
      const Complex a = std::polar(mag(rng), th(rng));
      const Complex b = std::polar(mag(rng), th(rng));
      m.parts = {Assertion::quantum(a, make_quantum_atom(a)),
                 Assertion::quantum(b, make_quantum_atom(b))};
    }
    if (!metajunction_equal(reflect_up(reflect_down(m)), m)) ok = false;
    if (!check_reflection(m, reflect_down(m)).ok) ok = false;
  }

  const MetaJunction classical{{Assertion::classical(make_classical_atom("p0")),
                                Assertion::classical(make_classical_atom("p1"))}};
  const Assertion quantum_obj = Assertion::classical(make_quantum_and(
      0.3, 0.4, make_classical_atom("p0"), make_classical_atom("p1")));
  if (check_reflection(classical, quantum_obj).code != "E_LEVEL_52") ok = false;

  const MetaJunction quantum{
      {Assertion::quantum(0.3, make_quantum_atom(0.3)),
       Assertion::quantum(0.4, make_quantum_atom(0.4))}};
  const Assertion classical_obj = Assertion::classical(
      make_classical_and(make_classical_atom("p0"), make_classical_atom("p1")));
  if (check_reflection(quantum, classical_obj).code != "E_LEVEL_53") ok = false;

  std::uniform_int_distribution<int> len(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Sequent s;
    const int na = len(rng), nc = len(rng);
    for (int i = 0; i < na; ++i) s.antecedent.push_back(make_classical_atom("p0"));
    for (int i = 0; i < nc; ++i) s.consequent.push_back(make_classical_atom("p1"));
    if (apply_structural_rule(StructuralRule::Contraction, s).code !=
        "E_STRUCT_CONTRACTION")
      ok = false;
    if (apply_structural_rule(StructuralRule::Weakening, s).code !=
        "E_STRUCT_WEAKENING")
      ok = false;
  }
  report(5, "reflection principle and structural rules", ok);
}

// 6. identity_resolution_residual(N=8, R=6) < 1e-3 with refinement check.
void criterion_identity_resolution() {
  try {
    const double res = identity_resolution_residual(8, 6.0);
    report(6, "resolution of identity", res < 1e-3,
           "residual " + std::to_string(res));
  } catch (const Error& e) {
    report(6, "resolution of identity", false, e.what());
  }
}

// 7. Simulator: norm drift, exact two-cell marginal, seed determinism,
//    one collapse per phase at p_dec = 1, admissible re-supply.
void criterion_simulator() {
  bool ok = true;

  Task long_task = build_task({}, 2);
  for (int i = 0; i < 25; ++i) {
    long_task.phases.push_back(ComputePhase{GateKind::H, 0});
    long_task.phases.push_back(ComputePhase{GateKind::Phase, 1, 0.31});
    long_task.phases.push_back(ActPhase{0});
    long_task.phases.push_back(ComputePhase{GateKind::Z, 1});
  }
  const TrajectoryReport drift = run_task(long_task, Lattice{8}, 0.0, 0);
  if (std::abs(drift.final_amplitudes.squaredNorm() - 1.0) >= 1e-12) ok = false;
  if (!drift.decoherence_log.empty()) ok = false;

  const Task hs = build_task({ComputePhase{GateKind::H, 0}, ActPhase{0}}, 1);
  const TrajectoryReport walk = run_task(hs, Lattice{2}, 0.0, 0);
  if (walk.position_marginals.back()[0] != 0.5 ||
      walk.position_marginals.back()[1] != 0.5)
    ok = false;

  const TrajectoryReport r1 = run_task(hs, Lattice{2}, 0.5, 7);
  const TrajectoryReport r2 = run_task(hs, Lattice{2}, 0.5, 7);
  if (to_json(r1).dump() != to_json(r2).dump()) ok = false;

  Task noisy = hs;
  noisy.phases.push_back(ComputePhase{GateKind::H, 0});
  const TrajectoryReport collapsed = run_task(noisy, Lattice{2}, 1.0, 99);
  if (collapsed.decoherence_log.size() != noisy.phases.size()) ok = false;
  const QubitState fresh = qubit_extract(std::sqrt(std::log(4.0)),
                                         -std::sqrt(std::log(4.0)));
  if (!metadata_check(fresh, 1e-9).admissible) ok = false;

  report(7, "robot simulator", ok);
}

// 8. parse . format identity on 1000 random ASTs; bit-exact JSON round
//    trips; malformed inputs yield spanned parse errors.
void criterion_dsl() {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> mag(0.0, 1.0);
  std::uniform_real_distribution<double> th(-3.14, 3.14);
  std::uniform_real_distribution<double> label(-3.0, 3.0);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    MetaJunction m;
    const int parts = 1 + trial % 3;
    const bool quantum = (trial / 3) % 2 == 0;
    for (int i = 0; i < parts; ++i) {
      if (quantum) {
        const Complex d = std::polar(mag(rng), th(rng));
        m.parts.push_back(Assertion::quantum(
            d, make_quantum_atom(Complex(label(rng), label(rng)))));
      } else {
        m.parts.push_back(Assertion::classical(make_classical_and(
            make_classical_atom("p0"), make_classical_atom("p1"))));
      }
    }
    const std::string text = format(m);
    const ParsedNode back = parse(text);
    const auto* mj = std::get_if<MetaJunction>(&back);
    if (!mj || !metajunction_equal(*mj, m)) ok = false;
  }

  const FockVector v = coherent_fock(Complex(1.3, -0.8), 64);
  const FockVector back =
      fock_from_json(nlohmann::json::parse(to_json(v).dump()));
  for (int n = 0; n <= 64; ++n)
    if (back.amplitudes[n] != v.amplitudes[n]) ok = false;

  const std::string bad = "|- p0 &";
  try {
    parse(bad);
    ok = false;
  } catch (const ParseError& e) {
    if (e.span().start > bad.size()) ok = false;
  }
  report(8, "concrete syntax and serialization", ok);
}

}  // namespace

int main() {
  criterion_overlap();
  criterion_eigenrelation();
  criterion_degrees();
  criterion_qubit_extraction();
  criterion_reflection();
  criterion_identity_resolution();
  criterion_simulator();
  criterion_dsl();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
