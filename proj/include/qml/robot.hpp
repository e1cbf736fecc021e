#ifndef QML_ROBOT_HPP
#define QML_ROBOT_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qml/semantics.hpp"

namespace qml {

/// 1-D ring of cells; position arithmetic is mod size.
struct Lattice {
  int size = 2;  // 2..16
};

enum class GateKind { H, X, Z, Phase };

struct ComputePhase {
  GateKind gate;
  int qubit;
  double theta = 0.0;  // Phase gate angle, ignored otherwise
};

/// Controlled shift: the register qubit decides move +1 vs stay.
struct ActPhase {
  int qubit;
};

using TaskPhase = std::variant<ComputePhase, ActPhase>;

struct Task {
  std::vector<TaskPhase> phases;
  int width = 1;  // register qubits, 1..3
};

/// Validates gate names and qubit indices. Throws BadGate or
/// QubitIndexOutOfRange. An empty phase list is a valid no-op task.
Task build_task(std::vector<TaskPhase> phases, int width);

GateKind gate_from_name(const std::string& name);
std::string gate_name(GateKind g);

struct DecoherenceEvent {
  int step = 0;
  std::string collapsed_bits;  // register bitstring, msb = qubit width-1
};

/// Joint state over (lattice position x on-board register). Index layout:
/// amplitude(pos * 2^width + reg).
struct RobotState {
  Eigen::VectorXcd amplitudes;
  int lattice_size = 2;
  int width = 1;
  std::vector<DecoherenceEvent> decoherence_log;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  int register_dim() const { return 1 << width; }
  /// P(pos) marginal over the register.
  std::vector<double> position_marginal() const;
};

/// |pos=0>|0...0>. Throws StateTooLarge beyond 16 cells x 3 qubits (dim 128).
RobotState initial_state(const Lattice& lattice, int width);

/// Deterministic RNG for decoherence sampling; the algorithm identifier is
/// recorded in the trajectory report.
class RobotRng {
 public:
  explicit RobotRng(uint64_t seed) : gen_(seed) {}
  double uniform() {  // [0, 1) with 53 random bits
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  static std::string algorithm() { return "mt19937_64"; }

 private:
  std::mt19937_64 gen_;
};

/// Applies one phase unitary; then, with probability p_dec, collapses the
/// register in the computational basis (Born sampling), logs the outcome,
/// and re-supplies the phase's qubit with `resupply` (default: the
/// admissible qubit extracted from the antipodal coherent pair).
/// Throws NormDrift when the post-phase norm strays by more than 1e-9.
RobotState step(const RobotState& state, const TaskPhase& phase, double p_dec,
                RobotRng& rng, int step_index = 0,
                const std::optional<QubitState>& resupply = std::nullopt);

struct TrajectoryReport {
  int lattice_size = 2;
  int width = 1;
  double p_dec = 0.0;
  uint64_t seed = 0;
  std::string rng_algorithm;
  std::vector<std::vector<double>> position_marginals;  // one per phase
  Eigen::VectorXcd final_amplitudes;
  std::vector<DecoherenceEvent> decoherence_log;
};

/// Folds step over the task's phases from |pos=0>|0...0>. Identical seeds
/// give bit-identical reports.
TrajectoryReport run_task(const Task& task, const Lattice& lattice,
                          double p_dec, uint64_t seed,
                          const std::optional<QubitState>& resupply =
                              std::nullopt);

}  // namespace qml

#endif  // QML_ROBOT_HPP
