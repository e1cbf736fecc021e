#include "qml/robot.hpp"

#include <cmath>
#include <numbers>

namespace qml {

GateKind gate_from_name(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "Z") return GateKind::Z;
  if (name == "PHASE") return GateKind::Phase;
  throw BadGate("unknown gate '" + name + "' (expected H, X, Z, PHASE)");
}

std::string gate_name(GateKind g) {
  switch (g) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::Phase: return "PHASE";
  }
  throw BadGate("invalid gate kind");
}

Task build_task(std::vector<TaskPhase> phases, int width) {
  if (width < 1 || width > 3)
    throw QubitIndexOutOfRange("register width must be 1..3");
  for (const TaskPhase& p : phases) {
    const int q = std::holds_alternative<ComputePhase>(p)
                      ? std::get<ComputePhase>(p).qubit
                      : std::get<ActPhase>(p).qubit;
    if (q < 0 || q >= width)
      throw QubitIndexOutOfRange("phase references qubit " + std::to_string(q) +
                                 " but width is " + std::to_string(width));
  }
  return Task{std::move(phases), width};
}

std::vector<double> RobotState::position_marginal() const {
  const int rd = register_dim();
  std::vector<double> p(lattice_size, 0.0);
  double total = 0.0;
  for (int pos = 0; pos < lattice_size; ++pos) {
    for (int reg = 0; reg < rd; ++reg)
      p[pos] += std::norm(amplitudes[pos * rd + reg]);
    total += p[pos];
  }
  // Normalizing by the summed weight keeps the marginal a probability even
  // under the ~1e-16 norm drift of the gate arithmetic (h^2 + h^2 divides
  // h^2 exactly, so symmetric splits come out as exact dyadics).
  for (double& x : p) x /= total;
  return p;
}

RobotState initial_state(const Lattice& lattice, int width) {
  if (lattice.size < 2 || lattice.size > 16)
    throw StateTooLarge("lattice size must be 2..16");
  if (width < 1 || width > 3)
    throw StateTooLarge("register width must be 1..3");
  const int dim = lattice.size * (1 << width);
  if (dim > 128) throw StateTooLarge("joint state dimension exceeds 128");
  RobotState s;
  s.lattice_size = lattice.size;
  s.width = width;
  s.amplitudes = Eigen::VectorXcd::Zero(dim);
  s.amplitudes[0] = 1.0;
  return s;
}

namespace {

void apply_gate(Eigen::VectorXcd& amp, int register_dim, GateKind gate,
                int qubit, double theta) {
  const int bit = 1 << qubit;
  const int dim = static_cast<int>(amp.size());
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (int base = 0; base < dim; base += register_dim) {
    for (int reg = 0; reg < register_dim; ++reg) {
      if (reg & bit) continue;  // visit each (reg, reg|bit) pair once
      Complex& a0 = amp[base + reg];
      Complex& a1 = amp[base + (reg | bit)];
      switch (gate) {
        case GateKind::H: {
          const Complex h0 = inv_sqrt2 * (a0 + a1);
          const Complex h1 = inv_sqrt2 * (a0 - a1);
          a0 = h0;
          a1 = h1;
          break;
        }
        case GateKind::X: std::swap(a0, a1); break;
        case GateKind::Z: a1 = -a1; break;
        case GateKind::Phase: a1 *= std::polar(1.0, theta); break;
      }
    }
  }
}

void apply_controlled_shift(Eigen::VectorXcd& amp, int lattice_size,
                            int register_dim, int qubit) {
  const int bit = 1 << qubit;
  Eigen::VectorXcd next = Eigen::VectorXcd::Zero(amp.size());
  for (int pos = 0; pos < lattice_size; ++pos) {
    for (int reg = 0; reg < register_dim; ++reg) {
      const int target = (reg & bit) ? (pos + 1) % lattice_size : pos;
      next[target * register_dim + reg] += amp[pos * register_dim + reg];
    }
  }
  amp = std::move(next);
}

std::string bitstring(int reg, int width) {
  std::string s(width, '0');
  for (int k = 0; k < width; ++k)
    if (reg & (1 << k)) s[width - 1 - k] = '1';
  return s;
}

}  // namespace

RobotState step(const RobotState& state, const TaskPhase& phase, double p_dec,
                RobotRng& rng, int step_index,
                const std::optional<QubitState>& resupply) {
  if (p_dec < 0.0 || p_dec > 1.0)
    throw Error("E_BAD_PROBABILITY", "p_dec must lie in [0, 1]");
  RobotState s = state;
  const int rd = s.register_dim();
  int phase_qubit;
  if (const auto* c = std::get_if<ComputePhase>(&phase)) {
    apply_gate(s.amplitudes, rd, c->gate, c->qubit, c->theta);
    phase_qubit = c->qubit;
  } else {
    const auto& a = std::get<ActPhase>(phase);
    apply_controlled_shift(s.amplitudes, s.lattice_size, rd, a.qubit);
    phase_qubit = a.qubit;
  }
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > 1e-9)
    throw NormDrift("state norm drifted beyond 1e-9 after phase");

  if (rng.uniform() < p_dec) {
    // Projective register collapse, Born-sampled from the marginal.
    std::vector<double> marginal(rd, 0.0);
    for (int pos = 0; pos < s.lattice_size; ++pos)
      for (int reg = 0; reg < rd; ++reg)
        marginal[reg] += std::norm(s.amplitudes[pos * rd + reg]);
    const double u = rng.uniform();
    int outcome = rd - 1;
    double cum = 0.0;
    for (int reg = 0; reg < rd; ++reg) {
      cum += marginal[reg];
      if (u < cum) {
        outcome = reg;
        break;
      }
    }
    Eigen::VectorXcd collapsed = Eigen::VectorXcd::Zero(s.dim());
    const double scale = 1.0 / std::sqrt(marginal[outcome]);
    for (int pos = 0; pos < s.lattice_size; ++pos)
      collapsed[pos * rd + outcome] = scale * s.amplitudes[pos * rd + outcome];
    s.decoherence_log.push_back({step_index, bitstring(outcome, s.width)});

    // Re-supply: the collapsed phase qubit gets a fresh admissible state.
    QubitState fresh =
        resupply.value_or(qubit_extract(std::sqrt(std::log(4.0)),
                                        -std::sqrt(std::log(4.0))));
    if (!metadata_check(fresh, 1e-9).admissible)
      throw Error("E_INADMISSIBLE_RESUPPLY",
                  "re-supply qubit fails the metadata constraint");
    const int bit = 1 << phase_qubit;
    const int reg0 = outcome & ~bit;
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(s.dim());
    for (int pos = 0; pos < s.lattice_size; ++pos) {
      const Complex c = collapsed[pos * rd + outcome];
      next[pos * rd + reg0] += fresh.lambda0 * c;
      next[pos * rd + (reg0 | bit)] += fresh.lambda1 * c;
    }
    s.amplitudes = std::move(next);
  }
  return s;
}

TrajectoryReport run_task(const Task& task, const Lattice& lattice,
                          double p_dec, uint64_t seed,
                          const std::optional<QubitState>& resupply) {
  RobotState s = initial_state(lattice, task.width);
  RobotRng rng(seed);
  TrajectoryReport report;
  report.lattice_size = lattice.size;
  report.width = task.width;
  report.p_dec = p_dec;
  report.seed = seed;
  report.rng_algorithm = RobotRng::algorithm();
  for (size_t i = 0; i < task.phases.size(); ++i) {
    s = step(s, task.phases[i], p_dec, rng, static_cast<int>(i), resupply);
    report.position_marginals.push_back(s.position_marginal());
  }
  report.final_amplitudes = s.amplitudes;
  report.decoherence_log = s.decoherence_log;
  return report;
}

}  // namespace qml
