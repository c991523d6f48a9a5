#pragma once

// The two photon-mediated spin-gate circuits: a two-spin partial swap and its
// controlled three-spin version.  One photon walks through emitter passes,
// splitters, wave plates and spin rotations; detecting it in the right basis
// plus outcome-dependent Pauli corrections leaves the spins in the target
// unitary's image on every branch.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdg/emitter.hpp"
#include "qdg/hilbert.hpp"
#include "qdg/optics.hpp"

namespace qdg {

enum class GateKind { SwapRoot, ControlledSwapRoot };

enum class Mode { Ideal, Realistic };

struct GateSpec {
  GateKind gate = GateKind::SwapRoot;
  int m = 1;  // root order, >= 1
  Mode mode = Mode::Ideal;
  ScatterCoefficients coeffs{};  // used only in Realistic mode
  LeakConvention leak = LeakConvention::Coherent;
};

// number of spins the gate acts on (2 or 3)
int gate_spins(GateKind g);

// SwapRoot: 4x4 m-th root of SWAP, basis {uu, ud, du, dd}, first spin most
// significant.  ControlledSwapRoot: 8x8, identity when the control (first
// spin) is up, SwapRoot block on the targets when it is down.
Eigen::MatrixXcd target_unitary(GateKind g, int m);

struct OutcomeRecord {
  std::string detector;             // "D1", "D2", ...
  double probability;               // branch probability
  std::vector<Pauli> feed_forward;  // correction per spin, declaration order
  Eigen::VectorXcd post_state;      // spin register after correction, normalized
  double conditional_fidelity;      // |<target image|post_state>|^2
};

struct CircuitResult {
  std::vector<OutcomeRecord> outcomes;
  HybridState final_state;  // full photon+spin state before detection
  double loss_probability;  // 1 - sum of branch probabilities
};

// Path sets the circuits run on (both include "loss").
PathSet swap_paths();
PathSet cswap_paths();

CircuitResult run_swap_circuit(const GateSpec& spec, const SpinPreparation& prep);
CircuitResult run_cswap_circuit(const GateSpec& spec, const SpinPreparation& prep);
CircuitResult run_circuit(const GateSpec& spec, const SpinPreparation& prep);

// same, spins starting in computational-basis state spin_idx
CircuitResult run_circuit_basis(const GateSpec& spec, int spin_idx);

struct TraceStage {
  std::string label;
  HybridState state;
};

// Ideal mode only (throws std::invalid_argument otherwise): the state after
// each pipeline stage.  SwapRoot emits stages 0..8, ControlledSwapRoot 0..4.
std::vector<TraceStage> trace_checkpoints(const GateSpec& spec,
                                          const SpinPreparation& prep);

// Independently hand-evaluated closed forms of the same stages, used as the
// comparison baseline for trace output and regression tests.
std::vector<Eigen::VectorXcd> reference_checkpoints(GateKind gate, int m,
                                                    const SpinPreparation& prep);

struct VerifyReport {
  GateKind gate;
  int m;
  double max_state_error;     // branch output vs target, global phase removed
  double max_prob_sum_error;  // |sum_k p_k - 1|
  double max_gate_error;      // extracted branch maps vs scaled target
  bool pass;
};

// Ideal-mode exactness check over all basis inputs plus seeded random
// preparations.
VerifyReport verify_gate(GateKind gate, int m, int n_random = 50,
                         std::uint64_t seed = 12345, double tol = 1e-10);

}  // namespace qdg
