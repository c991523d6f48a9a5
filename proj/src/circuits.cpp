#include "qdg/circuits.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace qdg {

namespace {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;
using Eigen::Vector2cd;
using Eigen::VectorXcd;

Matrix2cd pol_hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  Matrix2cd h;
  h << s, s, s, -s;
  return h;
}

// phase-free half-wave plate at -pi/4: R <-> L with a sign
Matrix2cd cross_plate() {
  Matrix2cd m;
  m << 0, -1, -1, 0;
  return m;
}

// phase-free half-wave plate at 0: sign on L
Matrix2cd sign_plate() {
  Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

HybridState pass_round(const GateSpec& spec, const HybridState& st, int spin,
                       const std::vector<std::string>& on) {
  if (spec.mode == Mode::Ideal)
    return apply_pol_spin_op(st, ideal_round_matrix(Incidence::Down), spin, on);
  const RoundMap rm = realistic_round_matrix(spec.coeffs, Incidence::Down, spec.leak);
  if (spec.leak == LeakConvention::Coherent)
    return apply_pol_spin_op(st, rm.circuit, spin, on);
  return apply_pol_spin_op_lossy(st, rm.circuit, rm.loss, spin, on);
}

// Splitter separating the +/- diagonal polarizations.  Rotating with the
// polarization Hadamard makes the labels R/L stand for +/-, so the routing is
// an ordinary splitter: + of in1 -> out4, + of in2 -> out3, - the other way.
// Rotating back restores physical R/L amplitudes on the outputs.
HybridState pm_splitter(HybridState st, const std::string& in1, const std::string& in2,
                        const std::string& out3, const std::string& out4) {
  st = apply_photon_op(st, pol_hadamard(), {in1, in2});
  st = reroute(st, Pol::R, in1, out4);
  st = reroute(st, Pol::L, in1, out3);
  st = reroute(st, Pol::R, in2, out3);
  st = reroute(st, Pol::L, in2, out4);
  return apply_photon_op(st, pol_hadamard(), {out3, out4});
}

void apply_pauli(VectorXcd& v, Pauli p, int spin, int num_spins) {
  if (p == Pauli::I) return;
  const Matrix2cd u = spin_pauli(p);
  const int bit = 1 << (num_spins - 1 - spin);
  for (int s = 0; s < v.size(); ++s) {
    if (s & bit) continue;
    const cx up = v(s), dn = v(s | bit);
    v(s) = u(0, 0) * up + u(0, 1) * dn;
    v(s | bit) = u(1, 0) * up + u(1, 1) * dn;
  }
}

OutcomeRecord project_branch(const HybridState& st, std::string name,
                             const Vector2cd& jones, std::string_view path,
                             std::vector<Pauli> ff) {
  const int n = st.num_spins();
  const int pi = st.paths().index(path);
  VectorXcd v(st.num_spin_states());
  for (int s = 0; s < v.size(); ++s)
    v(s) = std::conj(jones(0)) * st.at(Pol::R, pi, s) +
           std::conj(jones(1)) * st.at(Pol::L, pi, s);
  const double p = v.squaredNorm();
  for (int q = 0; q < n; ++q) apply_pauli(v, ff[static_cast<size_t>(q)], q, n);
  OutcomeRecord rec;
  rec.detector = std::move(name);
  rec.probability = p;
  rec.feed_forward = std::move(ff);
  if (p > 1e-24)
    rec.post_state = v / std::sqrt(p);
  else
    rec.post_state = VectorXcd::Zero(v.size());
  return rec;
}

struct StageSink {
  std::vector<TraceStage>* out = nullptr;
  void push(const char* label, const HybridState& st) {
    if (out) out->push_back(TraceStage{label, st});
  }
};

CircuitResult finish(std::vector<OutcomeRecord> outs, HybridState st,
                     const VectorXcd& ideal_image) {
  double psum = 0.0;
  for (auto& o : outs) {
    psum += o.probability;
    o.conditional_fidelity = std::norm(ideal_image.dot(o.post_state));
  }
  return CircuitResult{std::move(outs), std::move(st), 1.0 - psum};
}

// spin register as a vector, first spin most significant
VectorXcd spin_product(const SpinPreparation& prep) {
  VectorXcd c = VectorXcd::Ones(1);
  for (const double a : prep.angles) {
    VectorXcd next(2 * c.size());
    for (int i = 0; i < c.size(); ++i) {
      next(2 * i) = c(i) * std::cos(a);
      next(2 * i + 1) = c(i) * std::sin(a);
    }
    c = std::move(next);
  }
  return c;
}

CircuitResult run_swap_impl(const GateSpec& spec, HybridState st,
                            const VectorXcd& ideal_image,
                            std::vector<TraceStage>* trace) {
  StageSink sink{trace};
  const std::vector<std::string> on_l{"l"}, on_lr{"l", "r"};

  sink.push("stage 0: photon enters on l", st);
  st = pass_round(spec, st, 0, on_l);
  sink.push("stage 1: first pass, spin a", st);
  st = pass_round(spec, st, 1, on_l);
  sink.push("stage 2: first pass, spin b", st);
  st = apply_spin_op(st, spin_hadamard(), 0);
  st = apply_spin_op(st, spin_hadamard(), 1);
  sink.push("stage 3: spin rotations", st);
  st = reroute(st, Pol::L, "l", "r");
  sink.push("stage 4: polarizing split onto l and r", st);
  st = pass_round(spec, st, 0, on_lr);
  sink.push("stage 5: second pass, spin a", st);
  st = pass_round(spec, st, 1, on_lr);
  sink.push("stage 6: second pass, spin b", st);
  st = apply_photon_op(st, s_gate(spec.m), {"r"});
  sink.push("stage 7: phase plate on r", st);
  st = bs_split(st, "l", "r");
  st = apply_spin_op(st, spin_hadamard(), 0);
  st = apply_spin_op(st, spin_hadamard(), 1);
  sink.push("stage 8: recombiner and spin rotations", st);

  const double s = 1.0 / std::numbers::sqrt2;
  const Vector2cd plus(s, s), minus(s, -s);
  std::vector<OutcomeRecord> outs;
  outs.push_back(project_branch(st, "D1", plus, "l", {Pauli::ZX, Pauli::ZX}));
  outs.push_back(project_branch(st, "D2", minus, "l", {Pauli::I, Pauli::I}));
  outs.push_back(project_branch(st, "D3", plus, "r", {Pauli::X, Pauli::X}));
  outs.push_back(project_branch(st, "D4", minus, "r", {Pauli::Z, Pauli::Z}));
  return finish(std::move(outs), std::move(st), ideal_image);
}

CircuitResult run_cswap_impl(const GateSpec& spec, HybridState st,
                             const VectorXcd& ideal_image,
                             std::vector<TraceStage>* trace) {
  StageSink sink{trace};
  const std::vector<std::string> on_in{"in"}, on_lr{"l", "r"},
      on_quad{"l1", "l2", "r1", "r2"};

  sink.push("stage 0: photon enters on in", st);
  st = pass_round(spec, st, 0, on_in);
  st = reroute(st, Pol::R, "in", "r");
  st = reroute(st, Pol::L, "in", "l");
  st = apply_photon_op(st, cross_plate(), {"r"});
  st = pass_round(spec, st, 1, on_lr);
  st = pass_round(spec, st, 2, on_lr);
  sink.push("stage 1: control pass, split, first target passes", st);

  st = apply_spin_op(st, spin_hadamard(), 1);
  st = apply_spin_op(st, spin_hadamard(), 2);
  st = reroute(st, Pol::R, "l", "l1");
  st = reroute(st, Pol::L, "l", "l2");
  st = reroute(st, Pol::R, "r", "r1");
  st = reroute(st, Pol::L, "r", "r2");
  st = pass_round(spec, st, 1, on_quad);
  st = pass_round(spec, st, 2, on_quad);
  st = apply_photon_op(st, s_prime_gate(spec.m), {"l1"});
  st = apply_photon_op(st, sign_plate(), {"r1"});
  sink.push("stage 2: second target passes and phase plates", st);

  st = pm_splitter(st, "l1", "l2", "l3", "l4");
  st = pm_splitter(st, "r1", "r2", "r3", "r4");
  st = apply_spin_op(st, spin_hadamard(), 1);
  st = apply_spin_op(st, spin_hadamard(), 2);
  sink.push("stage 3: diagonal splitters and spin rotations", st);

  st = bs_split(st, "l4", "r4");
  st = reroute(st, Pol::R, "l4", "p5");
  st = reroute(st, Pol::L, "l4", "p5");
  st = reroute(st, Pol::R, "r4", "p6");
  st = reroute(st, Pol::L, "r4", "p6");
  st = bs_split(st, "l3", "r3");
  st = reroute(st, Pol::R, "l3", "p7");
  st = reroute(st, Pol::L, "l3", "p7");
  st = reroute(st, Pol::R, "r3", "p8");
  st = reroute(st, Pol::L, "r3", "p8");
  sink.push("stage 4: recombiners onto output ports", st);

  const Vector2cd pol_r(1, 0), pol_l(0, 1);
  std::vector<OutcomeRecord> outs;
  outs.push_back(project_branch(st, "D1", pol_r, "p5", {Pauli::I, Pauli::I, Pauli::I}));
  outs.push_back(project_branch(st, "D2", pol_l, "p5", {Pauli::I, Pauli::Z, Pauli::Z}));
  outs.push_back(project_branch(st, "D3", pol_r, "p6", {Pauli::Z, Pauli::I, Pauli::I}));
  outs.push_back(project_branch(st, "D4", pol_l, "p6", {Pauli::Z, Pauli::Z, Pauli::Z}));
  outs.push_back(project_branch(st, "D5", pol_r, "p7", {Pauli::I, Pauli::ZX, Pauli::ZX}));
  outs.push_back(project_branch(st, "D6", pol_l, "p7", {Pauli::I, Pauli::X, Pauli::X}));
  outs.push_back(project_branch(st, "D7", pol_r, "p8", {Pauli::Z, Pauli::ZX, Pauli::ZX}));
  outs.push_back(project_branch(st, "D8", pol_l, "p8", {Pauli::Z, Pauli::X, Pauli::X}));
  return finish(std::move(outs), std::move(st), ideal_image);
}

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("root order must be >= 1");
}

void require_prep(const GateSpec& spec, const SpinPreparation& prep) {
  if (static_cast<int>(prep.angles.size()) != gate_spins(spec.gate))
    throw std::invalid_argument("preparation needs one angle per spin");
}

}  // namespace

int gate_spins(GateKind g) { return g == GateKind::SwapRoot ? 2 : 3; }

Eigen::MatrixXcd target_unitary(GateKind g, int m) {
  require_order(m);
  const cx e = std::exp(cx(0.0, std::numbers::pi / m));
  const cx u = (1.0 + e) / 2.0, w = (1.0 - e) / 2.0;
  if (g == GateKind::SwapRoot) {
    MatrixXcd t = MatrixXcd::Identity(4, 4);
    t(1, 1) = u;
    t(1, 2) = w;
    t(2, 1) = w;
    t(2, 2) = u;
    return t;
  }
  MatrixXcd t = MatrixXcd::Identity(8, 8);
  t(5, 5) = u;
  t(5, 6) = w;
  t(6, 5) = w;
  t(6, 6) = u;
  return t;
}

PathSet swap_paths() { return PathSet{"l", "r", "loss"}; }

PathSet cswap_paths() {
  return PathSet{"in", "l", "r", "l1", "l2", "r1", "r2",
                 "l3", "l4", "r3", "r4", "p5", "p6", "p7", "p8", "loss"};
}

CircuitResult run_swap_circuit(const GateSpec& spec, const SpinPreparation& prep) {
  require_order(spec.m);
  require_prep(spec, prep);
  const VectorXcd ideal = target_unitary(spec.gate, spec.m) * spin_product(prep);
  return run_swap_impl(spec, make_initial_state(swap_paths(), prep, Pol::R, "l"),
                       ideal, nullptr);
}

CircuitResult run_cswap_circuit(const GateSpec& spec, const SpinPreparation& prep) {
  require_order(spec.m);
  require_prep(spec, prep);
  const VectorXcd ideal = target_unitary(spec.gate, spec.m) * spin_product(prep);
  return run_cswap_impl(spec, make_initial_state(cswap_paths(), prep, Pol::R, "in"),
                        ideal, nullptr);
}

CircuitResult run_circuit(const GateSpec& spec, const SpinPreparation& prep) {
  return spec.gate == GateKind::SwapRoot ? run_swap_circuit(spec, prep)
                                         : run_cswap_circuit(spec, prep);
}

CircuitResult run_circuit_basis(const GateSpec& spec, int spin_idx) {
  require_order(spec.m);
  if (spin_idx < 0 || spin_idx >= (1 << gate_spins(spec.gate)))
    throw std::invalid_argument("basis index out of range");
  const VectorXcd ideal = target_unitary(spec.gate, spec.m).col(spin_idx);
  if (spec.gate == GateKind::SwapRoot)
    return run_swap_impl(
        spec, make_initial_basis_state(swap_paths(), 2, spin_idx, Pol::R, "l"),
        ideal, nullptr);
  return run_cswap_impl(
      spec, make_initial_basis_state(cswap_paths(), 3, spin_idx, Pol::R, "in"),
      ideal, nullptr);
}

std::vector<TraceStage> trace_checkpoints(const GateSpec& spec,
                                          const SpinPreparation& prep) {
  if (spec.mode != Mode::Ideal)
    throw std::invalid_argument("stage trace is defined for the ideal mode only");
  require_order(spec.m);
  require_prep(spec, prep);
  const VectorXcd ideal = target_unitary(spec.gate, spec.m) * spin_product(prep);
  std::vector<TraceStage> stages;
  if (spec.gate == GateKind::SwapRoot)
    run_swap_impl(spec, make_initial_state(swap_paths(), prep, Pol::R, "l"), ideal,
                  &stages);
  else
    run_cswap_impl(spec, make_initial_state(cswap_paths(), prep, Pol::R, "in"),
                   ideal, &stages);
  return stages;
}

VerifyReport verify_gate(GateKind gate, int m, int n_random, std::uint64_t seed,
                         double tol) {
  require_order(m);
  GateSpec spec{gate, m, Mode::Ideal, {}, LeakConvention::Coherent};
  const int ns = gate_spins(gate);
  const int dim = 1 << ns;
  const MatrixXcd target = target_unitary(gate, m);
  const int nb = gate == GateKind::SwapRoot ? 4 : 8;

  VerifyReport rep{gate, m, 0.0, 0.0, 0.0, false};

  // basis runs give the linear map of every branch; each must be a unimodular
  // multiple of the target scaled to probability 1/nb
  std::vector<MatrixXcd> branch(static_cast<size_t>(nb), MatrixXcd::Zero(dim, dim));
  for (int j = 0; j < dim; ++j) {
    const CircuitResult res = run_circuit_basis(spec, j);
    double psum = 0.0;
    for (int k = 0; k < nb; ++k) {
      const OutcomeRecord& oc = res.outcomes[static_cast<size_t>(k)];
      psum += oc.probability;
      branch[static_cast<size_t>(k)].col(j) =
          std::sqrt(oc.probability) * oc.post_state;
    }
    rep.max_prob_sum_error = std::max(rep.max_prob_sum_error, std::abs(psum - 1.0));
  }
  for (int k = 0; k < nb; ++k) {
    const cx lam = (target.adjoint() * branch[static_cast<size_t>(k)]).trace() /
                   static_cast<double>(dim);
    const double map_err =
        (branch[static_cast<size_t>(k)] - lam * target).cwiseAbs().maxCoeff();
    const double weight_err = std::abs(std::norm(lam) * nb - 1.0);
    rep.max_gate_error = std::max({rep.max_gate_error, map_err, weight_err});
  }

  // seeded random product preparations, branch states vs target up to phase
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < n_random; ++i) {
    SpinPreparation prep;
    for (int q = 0; q < ns; ++q) prep.angles.push_back(angle(rng));
    const VectorXcd c = spin_product(prep);
    const VectorXcd ideal = target * c;
    const CircuitResult res = run_circuit(spec, prep);
    double psum = 0.0;
    for (const OutcomeRecord& oc : res.outcomes) {
      psum += oc.probability;
      cx phase = ideal.dot(oc.post_state);
      if (std::abs(phase) > 0.0) phase /= std::abs(phase);
      rep.max_state_error = std::max(
          rep.max_state_error, (oc.post_state - phase * ideal).cwiseAbs().maxCoeff());
    }
    rep.max_prob_sum_error = std::max(rep.max_prob_sum_error, std::abs(psum - 1.0));
  }

  rep.pass = rep.max_state_error < tol && rep.max_prob_sum_error < tol &&
             rep.max_gate_error < tol;
  return rep;
}

}  // namespace qdg
