// Command-line front end: gate verification, operating-point metrics, surface
// sweeps, and stage traces.  Exit codes: 0 success, 1 check failure, 2 usage.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdg/circuits.hpp"
#include "qdg/metrics.hpp"

namespace {

using namespace qdg;

constexpr int kExitUsage = 2;

GateKind parse_gate(const std::string& s) {
  return s == "swap" ? GateKind::SwapRoot : GateKind::ControlledSwapRoot;
}

LeakConvention parse_leak(const std::string& s) {
  return s == "coherent" ? LeakConvention::Coherent : LeakConvention::Lossy;
}

FidelityConvention parse_fidelity(const std::string& s) {
  return s == "conditional_weighted" ? FidelityConvention::ConditionalWeighted
                                     : FidelityConvention::RawOverlap;
}

const char* leak_name(LeakConvention l) {
  return l == LeakConvention::Coherent ? "coherent" : "lossy";
}

const char* fidelity_name(FidelityConvention f) {
  return f == FidelityConvention::ConditionalWeighted ? "conditional_weighted"
                                                      : "raw_overlap";
}

const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Z: return "Z";
    default: return "ZX";
  }
}

bool parse_m_range(const std::string& s, int& lo, int& hi) {
  const auto pos = s.find("..");
  try {
    size_t used = 0;
    if (pos == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      if (used != s.size()) return false;
    } else {
      const std::string a = s.substr(0, pos), b = s.substr(pos + 2);
      lo = std::stoi(a, &used);
      if (used != a.size()) return false;
      hi = std::stoi(b, &used);
      if (used != b.size()) return false;
    }
  } catch (...) {
    return false;
  }
  return true;
}

std::string resolve_out_path(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("QDG_OUT_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / p).string();
  return path;
}

void print_outcome_table(GateKind gate, int m) {
  const GateSpec spec{gate, m, Mode::Ideal, {}, LeakConvention::Coherent};
  const CircuitResult res = run_circuit_basis(spec, 0);
  for (const OutcomeRecord& oc : res.outcomes) {
    std::string ff;
    for (size_t q = 0; q < oc.feed_forward.size(); ++q) {
      if (q) ff += ",";
      ff += pauli_name(oc.feed_forward[q]);
    }
    std::printf("  %s  p=%.6g  feed-forward=%s  conditional_fidelity=%.6g\n",
                oc.detector.c_str(), oc.probability, ff.c_str(),
                oc.conditional_fidelity);
  }
}

int cmd_verify(const std::string& gate_s, const std::string& m_s,
               std::uint64_t seed) {
  int lo = 0, hi = 0;
  if (!parse_m_range(m_s, lo, hi) || lo < 1 || hi < lo) {
    std::cerr << "error: --m expects a positive integer or range like 1..4\n";
    return kExitUsage;
  }
  const GateKind gate = parse_gate(gate_s);
  bool all_pass = true;
  for (int m = lo; m <= hi; ++m) {
    const VerifyReport rep = verify_gate(gate, m, 50, seed);
    std::printf(
        "verify %s m=%d: state_err=%.3g prob_err=%.3g gate_err=%.3g %s\n",
        gate_s.c_str(), m, rep.max_state_error, rep.max_prob_sum_error,
        rep.max_gate_error, rep.pass ? "PASS" : "FAIL");
    print_outcome_table(gate, m);
    all_pass = all_pass && rep.pass;
  }
  std::printf("%s\n", all_pass ? "all checks PASS" : "verification FAILED");
  return all_pass ? 0 : 1;
}

struct RatioFlags {
  std::optional<double> g_over_k, ks_over_2k, g_over_kpks, ks_over_k;
  double gamma = 0.1;

  bool any_quoted() const { return g_over_kpks || ks_over_k; }
  EmitterParams params() const {
    if (any_quoted())
      return params_from_quoted_ratios(g_over_kpks.value_or(0.0),
                                       ks_over_k.value_or(0.0), gamma);
    return params_from_axis_ratios(g_over_k.value_or(0.0),
                                   ks_over_2k.value_or(0.0), gamma);
  }
};

int cmd_point(const std::string& gate_s, int m, bool ideal, const RatioFlags& rf,
              const std::string& leak_s, const std::string& fid_s, int quad_n) {
  if (m < 1) {
    std::cerr << "error: --m must be >= 1\n";
    return kExitUsage;
  }
  if (!ideal && !rf.g_over_k && !rf.g_over_kpks) {
    std::cerr << "error: point needs --g-over-k or --g-over-kpks (or --ideal)\n";
    return kExitUsage;
  }
  MetricsSpec spec;
  spec.gate = parse_gate(gate_s);
  spec.m = m;
  spec.mode = ideal ? Mode::Ideal : Mode::Realistic;
  spec.params = rf.params();
  spec.leak = parse_leak(leak_s);
  spec.fidelity = parse_fidelity(fid_s);
  const int n = quad_n > 0 ? quad_n : default_quadrature_n(spec.gate);

  const PointMetrics pm = point_metrics(spec, n);
  std::printf("gate=%s m=%d mode=%s leak=%s fidelity=%s quadrature_n=%d\n",
              gate_s.c_str(), m, ideal ? "ideal" : "realistic",
              leak_name(pm.leak), fidelity_name(pm.fidelity),
              pm.grid_resolution);
  if (!ideal)
    std::printf("g/kappa=%.6g ks/2kappa=%.6g gamma/kappa=%.6g\n", spec.params.g,
                spec.params.kappa_s / 2.0, spec.params.gamma);
  std::printf("avg_fidelity=%.6g\navg_efficiency=%.6g\n", pm.avg_fidelity,
              pm.avg_efficiency);
  return 0;
}

int cmd_sweep(const std::string& gate_s, int m, const AxisSpec& gax,
              const AxisSpec& ksax, double gamma, const std::string& leak_s,
              const std::string& fid_s, int quad_n, int jobs,
              const std::string& out_path, const std::string& format) {
  SweepGrid grid;
  grid.gate = parse_gate(gate_s);
  grid.m = m;
  grid.g_over_kappa = gax;
  grid.ks_over_2kappa = ksax;
  grid.gamma_over_kappa = gamma;
  const int n = quad_n > 0 ? quad_n : default_quadrature_n(grid.gate);

  const SweepResult res = sweep(grid, n, parse_leak(leak_s), parse_fidelity(fid_s),
                                jobs);
  const std::string path = resolve_out_path(out_path);
  if (path.empty()) {
    if (format == "json")
      write_json(res, std::cout);
    else
      write_csv(res, std::cout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  if (format == "json")
    write_json(res, out);
  else
    write_csv(res, out);
  out.close();
  std::printf("wrote %s (%zu rows)\n", path.c_str(), res.rows.size());
  return 0;
}

int cmd_trace(const std::string& gate_s, int m, const std::string& mode_s,
              double alpha, double beta, double delta) {
  if (mode_s != "ideal") {
    std::cerr << "error: trace supports ideal mode only\n";
    return kExitUsage;
  }
  if (m < 1) {
    std::cerr << "error: --m must be >= 1\n";
    return kExitUsage;
  }
  const GateKind gate = parse_gate(gate_s);
  SpinPreparation prep;
  prep.angles = gate == GateKind::SwapRoot ? std::vector<double>{alpha, beta}
                                           : std::vector<double>{alpha, beta, delta};
  const GateSpec spec{gate, m, Mode::Ideal, {}, LeakConvention::Coherent};
  const auto stages = trace_checkpoints(spec, prep);
  const auto refs = reference_checkpoints(gate, m, prep);

  bool ok = true;
  for (size_t i = 0; i < stages.size(); ++i) {
    const double dev =
        (stages[i].state.data() - refs[i]).cwiseAbs().maxCoeff();
    int terms = 0;
    for (int j = 0; j < stages[i].state.dim(); ++j)
      if (std::abs(stages[i].state.data()(j)) > 1e-12) ++terms;
    std::printf("%s | terms %d | max deviation %.3g\n", stages[i].label.c_str(),
                terms, dev);
    ok = ok && dev < 1e-12;
  }
  std::printf("%s\n", ok ? "trace matches reference" : "trace DEVIATES from reference");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon-mediated quantum-dot spin gate simulator"};
  app.require_subcommand(1);

  const std::vector<std::string> gates{"swap", "cswap"};
  const std::vector<std::string> leaks{"coherent", "lossy"};
  const std::vector<std::string> fids{"conditional_weighted", "raw_overlap"};
  const std::string default_leak = leak_name(kDefaultLeak);
  const std::string default_fid = fidelity_name(kDefaultFidelity);

  // verify
  auto* v = app.add_subcommand("verify", "exact ideal-mode gate checks");
  std::string v_gate = "swap", v_m = "1..8";
  std::uint64_t v_seed = 12345;
  v->add_option("--gate", v_gate)->check(CLI::IsMember(gates));
  v->add_option("--m", v_m, "root order, integer or range a..b");
  v->add_option("--seed", v_seed, "seed for random preparations");

  // point
  auto* p = app.add_subcommand("point", "average fidelity/efficiency at one point");
  std::string p_gate = "swap", p_leak = default_leak, p_fid = default_fid;
  int p_m = 2, p_quadn = 0;
  bool p_ideal = false;
  RatioFlags p_rf;
  p->add_option("--gate", p_gate)->check(CLI::IsMember(gates));
  p->add_option("--m", p_m);
  p->add_flag("--ideal", p_ideal, "ideal scattering rules");
  auto* p_g = p->add_option("--g-over-k", p_rf.g_over_k, "g/kappa (sweep axes)");
  auto* p_k2 = p->add_option("--ks-over-2k", p_rf.ks_over_2k, "kappa_s/2kappa");
  auto* p_gt = p->add_option("--g-over-kpks", p_rf.g_over_kpks,
                             "g/(kappa+kappa_s) (quoted-point form)");
  auto* p_kk = p->add_option("--ks-over-k", p_rf.ks_over_k,
                             "side/two-port leakage per unit energy (model kappa_s = 2x this)");
  p_g->excludes(p_gt)->excludes(p_kk);
  p_k2->excludes(p_gt)->excludes(p_kk);
  p->add_option("--gamma-over-k", p_rf.gamma, "gamma/kappa")->default_val(0.1);
  p->add_option("--leak", p_leak)->check(CLI::IsMember(leaks));
  p->add_option("--fidelity", p_fid)->check(CLI::IsMember(fids));
  p->add_option("--quad-n", p_quadn, "quadrature points per angle (default 64/32)");

  // sweep
  auto* s = app.add_subcommand("sweep", "2-D surface over g/kappa, kappa_s/2kappa");
  std::string s_gate = "swap", s_leak = default_leak, s_fid = default_fid;
  std::string s_out, s_format = "csv";
  int s_m = 2, s_quadn = 0, s_jobs = 1;
  AxisSpec s_gax{0.0, 5.0, 50}, s_ksax{0.0, 1.0, 50};
  double s_gamma = 0.1;
  s->add_option("--gate", s_gate)->check(CLI::IsMember(gates));
  s->add_option("--m", s_m);
  s->add_option("--g-min", s_gax.lo);
  s->add_option("--g-max", s_gax.hi);
  s->add_option("--g-count", s_gax.count);
  s->add_option("--ks-min", s_ksax.lo);
  s->add_option("--ks-max", s_ksax.hi);
  s->add_option("--ks-count", s_ksax.count);
  s->add_option("--gamma-over-k", s_gamma);
  s->add_option("--leak", s_leak)->check(CLI::IsMember(leaks));
  s->add_option("--fidelity", s_fid)->check(CLI::IsMember(fids));
  s->add_option("--quad-n", s_quadn);
  s->add_option("--jobs", s_jobs, "worker threads");
  s->add_option("--out", s_out, "output path (default stdout; QDG_OUT_DIR prefixes relative paths)");
  s->add_option("--format", s_format)->check(CLI::IsMember({"csv", "json"}));

  // trace
  auto* t = app.add_subcommand("trace", "stage-by-stage checkpoint comparison");
  std::string t_gate = "swap", t_mode = "ideal";
  int t_m = 2;
  double t_alpha = 0.0, t_beta = 0.0, t_delta = 0.0;
  t->add_option("--gate", t_gate)->check(CLI::IsMember(gates));
  t->add_option("--m", t_m);
  t->add_option("--mode", t_mode)->check(CLI::IsMember({"ideal", "realistic"}));
  t->add_option("--alpha", t_alpha, "first spin angle (radians)");
  t->add_option("--beta", t_beta, "second spin angle (radians)");
  t->add_option("--delta", t_delta, "third spin angle (radians)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(v)) return cmd_verify(v_gate, v_m, v_seed);
    if (app.got_subcommand(p))
      return cmd_point(p_gate, p_m, p_ideal, p_rf, p_leak, p_fid, p_quadn);
    if (app.got_subcommand(s))
      return cmd_sweep(s_gate, s_m, s_gax, s_ksax, s_gamma, s_leak, s_fid,
                       s_quadn, s_jobs, s_out, s_format);
    if (app.got_subcommand(t))
      return cmd_trace(t_gate, t_m, t_mode, t_alpha, t_beta, t_delta);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
