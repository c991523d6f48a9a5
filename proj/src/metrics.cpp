#include "qdg/metrics.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace qdg {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Everything averaged is a quadratic form in the (real) preparation vector c:
// detected probability via the realistic column Gram matrix, final-state
// overlap via the mixed ideal/realistic one.
struct QuadForms {
  int axes = 0;
  MatrixXcd detected;  // real^dag real over the detector cells
  MatrixXcd overlap;   // ideal^dag real over the detector cells
};

std::vector<std::string> detector_paths(GateKind g) {
  if (g == GateKind::SwapRoot) return {"l", "r"};
  return {"p5", "p6", "p7", "p8"};
}

// final-state amplitudes on the detector paths, stacked in a fixed cell order
VectorXcd detected_column(const CircuitResult& res,
                          const std::vector<std::string>& det) {
  const HybridState& st = res.final_state;
  const int ns = st.num_spin_states();
  VectorXcd col(static_cast<int>(det.size()) * 2 * ns);
  int row = 0;
  for (const auto& path : det) {
    const int pi = st.paths().index(path);
    for (const Pol p : {Pol::R, Pol::L})
      for (int s = 0; s < ns; ++s) col(row++) = st.at(p, pi, s);
  }
  return col;
}

QuadForms build_forms(const MetricsSpec& spec) {
  GateSpec run{spec.gate, spec.m, spec.mode, {}, spec.leak};
  if (spec.mode == Mode::Realistic) run.coeffs = scatter_coefficients(spec.params);
  const GateSpec ideal{spec.gate, spec.m, Mode::Ideal, {}, spec.leak};

  QuadForms f;
  f.axes = gate_spins(spec.gate);
  const int dim = 1 << f.axes;
  const std::vector<std::string> det = detector_paths(spec.gate);

  MatrixXcd real_cols, ideal_cols;
  for (int j = 0; j < dim; ++j) {
    const VectorXcd rc = detected_column(run_circuit_basis(run, j), det);
    const VectorXcd ic = detected_column(run_circuit_basis(ideal, j), det);
    if (j == 0) {
      real_cols = MatrixXcd::Zero(rc.size(), dim);
      ideal_cols = MatrixXcd::Zero(rc.size(), dim);
    }
    real_cols.col(j) = rc;
    ideal_cols.col(j) = ic;
  }
  f.detected = real_cols.adjoint() * real_cols;
  f.overlap = ideal_cols.adjoint() * real_cols;
  return f;
}

}  // namespace

int default_quadrature_n(GateKind g) {
  return g == GateKind::SwapRoot ? 64 : 32;
}

EmitterParams params_from_axis_ratios(double g_over_kappa, double ks_over_2kappa,
                                      double gamma_over_kappa) {
  EmitterParams p;
  p.kappa = 1.0;
  p.g = g_over_kappa;
  p.kappa_s = 2.0 * ks_over_2kappa;
  p.gamma = gamma_over_kappa;
  return p;
}

EmitterParams params_from_quoted_ratios(double g_over_kpks, double ks_ratio,
                                        double gamma_over_kappa) {
  EmitterParams p;
  p.kappa = 1.0;
  // side leakage quoted per unit energy against both ports: kappa_s over
  // 2*kappa, same normalization as the sweep axis
  p.kappa_s = 2.0 * ks_ratio;
  p.g = g_over_kpks * (p.kappa + p.kappa_s);
  p.gamma = gamma_over_kappa;
  return p;
}

PointMetrics point_metrics(const MetricsSpec& spec, int quadrature_n,
                           double grid_offset) {
  if (quadrature_n < 8)
    throw std::invalid_argument("quadrature_n must be >= 8");
  const QuadForms f = build_forms(spec);
  const int n = quadrature_n;
  const int dim = 1 << f.axes;

  std::vector<double> cosv(static_cast<size_t>(n)), sinv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * std::numbers::pi * (i + grid_offset) / n;
    cosv[static_cast<size_t>(i)] = std::cos(th);
    sinv[static_cast<size_t>(i)] = std::sin(th);
  }

  long total = 1;
  for (int q = 0; q < f.axes; ++q) total *= n;

  double fsum = 0.0, esum = 0.0;
  VectorXcd c(dim);
  std::vector<int> digit(static_cast<size_t>(f.axes), 0);
  for (long node = 0; node < total; ++node) {
    long rem = node;
    for (int q = 0; q < f.axes; ++q) {
      digit[static_cast<size_t>(q)] = static_cast<int>(rem % n);
      rem /= n;
    }
    for (int s = 0; s < dim; ++s) {
      double v = 1.0;
      for (int q = 0; q < f.axes; ++q) {
        const auto d = static_cast<size_t>(digit[static_cast<size_t>(q)]);
        v *= (s >> (f.axes - 1 - q)) & 1 ? sinv[d] : cosv[d];
      }
      c(s) = v;
    }
    const double eta = c.dot(f.detected * c).real();
    esum += eta;
    const double num = std::norm(c.dot(f.overlap * c));
    if (spec.fidelity == FidelityConvention::ConditionalWeighted) {
      if (eta > 1e-30) fsum += num / eta;
    } else {
      fsum += num;
    }
  }

  PointMetrics pm;
  pm.avg_fidelity = fsum / static_cast<double>(total);
  pm.avg_efficiency = esum / static_cast<double>(total);
  pm.grid_resolution = n;
  pm.leak = spec.leak;
  pm.fidelity = spec.fidelity;
  return pm;
}

namespace {

double axis_value(const AxisSpec& a, int i) {
  if (a.count <= 1) return a.lo;
  return a.lo + (a.hi - a.lo) * static_cast<double>(i) /
                    static_cast<double>(a.count - 1);
}

void validate_axis(const AxisSpec& a, const char* name) {
  if (a.count < 1)
    throw std::invalid_argument(std::string(name) + ": count must be >= 1");
  if (a.lo < 0.0 || a.hi < a.lo)
    throw std::invalid_argument(std::string(name) + ": range must be ordered and non-negative");
}

}  // namespace

SweepResult sweep(const SweepGrid& grid, int quadrature_n, LeakConvention leak,
                  FidelityConvention fidelity, int jobs) {
  validate_axis(grid.g_over_kappa, "g_over_kappa");
  validate_axis(grid.ks_over_2kappa, "ks_over_2kappa");
  if (grid.m < 1) throw std::invalid_argument("root order must be >= 1");
  if (grid.gamma_over_kappa <= 0.0)
    throw std::invalid_argument("gamma must be positive");
  if (quadrature_n < 8) throw std::invalid_argument("quadrature_n must be >= 8");

  const int gc = grid.g_over_kappa.count;
  const int kc = grid.ks_over_2kappa.count;
  const size_t total = static_cast<size_t>(gc) * static_cast<size_t>(kc);

  SweepResult out{grid, quadrature_n, leak, fidelity, {}};
  out.rows.resize(total);

  int nthreads = jobs < 1 ? 1 : jobs;
  if (static_cast<size_t>(nthreads) > total) nthreads = static_cast<int>(total);

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const int gi = static_cast<int>(i) / kc;
      const int ki = static_cast<int>(i) % kc;
      const double gv = axis_value(grid.g_over_kappa, gi);
      const double kv = axis_value(grid.ks_over_2kappa, ki);
      MetricsSpec ms;
      ms.gate = grid.gate;
      ms.m = grid.m;
      ms.mode = Mode::Realistic;
      ms.params = params_from_axis_ratios(gv, kv, grid.gamma_over_kappa);
      ms.leak = leak;
      ms.fidelity = fidelity;
      const PointMetrics pm = point_metrics(ms, quadrature_n);
      out.rows[i] = SweepRow{gv, kv, pm.avg_fidelity, pm.avg_efficiency};
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

MonotoneReport check_monotone(const SweepResult& s, double tol) {
  const int gc = s.grid.g_over_kappa.count;
  const int kc = s.grid.ks_over_2kappa.count;
  auto fid = [&](int gi, int ki) {
    return s.rows[static_cast<size_t>(gi) * static_cast<size_t>(kc) +
                  static_cast<size_t>(ki)]
        .avg_fidelity;
  };

  MonotoneReport rep;
  rep.has_zero_leak_column = kc >= 1 && std::abs(axis_value(s.grid.ks_over_2kappa, 0)) < 1e-15;

  if (rep.has_zero_leak_column)
    for (int gi = 1; gi < gc; ++gi)
      rep.worst_gain_step = std::max(rep.worst_gain_step, fid(gi - 1, 0) - fid(gi, 0));

  for (int gi = 0; gi < gc; ++gi)
    for (int ki = 1; ki < kc; ++ki)
      rep.worst_leak_step = std::max(rep.worst_leak_step, fid(gi, ki) - fid(gi, ki - 1));

  rep.corner_is_row_max = true;
  if (rep.has_zero_leak_column && gc >= 1)
    for (int ki = 1; ki < kc; ++ki)
      if (fid(gc - 1, ki) > fid(gc - 1, 0) + tol) rep.corner_is_row_max = false;

  rep.pass = rep.worst_gain_step <= tol && rep.worst_leak_step <= tol &&
             rep.corner_is_row_max;
  return rep;
}

void write_csv(const SweepResult& s, std::ostream& out) {
  out << "g_over_kappa,ks_over_2kappa,avg_fidelity,avg_efficiency\n";
  char buf[160];
  for (const SweepRow& r : s.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.g_over_kappa,
                  r.ks_over_2kappa, r.avg_fidelity, r.avg_efficiency);
    out << buf;
  }
}

void write_json(const SweepResult& s, std::ostream& out) {
  nlohmann::json j;
  j["gate"] = s.grid.gate == GateKind::SwapRoot ? "swap" : "cswap";
  j["m"] = s.grid.m;
  j["gamma_over_kappa"] = s.grid.gamma_over_kappa;
  j["leak_convention"] = s.leak == LeakConvention::Coherent ? "coherent" : "lossy";
  j["fidelity_convention"] = s.fidelity == FidelityConvention::ConditionalWeighted
                                 ? "conditional_weighted"
                                 : "raw_overlap";
  j["quadrature_n"] = s.quadrature_n;
  j["grid"] = {
      {"g_over_kappa",
       {{"lo", s.grid.g_over_kappa.lo},
        {"hi", s.grid.g_over_kappa.hi},
        {"count", s.grid.g_over_kappa.count}}},
      {"ks_over_2kappa",
       {{"lo", s.grid.ks_over_2kappa.lo},
        {"hi", s.grid.ks_over_2kappa.hi},
        {"count", s.grid.ks_over_2kappa.count}}},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : s.rows)
    rows.push_back({{"g_over_kappa", r.g_over_kappa},
                    {"ks_over_2kappa", r.ks_over_2kappa},
                    {"avg_fidelity", r.avg_fidelity},
                    {"avg_efficiency", r.avg_efficiency}});
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

ConvergenceReport quadrature_convergence(const MetricsSpec& spec,
                                         const std::vector<int>& n_list) {
  ConvergenceReport rep;
  for (const int n : n_list) {
    const PointMetrics pm = point_metrics(spec, n);
    rep.ns.push_back(n);
    rep.avg_fidelity.push_back(pm.avg_fidelity);
    rep.avg_efficiency.push_back(pm.avg_efficiency);
  }
  for (size_t i = 1; i < rep.avg_fidelity.size(); ++i)
    rep.deltas.push_back(std::abs(rep.avg_fidelity[i] - rep.avg_fidelity[i - 1]));
  rep.pass = !rep.deltas.empty() && rep.deltas.back() < 1e-6;
  return rep;
}

}  // namespace qdg
