#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qdg/circuits.hpp"

using namespace qdg;

namespace {

// largest deviation between a traced run and the closed-form stages
double trace_deviation(GateKind gate, int m, const SpinPreparation& prep) {
  GateSpec spec;
  spec.gate = gate;
  spec.m = m;
  const std::vector<TraceStage> got = trace_checkpoints(spec, prep);
  const std::vector<Eigen::VectorXcd> want = reference_checkpoints(gate, m, prep);
  REQUIRE(got.size() == want.size());
  double dev = 0.0;
  for (size_t i = 0; i < got.size(); ++i)
    dev = std::max(dev, (got[i].state.data() - want[i]).cwiseAbs().maxCoeff());
  return dev;
}

}  // namespace

TEST_CASE("every stage matches its closed form, seeded preparations") {
  std::mt19937_64 rng(20250816);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (const GateKind gate : {GateKind::SwapRoot, GateKind::ControlledSwapRoot}) {
    const int ns = gate_spins(gate);
    for (const int m : {1, 2, 3, 5}) {
      for (int i = 0; i < 20; ++i) {
        SpinPreparation prep;
        for (int q = 0; q < ns; ++q) prep.angles.push_back(angle(rng));
        CHECK(trace_deviation(gate, m, prep) < 1e-12);
      }
    }
  }
}

TEST_CASE("all-up controlled input routes a single term through the gate") {
  GateSpec spec;
  spec.gate = GateKind::ControlledSwapRoot;
  spec.m = 2;
  const SpinPreparation prep{{0.0, 0.0, 0.0}};
  const std::vector<TraceStage> tr = trace_checkpoints(spec, prep);
  const PathSet ps = cswap_paths();
  HybridState z(ps, 3);

  CHECK(std::abs(tr[0].state.data()(z.index(Pol::R, ps.index("in"), 0)) - cx(1.0))
        < 1e-15);
  // after the control pass, split, cross plate and both target passes the
  // photon sits L on the r arm with amplitude +1
  CHECK(std::abs(tr[1].state.data()(z.index(Pol::L, ps.index("r"), 0)) - cx(1.0))
        < 1e-15);
  CHECK(tr[1].state.norm2() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("numeric anchors, swap at m = 2") {
  // literals evaluated by hand from the closed forms at alpha=0.3, beta=1.1
  GateSpec spec;
  spec.m = 2;
  const SpinPreparation prep{{0.3, 1.1}};
  const std::vector<TraceStage> tr = trace_checkpoints(spec, prep);
  const std::vector<Eigen::VectorXcd> ref =
      reference_checkpoints(GateKind::SwapRoot, 2, prep);
  const PathSet ps = swap_paths();
  HybridState z(ps, 2);
  const int l = ps.index("l"), r = ps.index("r");

  const auto cell = [&](int stage, Pol p, int path, int s) {
    const cx a = tr[static_cast<size_t>(stage)].state.data()(z.index(p, path, s));
    const cx b = ref[static_cast<size_t>(stage)](z.index(p, path, s));
    CHECK(std::abs(a - b) < 1e-15);
    return a;
  };

  CHECK(std::abs(cell(2, Pol::L, l, 1) - cx(-0.85140291044399152)) < 5e-15);
  CHECK(std::abs(cell(8, Pol::R, l, 0) - cx(0.24632301933877276)) < 5e-15);
  CHECK(std::abs(cell(8, Pol::L, l, 1) - cx(-0.34840909329664616)) < 5e-15);
  CHECK(std::abs(cell(8, Pol::R, r, 1) - cx(0.0, -0.25362367820026299)) < 5e-15);
}

TEST_CASE("numeric anchors, controlled gate at m = 3") {
  // alpha=0.4, beta=0.9, delta=1.7
  GateSpec spec;
  spec.gate = GateKind::ControlledSwapRoot;
  spec.m = 3;
  const SpinPreparation prep{{0.4, 0.9, 1.7}};
  const std::vector<TraceStage> tr = trace_checkpoints(spec, prep);
  const PathSet ps = cswap_paths();
  HybridState z(ps, 3);

  const auto cell = [&](int stage, Pol p, const char* path, int s) {
    return tr[static_cast<size_t>(stage)].state.data()(
        z.index(p, ps.index(path), s));
  };

  CHECK(std::abs(cell(2, Pol::L, "l1", 5)
                 - cx(0.069837904940776449, 0.12096279965159029)) < 5e-15);
  CHECK(std::abs(cell(3, Pol::R, "r4", 1) - cx(-0.28388423001941671)) < 5e-15);
  CHECK(std::abs(cell(3, Pol::R, "l4", 5)
                 - cx(-0.085105374888525681, -0.060481399825795153)) < 5e-15);
  CHECK(std::abs(cell(4, Pol::R, "p5", 1) - cx(-0.2007364641186512)) < 5e-15);
}

TEST_CASE("reference vectors are normalized at every stage") {
  const SpinPreparation p2{{1.3, 0.6}};
  for (const Eigen::VectorXcd& v :
       reference_checkpoints(GateKind::SwapRoot, 4, p2))
    CHECK(v.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
  const SpinPreparation p3{{1.3, 0.6, 2.8}};
  for (const Eigen::VectorXcd& v :
       reference_checkpoints(GateKind::ControlledSwapRoot, 4, p3))
    CHECK(v.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("reference argument validation") {
  CHECK_THROWS_AS(reference_checkpoints(GateKind::SwapRoot, 0, SpinPreparation{{0.1, 0.2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(reference_checkpoints(GateKind::SwapRoot, 2, SpinPreparation{{0.1}}),
                  std::invalid_argument);
}
