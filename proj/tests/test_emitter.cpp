#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdg/emitter.hpp"

using namespace qdg;

namespace {

ScatterCoefficients at(double g, double ks, double gamma = 0.1, double dc = 0.0,
                       double dx = 0.0) {
  EmitterParams p;
  p.g = g;
  p.kappa = 1.0;
  p.kappa_s = ks;
  p.gamma = gamma;
  p.detune_c = dc;
  p.detune_x = dx;
  return scatter_coefficients(p);
}

}  // namespace

TEST_CASE("resonant strong-coupling coefficients") {
  // g = 2.5 kappa, no leakage: t = -0.05 / (0.05 + 6.25), t0 = -1
  const ScatterCoefficients c = at(2.5, 0.0);
  CHECK(c.t.real() == doctest::Approx(-0.05 / 6.30).epsilon(1e-15));
  CHECK(c.t.imag() == 0.0);
  CHECK(c.r.real() == doctest::Approx(1.0 - 0.05 / 6.30).epsilon(1e-15));
  CHECK(c.t0 == cx(-1.0, 0.0));
  CHECK(c.r0 == cx(0.0, 0.0));
}

TEST_CASE("reflection equals one plus transmission, detuned included") {
  for (const auto& c : {at(2.5, 0.0), at(0.7, 0.3), at(1.3, 1.7, 0.2, 0.4, -0.6),
                        at(0.0, 0.05), at(4.0, 2.0, 0.1, -1.0, 0.25)}) {
    CHECK(std::abs(c.r - (1.0 + c.t)) < 1e-15);
    CHECK(std::abs(c.r0 - (1.0 + c.t0)) < 1e-15);
  }
}

TEST_CASE("zero coupling collapses to the uncoupled channel") {
  const ScatterCoefficients c = at(0.0, 0.4, 0.15, 0.2, 0.3);
  CHECK(std::abs(c.t - c.t0) < 1e-15);
  CHECK(std::abs(c.r - c.r0) < 1e-15);
}

TEST_CASE("uncoupled channel ignores the dipole rate") {
  const ScatterCoefficients a = at(1.0, 0.3, 0.1);
  const ScatterCoefficients b = at(1.0, 0.3, 0.7);
  CHECK(std::abs(a.t0 - b.t0) < 1e-15);
}

TEST_CASE("parameter validation") {
  EmitterParams p;
  p.gamma = 0.0;
  CHECK_THROWS_AS(scatter_coefficients(p), std::domain_error);
  p = EmitterParams{};
  p.kappa = 0.0;
  CHECK_THROWS_AS(scatter_coefficients(p), std::domain_error);
  p = EmitterParams{};
  p.g = -1.0;
  CHECK_THROWS_AS(scatter_coefficients(p), std::domain_error);
  p = EmitterParams{};
  p.kappa_s = -0.1;
  CHECK_THROWS_AS(scatter_coefficients(p), std::domain_error);
}

TEST_CASE("ideal round matrices, basis {Ru, Rd, Lu, Ld}") {
  const Eigen::Matrix4cd d = ideal_round_matrix(Incidence::Down);
  Eigen::Matrix4cd expect_d;
  expect_d << -1, 0, 0, 0,
               0, 0, 0, 1,
               0, 0, -1, 0,
               0, 1, 0, 0;
  CHECK((d - expect_d).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::Matrix4cd u = ideal_round_matrix(Incidence::Up);
  Eigen::Matrix4cd expect_u;
  expect_u << 0, 0, 1, 0,
              0, -1, 0, 0,
              1, 0, 0, 0,
              0, 0, 0, -1;
  CHECK((u - expect_u).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("realistic round maps reduce to the ideal ones at the ideal limit") {
  const ScatterCoefficients ideal_limit{cx(0.0), cx(1.0), cx(-1.0), cx(0.0)};
  for (const Incidence inc : {Incidence::Down, Incidence::Up}) {
    for (const LeakConvention leak :
         {LeakConvention::Coherent, LeakConvention::Lossy}) {
      const RoundMap rm = realistic_round_matrix(ideal_limit, inc, leak);
      CHECK((rm.circuit - ideal_round_matrix(inc)).cwiseAbs().maxCoeff() == 0.0);
      CHECK(rm.loss.cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("realistic down map places coefficients by spin coupling") {
  const ScatterCoefficients c = at(1.7, 0.4);
  const RoundMap rm = realistic_round_matrix(c, Incidence::Down,
                                             LeakConvention::Coherent);
  // down incidence couples the spin-down column: Rd/Ld carry t and r
  CHECK(rm.circuit(1, 1) == c.t);
  CHECK(rm.circuit(3, 1) == c.r);
  CHECK(rm.circuit(3, 3) == c.t);
  CHECK(rm.circuit(1, 3) == c.r);
  CHECK(rm.circuit(0, 0) == c.t0);
  CHECK(rm.circuit(2, 0) == c.r0);
  CHECK(rm.circuit(2, 2) == c.t0);
  CHECK(rm.circuit(0, 2) == c.r0);
  CHECK(rm.loss.cwiseAbs().maxCoeff() == 0.0);

  const RoundMap lossy = realistic_round_matrix(c, Incidence::Down,
                                                LeakConvention::Lossy);
  // circuit keeps the ideal-surviving terms, loss books the rest
  CHECK(lossy.circuit(3, 1) == c.r);
  CHECK(lossy.circuit(0, 0) == c.t0);
  CHECK(lossy.circuit(1, 1) == cx(0.0));
  CHECK(lossy.loss(1, 1) == c.t);
  CHECK(lossy.loss(2, 0) == c.r0);
  // combined columns conserve every amplitude of the coherent map
  CHECK(((lossy.circuit + lossy.loss) - rm.circuit).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("passivity: no scattering column gains probability on the sweep domain") {
  for (double g = 0.0; g <= 5.01; g += 0.5) {
    for (double ks = 0.0; ks <= 2.01; ks += 0.25) {
      const ScatterCoefficients c = at(g, ks);
      CHECK(std::norm(c.t) + std::norm(c.r) <= 1.0 + 1e-12);
      CHECK(std::norm(c.t0) + std::norm(c.r0) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("stronger coupling moves the coupled channel toward ideal") {
  double prev = 1.0;
  for (const double g : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const ScatterCoefficients c = at(g, 0.0);
    const double dist = std::abs(c.r - 1.0);
    CHECK(dist < prev);
    prev = dist;
    CHECK(std::abs(c.t0 + 1.0) == 0.0);  // exactly -1 with no leakage
  }
}
