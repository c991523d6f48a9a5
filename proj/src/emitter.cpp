#include "qdg/emitter.hpp"

#include <stdexcept>

namespace qdg {

ScatterCoefficients scatter_coefficients(const EmitterParams& p) {
  if (p.kappa <= 0.0) throw std::domain_error("kappa must be positive");
  if (p.gamma <= 0.0) throw std::domain_error("gamma must be positive");
  if (p.g < 0.0) throw std::domain_error("g must be non-negative");
  if (p.kappa_s < 0.0) throw std::domain_error("kappa_s must be non-negative");

  const cx i(0.0, 1.0);
  const cx dip = i * p.detune_x + p.gamma / 2.0;           // dipole response
  const cx cav = i * p.detune_c + p.kappa + p.kappa_s / 2.0;

  ScatterCoefficients c;
  c.t = -p.kappa * dip / (dip * cav + p.g * p.g);
  c.r = 1.0 + c.t;
  c.t0 = -p.kappa * dip / (dip * cav);  // g = 0
  c.r0 = 1.0 + c.t0;
  return c;
}

Eigen::Matrix4cd ideal_round_matrix(Incidence inc) {
  // columns/rows ordered {Ru, Rd, Lu, Ld}
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  if (inc == Incidence::Down) {
    // R moves down: couples to spin down, reflects to L; spin up transmits with -1
    m(0, 0) = -1.0;  // Ru -> -Ru
    m(3, 1) = 1.0;   // Rd -> Ld
    m(2, 2) = -1.0;  // Lu -> -Lu
    m(1, 3) = 1.0;   // Ld -> Rd
  } else {
    // R moves up: couples to spin up
    m(2, 0) = 1.0;   // Ru -> Lu
    m(1, 1) = -1.0;  // Rd -> -Rd
    m(0, 2) = 1.0;   // Lu -> Ru
    m(3, 3) = -1.0;  // Ld -> -Ld
  }
  return m;
}

RoundMap realistic_round_matrix(const ScatterCoefficients& c, Incidence inc,
                                LeakConvention leak) {
  RoundMap out;
  out.circuit = Eigen::Matrix4cd::Zero();
  out.loss = Eigen::Matrix4cd::Zero();
  // coupled spin value: down for downward incidence, up for upward
  const bool coupled_down = (inc == Incidence::Down);
  // index helpers in {Ru, Rd, Lu, Ld}
  const int Ru = 0, Rd = 1, Lu = 2, Ld = 3;
  const int Rc = coupled_down ? Rd : Ru;  // R with the coupled spin
  const int Lc = coupled_down ? Ld : Lu;
  const int Rn = coupled_down ? Ru : Rd;  // R with the uncoupled spin
  const int Ln = coupled_down ? Lu : Ld;

  if (leak == LeakConvention::Coherent) {
    out.circuit(Rc, Rc) = c.t;   // coupled transmission keeps polarization
    out.circuit(Lc, Rc) = c.r;   // coupled reflection flips it
    out.circuit(Lc, Lc) = c.t;
    out.circuit(Rc, Lc) = c.r;
    out.circuit(Rn, Rn) = c.t0;  // uncoupled: bare-cavity response
    out.circuit(Ln, Rn) = c.r0;
    out.circuit(Ln, Ln) = c.t0;
    out.circuit(Rn, Ln) = c.r0;
  } else {
    // only the component surviving the ideal limit continues
    out.circuit(Lc, Rc) = c.r;
    out.circuit(Rc, Lc) = c.r;
    out.circuit(Rn, Rn) = c.t0;
    out.circuit(Ln, Ln) = c.t0;
    out.loss(Rc, Rc) = c.t;
    out.loss(Lc, Lc) = c.t;
    out.loss(Ln, Rn) = c.r0;
    out.loss(Rn, Ln) = c.r0;
  }
  return out;
}

}  // namespace qdg
