#include "qdg/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdg {

namespace {
constexpr double kPi = std::numbers::pi;
const cx kI(0.0, 1.0);

void require_root_order(int m) {
  if (m < 1) throw std::invalid_argument("root order m must be >= 1");
}
}  // namespace

Eigen::Matrix2cd phase_plate(double a) {
  return std::exp(kI * a) * Eigen::Matrix2cd::Identity();
}

Eigen::Matrix2cd half_wave(double b) {
  Eigen::Matrix2cd m;
  m << std::cos(2 * b), std::sin(2 * b), std::sin(2 * b), -std::cos(2 * b);
  return kI * m;
}

Eigen::Matrix2cd quarter_wave(double c) {
  Eigen::Matrix2cd m;
  m << 1.0 + kI * std::cos(2 * c), kI * std::sin(2 * c),
       kI * std::sin(2 * c), 1.0 - kI * std::cos(2 * c);
  return m / std::sqrt(2.0);
}

Eigen::Matrix2cd s_gate(int m) {
  require_root_order(m);
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(0, 0) = std::exp(kI * kPi / double(m));
  s(1, 1) = 1.0;
  return s;
}

Eigen::Matrix2cd s_prime_gate(int m) {
  require_root_order(m);
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  s(0, 0) = 1.0;
  s(1, 1) = -std::exp(kI * kPi / double(m));
  return s;
}

std::vector<Eigen::Matrix2cd> decompose_s(int m) {
  require_root_order(m);
  const double md = m;
  return {phase_plate((2 * md + 1) * kPi / (2 * md)), quarter_wave(kPi / 4),
          half_wave((md + 1) * kPi / (4 * md)), quarter_wave(kPi / 4)};
}

std::vector<Eigen::Matrix2cd> decompose_s_prime(int m) {
  require_root_order(m);
  const double md = m;
  return {phase_plate((1 - md) * kPi / (2 * md)), quarter_wave(kPi / 4),
          half_wave(-kPi / (4 * md)), quarter_wave(kPi / 4)};
}

Eigen::Matrix2cd compose(const std::vector<Eigen::Matrix2cd>& traversal_order) {
  Eigen::Matrix2cd acc = Eigen::Matrix2cd::Identity();
  for (const auto& e : traversal_order) acc = e * acc;  // later elements act last
  return acc;
}

HybridState bs_split(const HybridState& s, std::string_view a, std::string_view b) {
  const int pa = s.paths().index(a);
  const int pb = s.paths().index(b);
  if (pa == s.paths().loss() || pb == s.paths().loss())
    throw std::invalid_argument("loss path cannot feed an element");
  if (pa == pb) throw std::invalid_argument("splitter needs two distinct paths");
  const double rs2 = 1.0 / std::sqrt(2.0);
  HybridState out = s;
  for (int sp = 0; sp < s.num_spin_states(); ++sp)
    for (Pol pol : {Pol::R, Pol::L}) {
      const cx va = s.at(pol, pa, sp), vb = s.at(pol, pb, sp);
      out.at(pol, pa, sp) = (va + vb) * rs2;
      out.at(pol, pb, sp) = (va - vb) * rs2;
    }
  return out;
}

Eigen::Matrix2cd spin_hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Eigen::Matrix2cd spin_pauli(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
    case Pauli::ZX: m << 0, 1, -1, 0; break;  // up -> -down, down -> up
  }
  return m;
}

}  // namespace qdg
