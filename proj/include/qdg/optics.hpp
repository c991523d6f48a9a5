#pragma once

// Linear optical elements (Jones calculus on {R, L}) and the single-spin
// rotations used around the emitter passes.

#include <vector>

#include <Eigen/Dense>

#include "qdg/hilbert.hpp"

namespace qdg {

// e^{i a} * identity
Eigen::Matrix2cd phase_plate(double a);

// half-wave plate at angle b to the fast axis (literal Jones form, carries a
// global i): i * [[cos 2b, sin 2b], [sin 2b, -cos 2b]]
Eigen::Matrix2cd half_wave(double b);

// quarter-wave plate: (1/sqrt2) * [[1 + i cos 2c, i sin 2c], [i sin 2c, 1 - i cos 2c]]
Eigen::Matrix2cd quarter_wave(double c);

// diag(e^{i pi/m}, 1) and diag(1, -e^{i pi/m}); m >= 1
Eigen::Matrix2cd s_gate(int m);
Eigen::Matrix2cd s_prime_gate(int m);

// Wave-plate realizations of the two phase gates, listed in the order the
// photon traverses them.  compose() multiplies right-to-left accordingly, so
// compose(decompose_s(m)) == s_gate(m) exactly, global phase included.
std::vector<Eigen::Matrix2cd> decompose_s(int m);
std::vector<Eigen::Matrix2cd> decompose_s_prime(int m);
Eigen::Matrix2cd compose(const std::vector<Eigen::Matrix2cd>& traversal_order);

// balanced splitter between two paths: amp(a) -> (amp(a)+amp(b))/sqrt2,
// amp(b) -> (amp(a)-amp(b))/sqrt2, per polarization and spin configuration
HybridState bs_split(const HybridState& s, std::string_view a, std::string_view b);

Eigen::Matrix2cd spin_hadamard();

enum class Pauli { I, X, Z, ZX };  // ZX = sigma_z * sigma_x
Eigen::Matrix2cd spin_pauli(Pauli p);

}  // namespace qdg
