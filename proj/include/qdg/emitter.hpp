#pragma once

// One quantum-dot-in-cavity unit as seen by a passing photon: frequency-domain
// scattering coefficients of the dipole-coupled and uncoupled polarizations,
// and the resulting 4x4 map on (polarization x spin) for a single pass.
//
// Direction bookkeeping is folded into polarization: with downward incidence
// the circulating pair is {R moving down, L moving up}; a reflection flips
// polarization and propagation direction together, so one matrix per pass
// covers both transmitted and reflected components.

#include <complex>

#include <Eigen/Dense>

#include "qdg/hilbert.hpp"

namespace qdg {

// All rates in units of kappa.  Detunings are (mode - photon) frequencies;
// zero means resonant drive.
struct EmitterParams {
  double g = 0.0;        // dot-cavity coupling
  double kappa = 1.0;    // cavity decay through the two main ports
  double kappa_s = 0.0;  // side leakage
  double gamma = 0.1;    // trion dipole decay
  double detune_c = 0.0; // cavity mode minus photon frequency
  double detune_x = 0.0; // trion transition minus photon frequency
};

struct ScatterCoefficients {
  cx t;   // coupled transmission
  cx r;   // coupled reflection (= 1 + t)
  cx t0;  // uncoupled (g = 0) transmission
  cx r0;  // uncoupled reflection (= 1 + t0)
};

// throws std::domain_error on non-physical parameters (gamma or kappa <= 0,
// negative g or kappa_s)
ScatterCoefficients scatter_coefficients(const EmitterParams& p);

enum class Incidence { Down, Up };

// Perfect-coupling limit: the coupled component reflects unchanged, the
// uncoupled one transmits with a pi phase.  Basis {Ru, Rd, Lu, Ld}.
Eigen::Matrix4cd ideal_round_matrix(Incidence inc);

enum class LeakConvention { Coherent, Lossy };

struct RoundMap {
  Eigen::Matrix4cd circuit;  // amplitudes that stay on the path
  Eigen::Matrix4cd loss;     // amplitudes routed off-circuit (zero for Coherent)
};

// Coherent keeps all four scattering terms on the path; Lossy keeps only the
// term that survives the ideal limit and books the wrong-port term as loss.
RoundMap realistic_round_matrix(const ScatterCoefficients& c, Incidence inc,
                                LeakConvention leak);

}  // namespace qdg
