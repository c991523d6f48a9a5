#pragma once

// State space of one flying photon (polarization x spatial path) coupled to a
// register of quantum-dot spins.  Amplitudes are stored densely; the basis
// index runs polarization fastest, then path, then the spin register with the
// first declared spin most significant.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qdg {

using cx = std::complex<double>;

constexpr double kEps = 1e-12;  // default tolerance for exactness checks

enum class Pol : int { R = 0, L = 1 };

// Spatial modes declared per circuit.  The name "loss" is reserved: amplitude
// parked there is never routed into a later element.
class PathSet {
 public:
  PathSet(std::initializer_list<std::string> names);
  explicit PathSet(std::vector<std::string> names);

  int index(std::string_view name) const;  // throws std::out_of_range
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  int size() const { return static_cast<int>(names_.size()); }
  bool has(std::string_view name) const;
  int loss() const { return loss_; }  // -1 when no loss path is declared

  bool operator==(const PathSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  int loss_ = -1;
};

// cos(angle)|up> + sin(angle)|down> per spin, in declaration order.
struct SpinPreparation {
  std::vector<double> angles;
};

class HybridState {
 public:
  HybridState(PathSet paths, int num_spins);

  const PathSet& paths() const { return paths_; }
  int num_spins() const { return num_spins_; }
  int num_spin_states() const { return 1 << num_spins_; }
  int dim() const { return static_cast<int>(amp_.size()); }

  // spin_idx: bitmask of the spin register, first declared spin = high bit,
  // up = 0, down = 1.
  int index(Pol p, int path, int spin_idx) const;
  cx& at(Pol p, int path, int spin_idx);
  cx at(Pol p, int path, int spin_idx) const;

  Eigen::VectorXcd& data() { return amp_; }
  const Eigen::VectorXcd& data() const { return amp_; }

  double norm2() const { return amp_.squaredNorm(); }
  // squared norm restricted to one path
  double path_norm2(int path) const;

 private:
  PathSet paths_;
  int num_spins_;
  Eigen::VectorXcd amp_;
};

// Photon in the given polarization on the given path, spins prepared per the
// angle list (which fixes num_spins).
HybridState make_initial_state(const PathSet& paths, const SpinPreparation& prep,
                               Pol pol, std::string_view path);

// Same, with the spin register in the computational-basis state spin_idx.
HybridState make_initial_basis_state(const PathSet& paths, int num_spins,
                                     int spin_idx, Pol pol, std::string_view path);

// Jones matrix acting on (R, L) amplitudes of every listed path.
HybridState apply_photon_op(const HybridState& s, const Eigen::Matrix2cd& op,
                            const std::vector<std::string>& on_paths);

// 2x2 on one spin of the register, photon untouched.
HybridState apply_spin_op(const HybridState& s, const Eigen::Matrix2cd& op, int spin);

// Joint 4x4 on (polarization x one spin), basis {Ru, Rd, Lu, Ld}, applied on
// every listed path.  This is the shape of one emitter pass.
HybridState apply_pol_spin_op(const HybridState& s, const Eigen::Matrix4cd& op,
                              int spin, const std::vector<std::string>& on_paths);

// As above, but `to_loss` routes amplitude out of the circuit: its output is
// accumulated on the loss path.  Deposits from different applications are
// orthogonal physical modes, so per-cell magnitudes add in quadrature and the
// stored loss amplitudes are non-negative reals (phase is meaningless there).
HybridState apply_pol_spin_op_lossy(const HybridState& s, const Eigen::Matrix4cd& op,
                                    const Eigen::Matrix4cd& to_loss, int spin,
                                    const std::vector<std::string>& on_paths);

// Moves one polarization component between paths (a polarizing splitter port).
// Destination amplitudes accumulate; the source component is cleared.
HybridState reroute(const HybridState& s, Pol pol, std::string_view from,
                    std::string_view to);

cx inner(const HybridState& a, const HybridState& b);  // <a|b>

// Normalized copy of a spin-register vector; zero vector is returned as-is.
Eigen::VectorXcd normalized(const Eigen::VectorXcd& v);

}  // namespace qdg
