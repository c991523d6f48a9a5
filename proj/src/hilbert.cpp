#include "qdg/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace qdg {

namespace {

void check_same_shape(const HybridState& a, const HybridState& b) {
  if (a.num_spins() != b.num_spins() || !(a.paths() == b.paths()))
    throw std::invalid_argument("states live on different path sets or spin registers");
}

}  // namespace

PathSet::PathSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("path set must not be empty");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty path name");
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate path name: " + names_[i]);
    if (names_[i] == "loss") loss_ = static_cast<int>(i);
  }
}

PathSet::PathSet(std::initializer_list<std::string> names)
    : PathSet(std::vector<std::string>(names)) {}

int PathSet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::out_of_range("unknown path: " + std::string(name));
}

bool PathSet::has(std::string_view name) const {
  for (const auto& n : names_)
    if (n == name) return true;
  return false;
}

HybridState::HybridState(PathSet paths, int num_spins)
    : paths_(std::move(paths)), num_spins_(num_spins) {
  if (num_spins < 1 || num_spins > 16) throw std::invalid_argument("bad spin count");
  amp_ = Eigen::VectorXcd::Zero(2L * paths_.size() * (1 << num_spins));
}

int HybridState::index(Pol p, int path, int spin_idx) const {
  if (path < 0 || path >= paths_.size()) throw std::out_of_range("path id out of range");
  if (spin_idx < 0 || spin_idx >= num_spin_states()) throw std::out_of_range("spin index out of range");
  return static_cast<int>(p) + 2 * (path + paths_.size() * spin_idx);
}

cx& HybridState::at(Pol p, int path, int spin_idx) { return amp_[index(p, path, spin_idx)]; }
cx HybridState::at(Pol p, int path, int spin_idx) const { return amp_[index(p, path, spin_idx)]; }

double HybridState::path_norm2(int path) const {
  double out = 0;
  for (int s = 0; s < num_spin_states(); ++s)
    for (Pol p : {Pol::R, Pol::L}) out += std::norm(at(p, path, s));
  return out;
}

HybridState make_initial_basis_state(const PathSet& paths, int num_spins,
                                     int spin_idx, Pol pol, std::string_view path) {
  HybridState s(paths, num_spins);
  s.at(pol, paths.index(path), spin_idx) = 1.0;
  return s;
}

HybridState make_initial_state(const PathSet& paths, const SpinPreparation& prep,
                               Pol pol, std::string_view path) {
  const int n = static_cast<int>(prep.angles.size());
  HybridState s(paths, n);
  const int p = paths.index(path);
  for (int idx = 0; idx < (1 << n); ++idx) {
    double a = 1.0;
    for (int q = 0; q < n; ++q) {
      const bool down = (idx >> (n - 1 - q)) & 1;
      a *= down ? std::sin(prep.angles[q]) : std::cos(prep.angles[q]);
    }
    s.at(pol, p, idx) = a;
  }
  return s;
}

HybridState apply_photon_op(const HybridState& s, const Eigen::Matrix2cd& op,
                            const std::vector<std::string>& on_paths) {
  HybridState out = s;
  for (const auto& name : on_paths) {
    const int p = s.paths().index(name);
    for (int sp = 0; sp < s.num_spin_states(); ++sp) {
      const cx r = s.at(Pol::R, p, sp), l = s.at(Pol::L, p, sp);
      out.at(Pol::R, p, sp) = op(0, 0) * r + op(0, 1) * l;
      out.at(Pol::L, p, sp) = op(1, 0) * r + op(1, 1) * l;
    }
  }
  return out;
}

HybridState apply_spin_op(const HybridState& s, const Eigen::Matrix2cd& op, int spin) {
  if (spin < 0 || spin >= s.num_spins()) throw std::out_of_range("spin out of range");
  const int bit = 1 << (s.num_spins() - 1 - spin);
  HybridState out = s;
  for (int p = 0; p < s.paths().size(); ++p)
    for (Pol pol : {Pol::R, Pol::L})
      for (int sp = 0; sp < s.num_spin_states(); ++sp) {
        if (sp & bit) continue;  // visit each (up, down) pair once
        const cx u = s.at(pol, p, sp), d = s.at(pol, p, sp | bit);
        out.at(pol, p, sp) = op(0, 0) * u + op(0, 1) * d;
        out.at(pol, p, sp | bit) = op(1, 0) * u + op(1, 1) * d;
      }
  return out;
}

namespace {

// gathers the 4-vector (Ru, Rd, Lu, Ld) for one path and spin-environment
struct PolSpinView {
  int iRu, iRd, iLu, iLd;
};

PolSpinView pol_spin_view(const HybridState& s, int path, int spin, int rest) {
  const int bit = 1 << (s.num_spins() - 1 - spin);
  return {s.index(Pol::R, path, rest), s.index(Pol::R, path, rest | bit),
          s.index(Pol::L, path, rest), s.index(Pol::L, path, rest | bit)};
}

}  // namespace

HybridState apply_pol_spin_op(const HybridState& s, const Eigen::Matrix4cd& op,
                              int spin, const std::vector<std::string>& on_paths) {
  if (spin < 0 || spin >= s.num_spins()) throw std::out_of_range("spin out of range");
  const int bit = 1 << (s.num_spins() - 1 - spin);
  HybridState out = s;
  for (const auto& name : on_paths) {
    const int p = s.paths().index(name);
    if (p == s.paths().loss()) throw std::invalid_argument("loss path cannot feed an element");
    for (int rest = 0; rest < s.num_spin_states(); ++rest) {
      if (rest & bit) continue;
      const auto v = pol_spin_view(s, p, spin, rest);
      Eigen::Vector4cd in(s.data()[v.iRu], s.data()[v.iRd], s.data()[v.iLu], s.data()[v.iLd]);
      Eigen::Vector4cd y = op * in;
      out.data()[v.iRu] = y[0];
      out.data()[v.iRd] = y[1];
      out.data()[v.iLu] = y[2];
      out.data()[v.iLd] = y[3];
    }
  }
  return out;
}

HybridState apply_pol_spin_op_lossy(const HybridState& s, const Eigen::Matrix4cd& op,
                                    const Eigen::Matrix4cd& to_loss, int spin,
                                    const std::vector<std::string>& on_paths) {
  const int loss = s.paths().loss();
  if (loss < 0) throw std::invalid_argument("no loss path declared");
  const int bit = 1 << (s.num_spins() - 1 - spin);
  HybridState out = apply_pol_spin_op(s, op, spin, on_paths);
  for (const auto& name : on_paths) {
    const int p = s.paths().index(name);
    for (int rest = 0; rest < s.num_spin_states(); ++rest) {
      if (rest & bit) continue;
      const auto v = pol_spin_view(s, p, spin, rest);
      Eigen::Vector4cd in(s.data()[v.iRu], s.data()[v.iRd], s.data()[v.iLu], s.data()[v.iLd]);
      Eigen::Vector4cd y = to_loss * in;
      const auto lv = pol_spin_view(out, loss, spin, rest);
      // quadrature accumulation: distinct deposits occupy orthogonal modes
      out.data()[lv.iRu] = std::sqrt(std::norm(out.data()[lv.iRu]) + std::norm(y[0]));
      out.data()[lv.iRd] = std::sqrt(std::norm(out.data()[lv.iRd]) + std::norm(y[1]));
      out.data()[lv.iLu] = std::sqrt(std::norm(out.data()[lv.iLu]) + std::norm(y[2]));
      out.data()[lv.iLd] = std::sqrt(std::norm(out.data()[lv.iLd]) + std::norm(y[3]));
    }
  }
  return out;
}

HybridState reroute(const HybridState& s, Pol pol, std::string_view from,
                    std::string_view to) {
  const int pf = s.paths().index(from);
  const int pt = s.paths().index(to);
  if (pf == s.paths().loss()) throw std::invalid_argument("loss path cannot feed an element");
  if (pf == pt) return s;
  HybridState out = s;
  for (int sp = 0; sp < s.num_spin_states(); ++sp) {
    out.at(pol, pt, sp) += s.at(pol, pf, sp);
    out.at(pol, pf, sp) = 0.0;
  }
  return out;
}

cx inner(const HybridState& a, const HybridState& b) {
  check_same_shape(a, b);
  return a.data().dot(b.data());  // Eigen's dot conjugates the left argument
}

Eigen::VectorXcd normalized(const Eigen::VectorXcd& v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  return v / n;
}

}  // namespace qdg
