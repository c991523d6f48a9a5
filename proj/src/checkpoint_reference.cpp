// Hand-evaluated closed forms of every pipeline stage for both gates, written
// out term by term from the stage algebra rather than by composing the
// circuit elements.  The tests hold trace_checkpoints() to these exactly, so
// any slip in an element matrix, a routing step, or an operation order shows
// up as a disagreement here.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdg/circuits.hpp"

namespace qdg {

namespace {

using Eigen::VectorXcd;

// spin-register bitmasks, first spin high: uu=0, ud=1, du=2, dd=3

std::vector<VectorXcd> swap_reference(int m, const SpinPreparation& prep) {
  const PathSet ps = swap_paths();
  HybridState z(ps, 2);
  const int l = ps.index("l");
  const int r = ps.index("r");
  auto at = [&](VectorXcd& v, Pol p, int path, int s) -> cx& {
    return v(z.index(p, path, s));
  };

  const double A = std::cos(prep.angles[0]), B = std::sin(prep.angles[0]);
  const double C = std::cos(prep.angles[1]), D = std::sin(prep.angles[1]);
  const cx E = std::exp(cx(0.0, std::numbers::pi / m));
  const double P = (A * C + B * D) / 2.0;  // symmetric l weight
  const double M = (A * C - B * D) / 2.0;
  const double Q = (A * D + B * C) / 2.0;  // symmetric r weight
  const double N = (A * D - B * C) / 2.0;
  const double h = 1.0 / std::numbers::sqrt2;

  std::vector<VectorXcd> out(9, VectorXcd::Zero(z.dim()));

  // 0: R photon on l times the spin product
  at(out[0], Pol::R, l, 0) = A * C;
  at(out[0], Pol::R, l, 1) = A * D;
  at(out[0], Pol::R, l, 2) = B * C;
  at(out[0], Pol::R, l, 3) = B * D;

  // 1: first pass of spin a flips the sign of R|up> and turns R|down> into L
  at(out[1], Pol::R, l, 0) = -A * C;
  at(out[1], Pol::R, l, 1) = -A * D;
  at(out[1], Pol::L, l, 2) = B * C;
  at(out[1], Pol::L, l, 3) = B * D;

  // 2: same rule on spin b
  at(out[2], Pol::R, l, 0) = A * C;
  at(out[2], Pol::L, l, 1) = -A * D;
  at(out[2], Pol::L, l, 2) = -B * C;
  at(out[2], Pol::R, l, 3) = B * D;

  // 3: Hadamard on both spins
  at(out[3], Pol::R, l, 0) = P;
  at(out[3], Pol::R, l, 3) = P;
  at(out[3], Pol::R, l, 1) = M;
  at(out[3], Pol::R, l, 2) = M;
  at(out[3], Pol::L, l, 0) = -Q;
  at(out[3], Pol::L, l, 3) = Q;
  at(out[3], Pol::L, l, 1) = N;
  at(out[3], Pol::L, l, 2) = -N;

  // 4: L component moves to r
  at(out[4], Pol::R, l, 0) = P;
  at(out[4], Pol::R, l, 3) = P;
  at(out[4], Pol::R, l, 1) = M;
  at(out[4], Pol::R, l, 2) = M;
  at(out[4], Pol::L, r, 0) = -Q;
  at(out[4], Pol::L, r, 3) = Q;
  at(out[4], Pol::L, r, 1) = N;
  at(out[4], Pol::L, r, 2) = -N;

  // 5: second pass of spin a on both arms
  at(out[5], Pol::R, l, 0) = -P;
  at(out[5], Pol::L, l, 3) = P;
  at(out[5], Pol::R, l, 1) = -M;
  at(out[5], Pol::L, l, 2) = M;
  at(out[5], Pol::L, r, 0) = Q;
  at(out[5], Pol::R, r, 3) = Q;
  at(out[5], Pol::L, r, 1) = -N;
  at(out[5], Pol::R, r, 2) = -N;

  // 6: second pass of spin b
  at(out[6], Pol::R, l, 0) = P;
  at(out[6], Pol::R, l, 3) = P;
  at(out[6], Pol::L, l, 1) = -M;
  at(out[6], Pol::L, l, 2) = -M;
  at(out[6], Pol::L, r, 0) = -Q;
  at(out[6], Pol::L, r, 3) = Q;
  at(out[6], Pol::R, r, 2) = N;
  at(out[6], Pol::R, r, 1) = -N;

  // 7: phase plate multiplies the R component on r by E
  out[7] = out[6];
  at(out[7], Pol::R, r, 2) = E * N;
  at(out[7], Pol::R, r, 1) = -E * N;

  // 8: recombiner then Hadamards
  at(out[8], Pol::R, l, 0) = h * P;
  at(out[8], Pol::R, l, 3) = h * P;
  at(out[8], Pol::L, l, 0) = -h * M;
  at(out[8], Pol::L, l, 3) = h * M;
  at(out[8], Pol::L, l, 1) = -h * Q;
  at(out[8], Pol::L, l, 2) = -h * Q;
  at(out[8], Pol::R, l, 2) = -h * E * N;
  at(out[8], Pol::R, l, 1) = h * E * N;
  at(out[8], Pol::R, r, 0) = h * P;
  at(out[8], Pol::R, r, 3) = h * P;
  at(out[8], Pol::L, r, 0) = -h * M;
  at(out[8], Pol::L, r, 3) = h * M;
  at(out[8], Pol::L, r, 1) = h * Q;
  at(out[8], Pol::L, r, 2) = h * Q;
  at(out[8], Pol::R, r, 2) = h * E * N;
  at(out[8], Pol::R, r, 1) = -h * E * N;

  return out;
}

// spin-register bitmasks: control*4 + t1*2 + t2

std::vector<VectorXcd> cswap_reference(int m, const SpinPreparation& prep) {
  const PathSet ps = cswap_paths();
  HybridState z(ps, 3);
  auto at = [&](VectorXcd& v, Pol p, std::string_view path, int s) -> cx& {
    return v(z.index(p, ps.index(path), s));
  };

  const double mu = std::cos(prep.angles[0]), nu = std::sin(prep.angles[0]);
  const double ah = std::cos(prep.angles[1]), bh = std::sin(prep.angles[1]);
  const double gh = std::cos(prep.angles[2]), dh = std::sin(prep.angles[2]);
  const cx E = std::exp(cx(0.0, std::numbers::pi / m));
  const double h = 1.0 / std::numbers::sqrt2;

  std::vector<VectorXcd> out(5, VectorXcd::Zero(z.dim()));

  // 0: R photon on in times the spin product
  for (int s = 0; s < 8; ++s) {
    const double c0 = (s & 4) ? nu : mu;
    const double c1 = (s & 2) ? bh : ah;
    const double c2 = (s & 1) ? dh : gh;
    at(out[0], Pol::R, "in", s) = c0 * c1 * c2;
  }

  // 1: control pass sends |up> (with a sign) to r and |down> to l, the r arm
  // crosses R to L, then both targets scatter once; the same target bracket
  // appears on both arms
  for (const int cbit : {0, 1}) {
    const double f = cbit ? nu : mu;
    const char* path = cbit ? "l" : "r";
    const int c4 = cbit * 4;
    at(out[1], Pol::L, path, c4 + 0) = f * ah * gh;
    at(out[1], Pol::R, path, c4 + 1) = -f * ah * dh;
    at(out[1], Pol::R, path, c4 + 2) = -f * bh * gh;
    at(out[1], Pol::L, path, c4 + 3) = f * bh * dh;
  }

  // 2: target Hadamards, polarizing split, second target passes, then the
  // partial phase plate on l1 and the sign plate on r1
  const double Sp = (ah * dh + bh * gh) / 2.0;
  const double Sm = (ah * dh - bh * gh) / 2.0;
  const double Tp = (ah * gh + bh * dh) / 2.0;
  const double Tm = (ah * gh - bh * dh) / 2.0;
  for (const int cbit : {0, 1}) {
    const double f = cbit ? nu : mu;
    const char* p1 = cbit ? "l1" : "r1";
    const char* p2 = cbit ? "l2" : "r2";
    const cx eL = cbit ? E : cx(1.0);
    const int c4 = cbit * 4;
    at(out[2], Pol::R, p1, c4 + 0) = -f * Sp;
    at(out[2], Pol::R, p1, c4 + 3) = f * Sp;
    at(out[2], Pol::L, p1, c4 + 1) = f * eL * Sm;
    at(out[2], Pol::L, p1, c4 + 2) = -f * eL * Sm;
    at(out[2], Pol::L, p2, c4 + 0) = f * Tp;
    at(out[2], Pol::L, p2, c4 + 3) = f * Tp;
    at(out[2], Pol::R, p2, c4 + 1) = -f * Tm;
    at(out[2], Pol::R, p2, c4 + 2) = -f * Tm;
  }

  // 3: diagonal splitters pair ports (1,2) into (3,4), then target Hadamards.
  // In the +/- decomposition the port-1 brackets become
  //   Bp1 = -(u|ud> + w|du>)/sqrt2,  Bm1 = -(w|ud> + u|du>)/sqrt2
  // with (u, w) the partial-swap pair on l and the plain pair on r, and the
  // port-2 brackets become
  //   Bp2 = (bh dh|uu> + ah gh|dd>)/sqrt2,  Bm2 = -(ah gh|uu> + bh dh|dd>)/sqrt2.
  // Port 3 carries |->Bm1 + |+>Bp2, port 4 carries |+>Bp1 + |->Bm2.
  for (const int cbit : {0, 1}) {
    const double f = cbit ? nu : mu;
    const char* p3 = cbit ? "l3" : "r3";
    const char* p4 = cbit ? "l4" : "r4";
    const cx u = cbit ? (1.0 + E) / 2.0 * ah * dh + (1.0 - E) / 2.0 * bh * gh
                      : cx(ah * dh);
    const cx w = cbit ? (1.0 - E) / 2.0 * ah * dh + (1.0 + E) / 2.0 * bh * gh
                      : cx(bh * gh);
    const int c4 = cbit * 4;
    const cx bp1_ud = -h * u, bp1_du = -h * w;
    const cx bm1_ud = -h * w, bm1_du = -h * u;
    const cx bp2_uu = h * bh * dh, bp2_dd = h * ah * gh;
    const cx bm2_uu = -h * ah * gh, bm2_dd = -h * bh * dh;
    at(out[3], Pol::R, p3, c4 + 1) = f * h * bm1_ud;
    at(out[3], Pol::R, p3, c4 + 2) = f * h * bm1_du;
    at(out[3], Pol::R, p3, c4 + 0) = f * h * bp2_uu;
    at(out[3], Pol::R, p3, c4 + 3) = f * h * bp2_dd;
    at(out[3], Pol::L, p3, c4 + 1) = -f * h * bm1_ud;
    at(out[3], Pol::L, p3, c4 + 2) = -f * h * bm1_du;
    at(out[3], Pol::L, p3, c4 + 0) = f * h * bp2_uu;
    at(out[3], Pol::L, p3, c4 + 3) = f * h * bp2_dd;
    at(out[3], Pol::R, p4, c4 + 1) = f * h * bp1_ud;
    at(out[3], Pol::R, p4, c4 + 2) = f * h * bp1_du;
    at(out[3], Pol::R, p4, c4 + 0) = f * h * bm2_uu;
    at(out[3], Pol::R, p4, c4 + 3) = f * h * bm2_dd;
    at(out[3], Pol::L, p4, c4 + 1) = f * h * bp1_ud;
    at(out[3], Pol::L, p4, c4 + 2) = f * h * bp1_du;
    at(out[3], Pol::L, p4, c4 + 0) = -f * h * bm2_uu;
    at(out[3], Pol::L, p4, c4 + 3) = -f * h * bm2_dd;
  }

  // 4: recombiners, per polarization and spin cell:
  //   p5 = (l4 + r4)/sqrt2, p6 = (l4 - r4)/sqrt2,
  //   p7 = (l3 + r3)/sqrt2, p8 = (l3 - r3)/sqrt2
  for (const Pol p : {Pol::R, Pol::L}) {
    for (int s = 0; s < 8; ++s) {
      const cx l3v = out[3](z.index(p, ps.index("l3"), s));
      const cx r3v = out[3](z.index(p, ps.index("r3"), s));
      const cx l4v = out[3](z.index(p, ps.index("l4"), s));
      const cx r4v = out[3](z.index(p, ps.index("r4"), s));
      at(out[4], p, "p5", s) = h * (l4v + r4v);
      at(out[4], p, "p6", s) = h * (l4v - r4v);
      at(out[4], p, "p7", s) = h * (l3v + r3v);
      at(out[4], p, "p8", s) = h * (l3v - r3v);
    }
  }

  return out;
}

}  // namespace

std::vector<VectorXcd> reference_checkpoints(GateKind gate, int m,
                                             const SpinPreparation& prep) {
  if (m < 1) throw std::invalid_argument("root order must be >= 1");
  if (static_cast<int>(prep.angles.size()) != gate_spins(gate))
    throw std::invalid_argument("preparation needs one angle per spin");
  return gate == GateKind::SwapRoot ? swap_reference(m, prep)
                                    : cswap_reference(m, prep);
}

}  // namespace qdg
