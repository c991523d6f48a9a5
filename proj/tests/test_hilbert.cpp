#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdg/hilbert.hpp"

using namespace qdg;

TEST_CASE("path set indexing and loss detection") {
  PathSet ps{"l", "r", "loss"};
  CHECK(ps.size() == 3);
  CHECK(ps.index("l") == 0);
  CHECK(ps.index("r") == 1);
  CHECK(ps.loss() == 2);
  CHECK(ps.name(1) == "r");
  CHECK(ps.has("r"));
  CHECK(!ps.has("x"));
  CHECK_THROWS_AS((void)ps.index("x"), std::out_of_range);

  PathSet no_loss{"a", "b"};
  CHECK(no_loss.loss() == -1);

  CHECK_THROWS_AS(PathSet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(PathSet(std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("amplitude layout runs polarization fastest, then path, then spins") {
  PathSet ps{"l", "r"};
  HybridState s(ps, 2);
  CHECK(s.dim() == 2 * 2 * 4);
  // index = pol + 2*(path + npaths*spin)
  CHECK(s.index(Pol::R, 0, 0) == 0);
  CHECK(s.index(Pol::L, 0, 0) == 1);
  CHECK(s.index(Pol::R, 1, 0) == 2);
  CHECK(s.index(Pol::R, 0, 1) == 4);
  CHECK(s.index(Pol::L, 1, 3) == 15);
}

TEST_CASE("initial product state and basis state") {
  PathSet ps{"l", "r", "loss"};
  SpinPreparation prep{{0.3, 1.1}};
  HybridState s = make_initial_state(ps, prep, Pol::R, "l");
  const double a = std::cos(0.3), b = std::sin(0.3);
  const double c = std::cos(1.1), d = std::sin(1.1);
  CHECK(s.at(Pol::R, 0, 0).real() == doctest::Approx(a * c).epsilon(1e-15));
  CHECK(s.at(Pol::R, 0, 1).real() == doctest::Approx(a * d).epsilon(1e-15));
  CHECK(s.at(Pol::R, 0, 2).real() == doctest::Approx(b * c).epsilon(1e-15));
  CHECK(s.at(Pol::R, 0, 3).real() == doctest::Approx(b * d).epsilon(1e-15));
  CHECK(s.norm2() == doctest::Approx(1.0).epsilon(1e-14));

  HybridState e2 = make_initial_basis_state(ps, 2, 2, Pol::L, "r");
  CHECK(e2.at(Pol::L, 1, 2) == cx(1.0, 0.0));
  CHECK(e2.norm2() == 1.0);
}

TEST_CASE("photon op acts only on the listed paths") {
  PathSet ps{"l", "r"};
  HybridState s = make_initial_basis_state(ps, 1, 0, Pol::R, "l");
  s.at(Pol::R, 1, 0) = 0.5;  // some amplitude on r too
  Eigen::Matrix2cd swap_pol;
  swap_pol << 0, 1, 1, 0;
  HybridState t = apply_photon_op(s, swap_pol, {"l"});
  CHECK(t.at(Pol::L, 0, 0) == cx(1.0, 0.0));
  CHECK(t.at(Pol::R, 0, 0) == cx(0.0, 0.0));
  CHECK(t.at(Pol::R, 1, 0) == cx(0.5, 0.0));  // untouched
}

TEST_CASE("spin op targets the right spin") {
  PathSet ps{"l"};
  HybridState s = make_initial_basis_state(ps, 2, 0, Pol::R, "l");  // |uu>
  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  HybridState t0 = apply_spin_op(s, x, 0);
  CHECK(t0.at(Pol::R, 0, 2) == cx(1.0, 0.0));  // |du>
  HybridState t1 = apply_spin_op(s, x, 1);
  CHECK(t1.at(Pol::R, 0, 1) == cx(1.0, 0.0));  // |ud>
  // Hadamard twice is the identity
  const double h = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd had;
  had << h, h, h, -h;
  HybridState round_trip = apply_spin_op(apply_spin_op(s, had, 0), had, 0);
  CHECK((round_trip.data() - s.data()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("joint pol-spin op uses basis {Ru, Rd, Lu, Ld}") {
  PathSet ps{"l", "r"};
  HybridState s = make_initial_basis_state(ps, 1, 1, Pol::R, "l");  // R, spin down
  Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
  op(2, 1) = 1.0;  // Rd -> Lu
  HybridState t = apply_pol_spin_op(s, op, 0, {"l"});
  CHECK(t.at(Pol::L, 0, 0) == cx(1.0, 0.0));
  CHECK(t.norm2() == 1.0);
}

TEST_CASE("lossy op accumulates magnitudes in quadrature on the loss path") {
  PathSet ps{"l", "loss"};
  HybridState s = make_initial_basis_state(ps, 1, 0, Pol::R, "l");
  const Eigen::Matrix4cd keep = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd leak = Eigen::Matrix4cd::Zero();
  leak(0, 0) = cx(0.0, 0.6);  // Ru -> 0.6i Ru off-circuit
  HybridState t = apply_pol_spin_op_lossy(s, keep, leak, 0, {"l"});
  CHECK(t.at(Pol::R, 1, 0) == cx(0.6, 0.0));  // magnitude, phase dropped
  // a second deposit of 0.8 combines as sqrt(0.6^2 + 0.8^2) = 1
  t.at(Pol::R, 0, 0) = 1.0;
  leak(0, 0) = 0.8;
  HybridState t2 = apply_pol_spin_op_lossy(t, keep, leak, 0, {"l"});
  CHECK(t2.at(Pol::R, 1, 0).real() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(apply_pol_spin_op(s, keep, 0, {"loss"}), std::invalid_argument);
}

TEST_CASE("reroute moves one polarization and accumulates at the destination") {
  PathSet ps{"a", "b", "loss"};
  HybridState s(ps, 1);
  s.at(Pol::R, 0, 0) = 0.6;
  s.at(Pol::L, 0, 0) = 0.3;
  s.at(Pol::R, 1, 0) = 0.2;
  HybridState t = reroute(s, Pol::R, "a", "b");
  CHECK(t.at(Pol::R, 0, 0) == cx(0.0, 0.0));
  CHECK(t.at(Pol::R, 1, 0) == cx(0.8, 0.0));
  CHECK(t.at(Pol::L, 0, 0) == cx(0.3, 0.0));
  CHECK_THROWS_AS(reroute(s, Pol::R, "loss", "a"), std::invalid_argument);
}

TEST_CASE("inner product conjugates the left argument") {
  PathSet ps{"l"};
  HybridState a(ps, 1), b(ps, 1);
  a.at(Pol::R, 0, 0) = cx(0.0, 1.0);
  b.at(Pol::R, 0, 0) = cx(1.0, 0.0);
  CHECK(inner(a, b) == cx(0.0, -1.0));
}

TEST_CASE("normalized handles the zero vector") {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  CHECK(normalized(v).norm() == 0.0);
  v(2) = cx(0.0, 2.0);
  CHECK(normalized(v).norm() == doctest::Approx(1.0).epsilon(1e-15));
}
