#include <cmath>
#include <numbers>
#include <random>

#include "anticoh/spin.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticoh;

TEST_CASE("spin quantum numbers parse and print") {
  CHECK(SpinQuantumNumber::parse("5/2").two_j() == 5);
  CHECK(SpinQuantumNumber::parse("2").two_j() == 4);
  CHECK(SpinQuantumNumber::parse("2.5").two_j() == 5);
  CHECK(SpinQuantumNumber(5).to_string() == "5/2");
  CHECK(SpinQuantumNumber(4).to_string() == "2");
  CHECK(SpinQuantumNumber(3).dimension() == 4);
  CHECK_THROWS(SpinQuantumNumber::parse("5/3"));
  CHECK_THROWS(SpinQuantumNumber::parse("1.3"));
  CHECK_THROWS(SpinQuantumNumber(-1));
}

TEST_CASE("states validate and normalize") {
  const SpinQuantumNumber j(2);
  ComplexVector c(3);
  c << 3.0, 0.0, 4.0;
  const SpinState s(j, c);
  CHECK(s.coefficients().norm() == doctest::Approx(1.0));
  CHECK(std::abs(s.coefficient(-2) - 0.6) < 1e-15);
  CHECK_THROWS(SpinState(j, ComplexVector::Zero(3)));
  CHECK_THROWS(SpinState(j, ComplexVector::Ones(4)));
  ComplexVector bad = ComplexVector::Ones(3);
  bad(1) = std::nan("");
  CHECK_THROWS(SpinState(j, bad));
  CHECK_THROWS(SpinState::basis(j, 1));
  CHECK_THROWS(s.coefficient(3));
  CHECK(s.fidelity(s.with_global_phase(1.3)) == doctest::Approx(1.0));
}

TEST_CASE("spin operators satisfy the commutation relations") {
  for (int two_j = 1; two_j <= 12; ++two_j) {
    const SpinOperators ops = build_spin_operators(SpinQuantumNumber(two_j));
    const Complex i(0.0, 1.0);
    CHECK((ops.jx * ops.jy - ops.jy * ops.jx - i * ops.jz).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ops.jy * ops.jz - ops.jz * ops.jy - i * ops.jx).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ops.jz * ops.jx - ops.jx * ops.jz - i * ops.jy).cwiseAbs().maxCoeff() < 1e-12);
    const double j = 0.5 * two_j;
    const ComplexMatrix casimir = ops.jx * ops.jx + ops.jy * ops.jy + ops.jz * ops.jz;
    CHECK((casimir - j * (j + 1) * ComplexMatrix::Identity(two_j + 1, two_j + 1)).cwiseAbs().maxCoeff() <
          1e-12);
    const oracle::Ops ref = oracle::spin_ops(two_j);
    CHECK((ops.jx - ref.jx).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((ops.jy - ref.jy).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((ops.jz - ref.jz).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("rotation matrices agree with the Taylor-series exponential") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (int two_j = 1; two_j <= 10; ++two_j) {
    for (int r = 0; r < 5; ++r) {
      const Vector3 axis(normal(rng), normal(rng), normal(rng));
      const double angle = 3.0 * normal(rng);
      const ComplexMatrix u = rotation_matrix(SpinQuantumNumber(two_j), Direction(axis), angle);
      const ComplexMatrix ref = oracle::rotation(two_j, axis, angle);
      CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("spin expectation of basis states and rotation of |j,j>") {
  const SpinQuantumNumber j(4);
  const SpinState up = SpinState::basis(j, 4);
  CHECK(spin_expectation(up).z() == doctest::Approx(2.0));
  CHECK(total_variance(up) == doctest::Approx(2.0));
  // Rotating by pi/2 about y takes +z to +x.
  const SpinState r = rotate(up, Direction::y_axis(), std::numbers::pi / 2);
  CHECK(spin_expectation(r).x() == doctest::Approx(2.0));
  CHECK(std::abs(spin_expectation(r).z()) < 1e-12);
}

TEST_CASE("product moments and the definition-based anticoherence test") {
  const SpinQuantumNumber j(4);
  ComplexVector c = ComplexVector::Zero(5);
  c(0) = 0.5;
  c(2) = Complex(0.0, 0.5 * std::sqrt(2.0));
  c(4) = 0.5;
  const SpinState tet(j, c);
  CHECK(is_t_anticoherent_by_definition(tet, 2, 40, 1e-10));
  CHECK_FALSE(is_t_anticoherent_by_definition(tet, 3, 40, 1e-10));
  CHECK_FALSE(is_t_anticoherent_by_definition(SpinState::basis(j, 4), 1, 40, 1e-8));
  const Direction z = Direction::z_axis();
  const Direction dirs[] = {z, z};
  CHECK(std::abs(product_moment(SpinState::basis(j, 2), dirs) - 1.0) < 1e-12);
  CHECK_THROWS(is_t_anticoherent_by_definition(tet, 4, 40, 1e-10));
  CHECK_THROWS(is_t_anticoherent_by_definition(tet, 1, 10, 1e-10));
}

TEST_CASE("directions") {
  CHECK_THROWS(Direction(0.0, 0.0, 0.0));
  const Direction d(3.0, 0.0, 4.0);
  CHECK(d.vector().norm() == doctest::Approx(1.0));
  const auto dirs = random_directions(50, 3);
  CHECK(dirs.size() == 50);
  const auto again = random_directions(50, 3);
  CHECK(dirs[7].x() == again[7].x());
}
