#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anticoh/numeric.hpp"

namespace anticoh {

/// Spin quantum number j stored as the integer 2j, so half-integer spins are
/// exact. The Hilbert space dimension is 2j + 1.
class SpinQuantumNumber {
 public:
  constexpr SpinQuantumNumber() = default;
  explicit SpinQuantumNumber(int two_j);

  /// Parses "2", "5/2" or "2.5".
  static SpinQuantumNumber parse(const std::string& text);

  constexpr int two_j() const noexcept { return two_j_; }
  constexpr int dimension() const noexcept { return two_j_ + 1; }
  constexpr double value() const noexcept { return 0.5 * two_j_; }
  constexpr bool is_integer() const noexcept { return two_j_ % 2 == 0; }

  /// "2" or "5/2".
  std::string to_string() const;

  friend constexpr auto operator<=>(SpinQuantumNumber, SpinQuantumNumber) = default;

 private:
  int two_j_ = 1;
};

/// Unit vector in R^3.
class Direction {
 public:
  /// Normalizes (x, y, z); throws std::invalid_argument on a zero vector.
  Direction(double x, double y, double z);
  explicit Direction(const Vector3& v) : Direction(v.x(), v.y(), v.z()) {}

  static Direction x_axis() { return {1.0, 0.0, 0.0}; }
  static Direction y_axis() { return {0.0, 1.0, 0.0}; }
  static Direction z_axis() { return {0.0, 0.0, 1.0}; }
  static Direction from_angles(double theta, double phi);

  const Vector3& vector() const noexcept { return n_; }
  double x() const noexcept { return n_.x(); }
  double y() const noexcept { return n_.y(); }
  double z() const noexcept { return n_.z(); }

 private:
  Vector3 n_;
};

/// Directions uniform on the sphere (normalized 3D Gaussian samples).
std::vector<Direction> random_directions(int count, std::uint64_t seed);

/// Pure spin-j state, coefficients c_m in ascending m = -j..j.
///
/// The constructor renormalizes its input; a zero vector is rejected. The
/// global phase is kept as given.
class SpinState {
 public:
  SpinState(SpinQuantumNumber j, ComplexVector coefficients);

  /// |j, m> with m = two_m / 2.
  static SpinState basis(SpinQuantumNumber j, int two_m);

  SpinQuantumNumber spin() const noexcept { return j_; }
  int two_j() const noexcept { return j_.two_j(); }
  int dimension() const noexcept { return j_.dimension(); }
  const ComplexVector& coefficients() const noexcept { return c_; }

  /// c_m for m = two_m / 2. Throws std::out_of_range for invalid m.
  Complex coefficient(int two_m) const;

  /// <this|other>. Throws std::invalid_argument on mismatched spin.
  Complex inner(const SpinState& other) const;
  /// |<this|other>|, equal to 1 for states that agree up to a global phase.
  double fidelity(const SpinState& other) const;

  SpinState with_global_phase(double alpha) const;

 private:
  SpinQuantumNumber j_;
  ComplexVector c_;
};

struct SpinOperators {
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
  ComplexMatrix j0;

  /// J.n
  ComplexMatrix along(const Direction& n) const;
};

SpinOperators build_spin_operators(SpinQuantumNumber j);

/// exp(-i angle J.n) |state>.
SpinState rotate(const SpinState& state, const Direction& axis, double angle);

/// Unitary matrix exp(-i angle J.n) in the |j,m> basis.
ComplexMatrix rotation_matrix(SpinQuantumNumber j, const Direction& axis, double angle);

/// <(J.n_1)(J.n_2)...(J.n_k)>. Throws std::invalid_argument on an empty list.
Complex product_moment(const SpinState& state, std::span<const Direction> dirs);

/// (<Jx>, <Jy>, <Jz>)
Vector3 spin_expectation(const SpinState& state);

/// j(j+1) - |<J>|^2
double total_variance(const SpinState& state);

/// Checks that <(J.n)^k> does not vary over `n_dirs` random directions, for
/// every k = 1..t. Requires 1 <= t < 2j and n_dirs >= 20.
bool is_t_anticoherent_by_definition(const SpinState& state, int t, int n_dirs, double tol,
                                     std::uint64_t seed = 0x5eed);

/// Spread (max - min) of <(J.n)^k> over the given directions, for k = 1..t.
std::vector<double> moment_spreads(const SpinState& state, int t,
                                   std::span<const Direction> dirs);

}  // namespace anticoh
