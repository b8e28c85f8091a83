#pragma once

#include <vector>

#include "anticoh/spin.hpp"

namespace anticoh {

/// Point on the Bloch sphere. theta in [0, pi], phi in [0, 2 pi); the poles
/// are stored as (0, 0) and (pi, 0).
///
/// The spin-1/2 state attached to a point is
///   cos(theta/2) |up> + sin(theta/2) e^{i phi} |down>,
/// so the point coincides with the Bloch vector of that state.
class BlochPoint {
 public:
  BlochPoint() = default;
  BlochPoint(double theta, double phi);

  static BlochPoint north() { return {0.0, 0.0}; }
  static BlochPoint south();
  static BlochPoint from_vector(const Vector3& v);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  Vector3 to_vector() const;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

double great_circle_distance(const BlochPoint& a, const BlochPoint& b);

/// Multiset of 2j Majorana points; repetition encodes degeneracy.
class PointConfiguration {
 public:
  PointConfiguration(SpinQuantumNumber j, std::vector<BlochPoint> points);

  SpinQuantumNumber spin() const noexcept { return j_; }
  const std::vector<BlochPoint>& points() const noexcept { return points_; }

  /// Rigid rotation of every point by `angle` about `axis` (right-handed).
  PointConfiguration rotated(const Direction& axis, double angle) const;

  /// Order-insensitive comparison: every point matched one-to-one within
  /// great-circle distance `tol`.
  bool equivalent_to(const PointConfiguration& other, double tol) const;

 private:
  SpinQuantumNumber j_;
  std::vector<BlochPoint> points_;
};

struct PointCluster {
  BlochPoint point;
  int multiplicity = 0;
};

constexpr double kDefaultDegeneracyTolerance = 1e-6;

/// Symmetrized product of the 2j spin-1/2 states, read back in the |j,m>
/// basis. Pole points reduce the polynomial degree (north) or its order at
/// zero (south).
SpinState points_to_state(const PointConfiguration& config);

/// Inverse of points_to_state up to a global phase. Roots are taken from the
/// companion matrix of the Majorana polynomial and polished with a Newton
/// step; vanishing leading coefficients put points on the north pole and
/// vanishing trailing coefficients put points on the south pole.
PointConfiguration state_to_points(const SpinState& state);

/// Points grouped by single-linkage clustering at great-circle distance tol.
std::vector<PointCluster> cluster_points(const PointConfiguration& config,
                                         double tol = kDefaultDegeneracyTolerance);

/// Cluster multiplicities in ascending order; they sum to 2j.
std::vector<int> degeneracy_profile(const PointConfiguration& config,
                                    double tol = kDefaultDegeneracyTolerance);

}  // namespace anticoh
