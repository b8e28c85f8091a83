#include "anticoh/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace anticoh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients below this magnitude count as exact zeros when deciding the
// polynomial degree.
constexpr double kVanishingCoefficient = 1e-13;

double wrap_phi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

// Horner evaluation of sum_k a[k] z^k and its derivative.
std::pair<Complex, Complex> evaluate(const std::vector<Complex>& a, Complex z) {
  Complex p = 0.0;
  Complex dp = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& a) {
  const int degree = static_cast<int>(a.size()) - 1;
  if (degree < 1) return {};
  if (degree == 1) return {-a[0] / a[1]};
  ComplexMatrix companion = ComplexMatrix::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -a[i] / a[degree];
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("state_to_points: companion eigenvalue solver failed");
  }
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + degree);
  for (auto& z : roots) {
    const auto [p, dp] = evaluate(a, z);
    if (std::abs(dp) == 0.0) continue;
    const Complex polished = z - p / dp;
    if (std::abs(evaluate(a, polished).first) < std::abs(p)) z = polished;
  }
  return roots;
}

// A root z of the Majorana polynomial corresponds to the spin-1/2 state
// alpha|up> + beta|down> with z = -alpha / beta.
BlochPoint point_from_root(Complex z) {
  const double r = std::abs(z);
  const double theta = 2.0 * std::atan2(1.0, r);
  const double phi = std::arg(-std::conj(z));
  return {theta, phi};
}

}  // namespace

BlochPoint::BlochPoint(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("Bloch point angles must be finite");
  }
  if (theta < -1e-12 || theta > kPi + 1e-12) {
    throw std::invalid_argument("Bloch point theta must lie in [0, pi]");
  }
  theta_ = std::clamp(theta, 0.0, kPi);
  phi_ = (theta_ == 0.0 || theta_ == kPi) ? 0.0 : wrap_phi(phi);
}

BlochPoint BlochPoint::south() { return {kPi, 0.0}; }

BlochPoint BlochPoint::from_vector(const Vector3& v) {
  const double rho = std::hypot(v.x(), v.y());
  if (rho == 0.0 && v.z() == 0.0) {
    throw std::invalid_argument("cannot place the zero vector on the sphere");
  }
  const double theta = std::atan2(rho, v.z());
  const double phi = rho == 0.0 ? 0.0 : std::atan2(v.y(), v.x());
  return {theta, phi};
}

Vector3 BlochPoint::to_vector() const {
  const double s = std::sin(theta_);
  return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

double great_circle_distance(const BlochPoint& a, const BlochPoint& b) {
  const Vector3 u = a.to_vector();
  const Vector3 v = b.to_vector();
  // atan2 form is accurate for nearly coincident and nearly antipodal points.
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

PointConfiguration::PointConfiguration(SpinQuantumNumber j, std::vector<BlochPoint> points)
    : j_(j), points_(std::move(points)) {
  if (j_.two_j() < 1) {
    throw std::invalid_argument("point configurations need j >= 1/2");
  }
  if (static_cast<int>(points_.size()) != j_.two_j()) {
    throw std::invalid_argument("a spin-" + j_.to_string() + " configuration needs exactly " +
                                std::to_string(j_.two_j()) + " points, got " +
                                std::to_string(points_.size()));
  }
}

PointConfiguration PointConfiguration::rotated(const Direction& axis, double angle) const {
  const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, axis.vector()).toRotationMatrix();
  std::vector<BlochPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(BlochPoint::from_vector(r * p.to_vector()));
  return {j_, std::move(out)};
}

bool PointConfiguration::equivalent_to(const PointConfiguration& other, double tol) const {
  if (other.j_ != j_) return false;
  std::vector<bool> used(other.points_.size(), false);
  for (const auto& p : points_) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = used.size();
    for (std::size_t i = 0; i < other.points_.size(); ++i) {
      if (used[i]) continue;
      const double d = great_circle_distance(p, other.points_[i]);
      if (d < best) {
        best = d;
        best_index = i;
      }
    }
    if (best_index == used.size() || best >= tol) return false;
    used[best_index] = true;
  }
  return true;
}

SpinState points_to_state(const PointConfiguration& config) {
  const int n = config.spin().two_j();
  // Coefficients of prod_a (alpha_a + beta_a z), lowest order first.
  std::vector<Complex> poly{1.0};
  poly.reserve(n + 1);
  for (const auto& p : config.points()) {
    const Complex alpha = std::cos(0.5 * p.theta());
    const Complex beta = std::polar(std::sin(0.5 * p.theta()), p.phi());
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) {
      poly[k] = alpha * poly[k] + beta * poly[k - 1];
    }
    poly[0] *= alpha;
  }
  // z^k collects k down spins, i.e. the Dicke state of |j, j-k>.
  ComplexVector c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c(n - k) = poly[k] / std::sqrt(binomial(n, k));
  }
  return {config.spin(), std::move(c)};
}

PointConfiguration state_to_points(const SpinState& state) {
  const int n = state.two_j();
  const ComplexVector& c = state.coefficients();
  if (!(c.norm() > 0.0)) {
    throw std::invalid_argument("state_to_points: zero state");
  }
  std::vector<Complex> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = std::sqrt(binomial(n, k)) * c(n - k);

  const double scale = c.cwiseAbs().maxCoeff();
  auto vanishes = [&](int k) { return std::abs(c(n - k)) < kVanishingCoefficient * scale; };

  int top = n;
  while (top > 0 && vanishes(top)) --top;
  int bottom = 0;
  while (bottom < top && vanishes(bottom)) ++bottom;

  std::vector<BlochPoint> points;
  points.reserve(n);
  // Degree deficiency: roots at infinity, beta = 0.
  for (int i = 0; i < n - top; ++i) points.push_back(BlochPoint::north());
  // Zero roots: alpha = 0.
  for (int i = 0; i < bottom; ++i) points.push_back(BlochPoint::south());

  const std::vector<Complex> reduced(a.begin() + bottom, a.begin() + top + 1);
  for (const Complex z : polynomial_roots(reduced)) points.push_back(point_from_root(z));
  return {state.spin(), std::move(points)};
}

std::vector<PointCluster> cluster_points(const PointConfiguration& config, double tol) {
  const auto& pts = config.points();
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (great_circle_distance(pts[i], pts[k]) < tol) parent[find(i)] = find(k);
    }
  }
  std::vector<PointCluster> clusters;
  std::vector<Vector3> sums;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      sums.push_back(pts[i].to_vector());
      clusters.push_back({pts[i], 1});
    } else {
      const auto idx = static_cast<std::size_t>(it - roots.begin());
      sums[idx] += pts[i].to_vector();
      clusters[idx].multiplicity += 1;
    }
  }
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].multiplicity > 1 && sums[i].norm() > 0.0) {
      clusters[i].point = BlochPoint::from_vector(sums[i]);
    }
  }
  return clusters;
}

std::vector<int> degeneracy_profile(const PointConfiguration& config, double tol) {
  std::vector<int> profile;
  for (const auto& cluster : cluster_points(config, tol)) profile.push_back(cluster.multiplicity);
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace anticoh
