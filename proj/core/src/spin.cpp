#include "anticoh/spin.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>

namespace anticoh {

namespace {

constexpr double kNormTolerance = 1e-12;

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

void require_same_spin(const SpinState& a, const SpinState& b) {
  if (a.two_j() != b.two_j()) {
    throw std::invalid_argument("spin states have different j");
  }
}

}  // namespace

SpinQuantumNumber::SpinQuantumNumber(int two_j) : two_j_(two_j) {
  if (two_j < 0) {
    throw std::invalid_argument("spin quantum number must be non-negative");
  }
}

SpinQuantumNumber SpinQuantumNumber::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const int num = parse_int(std::string_view(text).substr(0, slash));
    const int den = parse_int(std::string_view(text).substr(slash + 1));
    if (den == 1) return SpinQuantumNumber(2 * num);
    if (den == 2) return SpinQuantumNumber(num);
    throw std::invalid_argument("spin must be an integer or half-integer: '" + text + "'");
  }
  if (text.find('.') != std::string::npos) {
    const double j = std::stod(text);
    const double twice = 2.0 * j;
    if (std::abs(twice - std::round(twice)) > 1e-12) {
      throw std::invalid_argument("spin must be an integer or half-integer: '" + text + "'");
    }
    return SpinQuantumNumber(static_cast<int>(std::lround(twice)));
  }
  return SpinQuantumNumber(2 * parse_int(text));
}

std::string SpinQuantumNumber::to_string() const {
  if (is_integer()) return std::to_string(two_j_ / 2);
  return std::to_string(two_j_) + "/2";
}

Direction::Direction(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("direction must be a finite non-zero vector");
  }
  n_ = Vector3(x / norm, y / norm, z / norm);
}

Direction Direction::from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::vector<Direction> random_directions(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Direction> dirs;
  dirs.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(dirs.size()) < count) {
    const double x = gauss(rng);
    const double y = gauss(rng);
    const double z = gauss(rng);
    if (x * x + y * y + z * z < 1e-20) continue;
    dirs.emplace_back(x, y, z);
  }
  return dirs;
}

SpinState::SpinState(SpinQuantumNumber j, ComplexVector coefficients)
    : j_(j), c_(std::move(coefficients)) {
  if (j_.two_j() < 1) {
    throw std::invalid_argument("spin states require j >= 1/2");
  }
  if (c_.size() != j_.dimension()) {
    throw std::invalid_argument("coefficient vector length " + std::to_string(c_.size()) +
                                " does not match 2j+1 = " + std::to_string(j_.dimension()));
  }
  if (!c_.allFinite()) {
    throw std::invalid_argument("coefficient vector contains non-finite values");
  }
  const double norm = c_.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("zero state vector cannot be normalized");
  }
  if (std::abs(norm - 1.0) > kNormTolerance) {
    c_ /= norm;
  }
}

SpinState SpinState::basis(SpinQuantumNumber j, int two_m) {
  if (std::abs(two_m) > j.two_j() || (j.two_j() - two_m) % 2 != 0) {
    throw std::out_of_range("m = " + std::to_string(two_m) + "/2 is not valid for j = " +
                            j.to_string());
  }
  ComplexVector c = ComplexVector::Zero(j.dimension());
  c((two_m + j.two_j()) / 2) = 1.0;
  return {j, std::move(c)};
}

Complex SpinState::coefficient(int two_m) const {
  if (std::abs(two_m) > two_j() || (two_j() - two_m) % 2 != 0) {
    throw std::out_of_range("invalid m for this spin");
  }
  return c_((two_m + two_j()) / 2);
}

Complex SpinState::inner(const SpinState& other) const {
  require_same_spin(*this, other);
  return c_.dot(other.c_);  // conjugates the left operand
}

double SpinState::fidelity(const SpinState& other) const { return std::abs(inner(other)); }

SpinState SpinState::with_global_phase(double alpha) const {
  return {j_, c_ * std::polar(1.0, alpha)};
}

ComplexMatrix SpinOperators::along(const Direction& n) const {
  return n.x() * jx + n.y() * jy + n.z() * jz;
}

SpinOperators build_spin_operators(SpinQuantumNumber j) {
  if (j.two_j() < 1) {
    throw std::invalid_argument("spin operators require j >= 1/2");
  }
  const int dim = j.dimension();
  const double jv = j.value();
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix jz = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = -jv + i;
    jz(i, i) = m;
    if (i + 1 < dim) {
      // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>
      raise(i + 1, i) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
    }
  }
  const ComplexMatrix lower = raise.adjoint();
  const Complex half_i(0.0, 0.5);
  SpinOperators ops;
  ops.jx = 0.5 * (raise + lower);
  ops.jy = -half_i * (raise - lower);
  ops.jz = std::move(jz);
  ops.j0 = ComplexMatrix::Identity(dim, dim);
  return ops;
}

ComplexMatrix rotation_matrix(SpinQuantumNumber j, const Direction& axis, double angle) {
  const ComplexMatrix generator = build_spin_operators(j).along(axis);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("rotation_matrix: eigendecomposition failed");
  }
  const ComplexMatrix& v = solver.eigenvectors();
  ComplexVector phases(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    phases(k) = std::polar(1.0, -angle * solver.eigenvalues()(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

SpinState rotate(const SpinState& state, const Direction& axis, double angle) {
  return {state.spin(), rotation_matrix(state.spin(), axis, angle) * state.coefficients()};
}

Complex product_moment(const SpinState& state, std::span<const Direction> dirs) {
  if (dirs.empty()) {
    throw std::invalid_argument("product_moment needs at least one direction");
  }
  const SpinOperators ops = build_spin_operators(state.spin());
  ComplexVector v = state.coefficients();
  for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) {
    v = ops.along(*it) * v;
  }
  return state.coefficients().dot(v);
}

Vector3 spin_expectation(const SpinState& state) {
  const SpinOperators ops = build_spin_operators(state.spin());
  const ComplexVector& c = state.coefficients();
  return {c.dot(ops.jx * c).real(), c.dot(ops.jy * c).real(), c.dot(ops.jz * c).real()};
}

double total_variance(const SpinState& state) {
  const double j = state.spin().value();
  return j * (j + 1.0) - spin_expectation(state).squaredNorm();
}

std::vector<double> moment_spreads(const SpinState& state, int t,
                                   std::span<const Direction> dirs) {
  const SpinOperators ops = build_spin_operators(state.spin());
  const ComplexVector& c = state.coefficients();
  std::vector<double> lo(t, std::numeric_limits<double>::infinity());
  std::vector<double> hi(t, -std::numeric_limits<double>::infinity());
  for (const auto& n : dirs) {
    const ComplexMatrix a = ops.along(n);
    ComplexVector v = c;
    for (int k = 0; k < t; ++k) {
      v = a * v;
      const double moment = c.dot(v).real();
      lo[k] = std::min(lo[k], moment);
      hi[k] = std::max(hi[k], moment);
    }
  }
  std::vector<double> spread(t);
  for (int k = 0; k < t; ++k) spread[k] = hi[k] - lo[k];
  return spread;
}

bool is_t_anticoherent_by_definition(const SpinState& state, int t, int n_dirs, double tol,
                                     std::uint64_t seed) {
  if (t < 1 || t >= state.two_j()) {
    throw std::invalid_argument("anticoherence order must satisfy 1 <= t < 2j");
  }
  if (n_dirs < 20) {
    throw std::invalid_argument("at least 20 directions are required");
  }
  const auto dirs = random_directions(n_dirs, seed);
  const auto spreads = moment_spreads(state, t, dirs);
  return std::all_of(spreads.begin(), spreads.end(), [tol](double s) { return s < tol; });
}

}  // namespace anticoh
