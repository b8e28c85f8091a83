#include "anticoh/thomson.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "parallel.hpp"

namespace anticoh {

namespace {

constexpr int kNonmonotoneMemory = 10;
constexpr int kMaxBacktracks = 60;
constexpr double kArmijo = 1e-4;
// Energy differences below this relative size are treated as roundoff.
constexpr double kRoundoffEnergy = 1e-13;

using Points = std::vector<Vector3>;

double energy_and_gradient(const Points& x, Points& grad) {
  const std::size_t n = x.size();
  grad.assign(n, Vector3::Zero());
  double energy = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector3 d = x[a] - x[b];
      const double inv = 1.0 / d.norm();
      energy += inv;
      const Vector3 f = d * (inv * inv * inv);
      grad[a] -= f;
      grad[b] += f;
    }
  }
  return energy;
}

void project_tangent(const Points& x, Points& grad) {
  for (std::size_t a = 0; a < x.size(); ++a) grad[a] -= grad[a].dot(x[a]) * x[a];
}

double squared_norm(const Points& v) {
  double s = 0.0;
  for (const auto& p : v) s += p.squaredNorm();
  return s;
}

struct RestartOutcome {
  Points x;
  double energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

RestartOutcome descend(Points x, const ThomsonOptions& options) {
  Points g, g_trial, x_trial(x.size());
  double energy = energy_and_gradient(x, g);
  project_tangent(x, g);
  double gg = squared_norm(g);
  double max_component = 0.0;
  for (const auto& v : g) max_component = std::max(max_component, v.norm());
  double step = max_component > 0.0 ? 0.1 / max_component : 1.0;
  std::deque<double> recent{energy};

  RestartOutcome out;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (std::sqrt(gg) < options.gradient_tolerance) break;
    const double reference = *std::max_element(recent.begin(), recent.end());
    double trial_energy = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t a = 0; a < x.size(); ++a) x_trial[a] = (x[a] - step * g[a]).normalized();
      trial_energy = energy_and_gradient(x_trial, g_trial);
      if (trial_energy <= reference - kArmijo * step * gg ||
          std::abs(trial_energy - energy) <= kRoundoffEnergy * std::abs(energy)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    project_tangent(x_trial, g_trial);

    // Barzilai-Borwein step from the displacement and gradient change.
    double ss = 0.0, sy = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      const Vector3 s = x_trial[a] - x[a];
      ss += s.squaredNorm();
      sy += s.dot(g_trial[a] - g[a]);
    }
    step = sy > 0.0 ? std::clamp(ss / sy, 1e-12, 1e6) : 2.0 * step;

    x.swap(x_trial);
    g.swap(g_trial);
    energy = trial_energy;
    gg = squared_norm(g);
    recent.push_back(energy);
    if (static_cast<int>(recent.size()) > kNonmonotoneMemory) recent.pop_front();
  }
  out.gradient_norm = std::sqrt(gg);
  out.converged = out.gradient_norm < options.gradient_tolerance;
  out.energy = energy;
  out.iterations = it;
  out.x = std::move(x);
  return out;
}

Points random_start(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Points x(n);
  for (auto& p : x) {
    do {
      p = Vector3(normal(rng), normal(rng), normal(rng));
    } while (p.norm() < 1e-8);
    p.normalize();
  }
  return x;
}

}  // namespace

double coulomb_energy(std::span<const Vector3> positions) {
  double energy = 0.0;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      energy += 1.0 / (positions[a] - positions[b]).norm();
    }
  }
  return energy;
}

ThomsonResult solve_thomson(int n, const ThomsonOptions& options) {
  if (n < 2) throw std::invalid_argument("Thomson problem needs at least two charges");
  if (options.restarts < 1) throw std::invalid_argument("Thomson solver needs restarts >= 1");

  std::vector<RestartOutcome> outcomes(options.restarts);
  detail::parallel_for(options.restarts, options.threads, [&](int r) {
    outcomes[r] = descend(random_start(n, mix_seed(options.seed, r)), options);
  });

  int best = -1;
  for (int r = 0; r < options.restarts; ++r) {
    const auto& o = outcomes[r];
    if (best < 0) {
      best = r;
      continue;
    }
    const auto& b = outcomes[best];
    // Converged restarts outrank unconverged ones; then energy, then index.
    if (o.converged != b.converged) {
      if (o.converged) best = r;
    } else if (o.energy < b.energy) {
      best = r;
    }
  }

  ThomsonResult result;
  for (const auto& o : outcomes) result.restart_energies.push_back(o.energy);
  auto& b = outcomes[best];
  result.positions = std::move(b.x);
  result.energy = b.energy;
  result.gradient_norm = b.gradient_norm;
  result.iterations = b.iterations;
  result.converged = b.converged;
  result.restart_index = best;
  return result;
}

SpinState coulomb_state(SpinQuantumNumber j, const ThomsonOptions& options) {
  if (j.two_j() < 2 || j.two_j() > 100) {
    throw std::invalid_argument("coulomb_state requires 2 <= 2j <= 100");
  }
  const ThomsonResult result = solve_thomson(j.two_j(), options);
  if (!result.converged) {
    throw ConvergenceError("Thomson solver did not reach gradient norm " +
                           std::to_string(options.gradient_tolerance) + " (best " +
                           std::to_string(result.gradient_norm) + ")");
  }
  std::vector<BlochPoint> points;
  points.reserve(result.positions.size());
  for (const auto& p : result.positions) points.push_back(BlochPoint::from_vector(p));
  return points_to_state(PointConfiguration(j, std::move(points)));
}

SpinState coulomb_state(SpinQuantumNumber j, std::uint64_t seed, int threads) {
  ThomsonOptions options;
  options.seed = seed;
  options.threads = threads;
  return coulomb_state(j, options);
}

}  // namespace anticoh
