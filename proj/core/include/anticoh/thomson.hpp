#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "anticoh/majorana.hpp"

namespace anticoh {

struct ThomsonOptions {
  int restarts = 32;
  int max_iterations = 20000;
  double gradient_tolerance = 1e-8;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ThomsonResult {
  std::vector<Vector3> positions;
  double energy = 0.0;
  /// Norm of the tangential energy gradient at the returned positions.
  double gradient_norm = 0.0;
  int restart_index = 0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> restart_energies;
};

/// sum_{a<b} 1 / |r_a - r_b|
double coulomb_energy(std::span<const Vector3> positions);

/// Multi-start projected gradient descent for n unit charges on the sphere.
/// Restart r draws its start from mix_seed(seed, r); the lowest-energy
/// converged restart wins, ties going to the lower index. Never throws on
/// non-convergence; check `converged`.
ThomsonResult solve_thomson(int n, const ThomsonOptions& options = {});

/// State whose Majorana points form a Thomson configuration of 2j charges.
/// Requires 2 <= 2j <= 100. Throws ConvergenceError if no restart reaches
/// the gradient tolerance.
SpinState coulomb_state(SpinQuantumNumber j, std::uint64_t seed = 0, int threads = 1);
SpinState coulomb_state(SpinQuantumNumber j, const ThomsonOptions& options);

}  // namespace anticoh
