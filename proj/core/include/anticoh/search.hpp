#pragma once

#include <cstdint>
#include <vector>

#include "anticoh/measures.hpp"
#include "anticoh/spin.hpp"

namespace anticoh {

struct SearchOptions {
  MeasureKind objective = MeasureKind::Purity;
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_iterations = 3000;
  /// Scale-free gradient norm |x| |grad f| below which a restart stagnates.
  double gradient_tolerance = 1e-9;
  double success_threshold = 1e-10;
  int threads = 1;
};

/// Maximize A_t^objective over spin-j states whose g lowest-m coefficients
/// (m = -j .. -j+g-1) vanish.
struct SearchProblem {
  SpinQuantumNumber spin;
  int t = 1;
  int g = 0;
  SearchOptions options;
};

struct SearchResult {
  SpinState best_state;
  double best_value = 0.0;
  bool converged = false;
  /// Iterations used by the winning restart.
  int iterations = 0;
  int restart_index = 0;
  std::vector<double> restart_values;
  /// True when every restart ended on a small gradient or a failed line
  /// search rather than on the iteration cap.
  bool all_stagnated = false;
};

/// Throws std::invalid_argument for an invalid problem. Results depend only
/// on the problem and seed, not on the thread count.
SearchResult search_anticoherent(const SearchProblem& problem);

/// Unconstrained (g = 0) maximization of one measure. Variance is rejected.
SearchResult maximize_measure(SpinQuantumNumber j, int t, MeasureKind kind, int restarts,
                              std::uint64_t seed, int threads = 1);

/// Value and gradient of 1 - A_t^R at unnormalized coefficients x, written
/// as (d/dRe x_i, d/dIm x_i) pairs. Exposed for testing.
double purity_deficit_with_gradient(SpinQuantumNumber j, int t, const ComplexVector& x,
                                    std::vector<double>* gradient);

struct GmaxEntry {
  int two_j = 0;
  int t = 0;
  /// Largest g with a converged search, 0 when none converged.
  int g_max = 0;
  /// Best value at g_max (at g = 0 when nothing converged).
  double best_value = 0.0;
  bool converged = false;
  /// Set when a failed g had every restart stagnate.
  bool failure_stagnated = false;
};

/// Rows for 2j = 2 .. two_j_max and t = 1 .. min(t_max, 2j - 1), in that
/// order. For each cell g runs upward from 0 until the first failure.
std::vector<GmaxEntry> gmax_table(int two_j_max, int t_max, const SearchOptions& options);

}  // namespace anticoh
