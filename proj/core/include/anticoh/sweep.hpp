#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anticoh/spin.hpp"

namespace anticoh {

enum class SweepKind { Spin1Theta, MuGrid, GhzEpsilon, ProfileT };

std::string_view to_string(SweepKind kind);
/// "spin1-theta", "mu-grid", "ghz-epsilon", "profile-t"
std::optional<SweepKind> parse_sweep_kind(std::string_view text);

/// count equally spaced values from start to stop inclusive.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  /// Throws std::invalid_argument unless count >= 1, the bounds are finite
  /// and start < stop when count > 1.
  std::vector<double> values() const;
};

struct SweepSpec {
  SweepKind kind = SweepKind::Spin1Theta;
  /// spin1-theta
  Grid theta{0.0, 3.141592653589793, 181};
  /// mu-grid; points outside the inequivalence domain are skipped.
  Grid mu_re{0.0, 2.449489742783178, 61};
  Grid mu_im{0.0, 1.632993161855452, 41};
  /// ghz-epsilon
  Grid epsilon{0.0, 1.5707963267948966, 91};
  int two_j = 4;
  std::vector<int> orders{1};
  /// profile-t
  std::optional<SpinState> state;
  /// Empty means stdout.
  std::string output;
};

/// Reads a JSON spec such as
///   {"kind": "ghz-epsilon", "j": "1000", "t": [1],
///    "epsilon": {"start": 0, "stop": 1.5707963267948966, "count": 91},
///    "output": "ghz.csv"}
/// A profile-t spec names its state with "state": {"name": ..., params} or
/// "state_file": path. Throws std::invalid_argument or IoError.
SweepSpec parse_sweep_spec(const std::string& json_text);

/// CSV text (header plus rows) for the spec.
std::string run_sweep(const SweepSpec& spec);

}  // namespace anticoh
