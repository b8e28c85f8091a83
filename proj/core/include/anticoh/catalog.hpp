#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anticoh/measures.hpp"
#include "anticoh/spin.hpp"

namespace anticoh::catalog {

/// (|j,-j> + |j,j>) / sqrt(2)
SpinState cat(SpinQuantumNumber j);
/// |j, m>, m = two_m / 2
SpinState dicke(SpinQuantumNumber j, int two_m);
/// Spin-2 state with tetrahedral Majorana points.
SpinState tetrahedron();
/// (|2,-2> + mu |2,0> + |2,2>) / sqrt(2 + |mu|^2)
SpinState mu_state(Complex mu);
/// Spin-1 state whose two Majorana points subtend angle theta in [0, pi].
SpinState spin1(double theta);
/// Spin-5/2 state for which the HS and trace measures increase from t=1 to t=2.
SpinState psi52_counterexample();
/// Spin-5/2 state maximizing the purity, HS and Bures measures at t = 2.
SpinState qq52();
/// Spin-3 state with octahedral Majorana points.
SpinState octahedron();
/// Spin-6 family (sqrt7 |6,-5> + sqrt11 e^{i theta} |6,0> + sqrt7 |6,5>) / 5,
/// theta in [0, pi/2]; theta = pi/2 is the icosahedral member.
SpinState icosa(double theta);
/// 1-anticoherent state with the most degenerate Majorana point: |j,0> for
/// integer j, (sqrt(2j)|j,-1/2> + |j,j>)/sqrt(2j+1) for half-integer j >= 3/2.
SpinState t1_max_degenerate(SpinQuantumNumber j);
/// 2-anticoherent state at j_g = (1 + 3g)/2 with a g-fold degenerate point.
SpinState t2_family(int g);
SpinQuantumNumber t2_family_spin(int g);
/// Symmetric image of N(|down>^{2j} + |eps>^{2j}), eps in [0, pi/2].
/// Coefficients are assembled in log space so j = 1000 is fine.
SpinState ghz(SpinQuantumNumber j, double epsilon);

enum class AppendixId { A1, A2, A3 };
/// Numerically found anticoherent states with degenerate Majorana points:
/// A1: j=11/2, t=3, g=2;  A2: j=8, t=3, g=3;  A3: j=8, t=4, g=2.
SpinState appendix_state(AppendixId id);
int appendix_order(AppendixId id);
std::optional<AppendixId> parse_appendix_id(const std::string& text);

/// Membership in the domain of mutually rotation-inequivalent mu values.
bool mu_in_domain(Complex mu);

/// Closed-form eigenvalues of rho_2 for mu_state(mu), in the order
/// {2|mu|^2 / (3(2+|mu|^2)), minus branch, plus branch}.
std::array<double, 3> mu_spectrum(Complex mu);

// ---------------------------------------------------------------------------
// Registry of named states with their published or closed-form properties.

struct ExpectedProperty {
  int t = 1;
  MeasureKind kind = MeasureKind::Purity;
  double value = 0.0;
  double tolerance = 1e-12;
  std::string source;
};

struct NamedState {
  std::string name;
  std::string parameters;
  SpinState state;
  std::vector<ExpectedProperty> expected;
};

/// Every catalog entry with concrete parameters and its property table.
std::vector<NamedState> named_states();

/// Parameters accepted by make_state(); unused ones are ignored.
struct StateParameters {
  std::optional<SpinQuantumNumber> j;
  std::optional<int> two_m;
  std::optional<Complex> mu;
  std::optional<double> theta;
  std::optional<double> epsilon;
  std::optional<int> g;
  std::optional<std::string> id;
  std::optional<std::uint64_t> seed;
};

/// Names understood by make_state().
std::vector<std::string> state_names();

/// Builds a catalog state by name. Throws std::invalid_argument for unknown
/// names or missing/out-of-range parameters.
SpinState make_state(const std::string& name, const StateParameters& params);

}  // namespace anticoh::catalog
