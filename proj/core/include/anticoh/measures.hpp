#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anticoh/spin.hpp"

namespace anticoh {

enum class MeasureKind { Variance, Purity, HilbertSchmidt, Trace, Bures };

inline constexpr std::array<MeasureKind, 5> kAllMeasureKinds = {
    MeasureKind::Variance, MeasureKind::Purity, MeasureKind::HilbertSchmidt,
    MeasureKind::Trace, MeasureKind::Bures};

/// The kinds defined at every order t.
inline constexpr std::array<MeasureKind, 4> kOrderMeasureKinds = {
    MeasureKind::Purity, MeasureKind::HilbertSchmidt, MeasureKind::Trace, MeasureKind::Bures};

/// "variance", "purity", "hs", "trace", "bures".
std::string_view to_string(MeasureKind kind);
/// Accepts the names above plus a few aliases ("R", "HS", "tr", ...).
std::optional<MeasureKind> parse_measure_kind(std::string_view text);

/// (V - j) / j^2, with V the total variance. Needs j >= 1.
double a1_variance(const SpinState& state);

/// Rescaled linear entropy (t+1)/t (1 - tr rho_t^2).
double a_purity(const SpinState& state, int t);

/// Hilbert-Schmidt, trace or Bures measure of a reduced state with the given
/// eigenvalues (t = spectrum.size() - 1). The eigenvalues are taken to sum
/// to 1.
double a_distance_from_spectrum(std::span<const double> spectrum, MeasureKind kind);

double a_distance(const SpinState& state, int t, MeasureKind kind);

/// Any kind; Variance is only defined at t = 1.
double measure(const SpinState& state, int t, MeasureKind kind);

/// Order-2 analogue of the total variance, together with the constants that
/// map it onto A_2^R = (W + alpha) / beta. Needs j > 1.
struct WQuantity {
  double w = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};
WQuantity w_quantity(const SpinState& state);
double w_alpha(SpinQuantumNumber j);
double w_beta(SpinQuantumNumber j);

struct OrderMeasures {
  int t = 0;
  std::optional<double> variance;  // t = 1 only
  double purity = 0.0;
  double hilbert_schmidt = 0.0;
  double trace = 0.0;
  double bures = 0.0;

  double get(MeasureKind kind) const;
};

/// Every measure at every order t = 1..2j-1.
struct MeasureProfile {
  SpinQuantumNumber spin;
  std::vector<OrderMeasures> orders;

  const OrderMeasures& at(int t) const;
};

MeasureProfile measure_profile(const SpinState& state);

}  // namespace anticoh
