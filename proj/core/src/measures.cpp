#include "anticoh/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "anticoh/reductions.hpp"

namespace anticoh {

namespace {

void require_order(const SpinState& state, int t) {
  if (t < 1 || t >= state.two_j()) {
    throw std::invalid_argument("order t = " + std::to_string(t) +
                                " outside 1 <= t < 2j = " + std::to_string(state.two_j()));
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// Distances from the Schmidt values sigma_i = sqrt(lambda_i).
double distance_from_schmidt(std::span<const double> sigma, MeasureKind kind) {
  const double d = static_cast<double>(sigma.size());  // t + 1
  const double t = d - 1.0;
  const double mixed = 1.0 / d;
  switch (kind) {
    case MeasureKind::HilbertSchmidt: {
      double s = 0.0;
      for (double v : sigma) s += (v * v - mixed) * (v * v - mixed);
      return clamp_unit(1.0 - std::sqrt(d / t * s));
    }
    case MeasureKind::Trace: {
      double s = 0.0;
      for (double v : sigma) s += std::abs(v * v - mixed);
      return clamp_unit(1.0 - d / (2.0 * t) * s);
    }
    case MeasureKind::Bures: {
      // sqrt(d) - sum_i sigma_i rewritten with sum_i delta_i = 0 as a sum of
      // squares, which stays accurate next to the mixed state.
      const double a = 1.0 / std::sqrt(d);
      double s = 0.0;
      for (double v : sigma) {
        const double delta = v * v - mixed;
        s += delta * delta / ((a + v) * (a + v));
      }
      s /= 2.0 * a;
      return clamp_unit(1.0 - std::sqrt(s / (std::sqrt(d) - 1.0)));
    }
    case MeasureKind::Purity: {
      double r = 0.0;
      for (double v : sigma) r += v * v * v * v;
      return d / t * (1.0 - r);
    }
    case MeasureKind::Variance: break;
  }
  throw std::invalid_argument("a_distance: kind must be hs, trace or bures");
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Variance: return "variance";
    case MeasureKind::Purity: return "purity";
    case MeasureKind::HilbertSchmidt: return "hs";
    case MeasureKind::Trace: return "trace";
    case MeasureKind::Bures: return "bures";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "variance" || lower == "v") return MeasureKind::Variance;
  if (lower == "purity" || lower == "r") return MeasureKind::Purity;
  if (lower == "hs" || lower == "hilbert-schmidt" || lower == "hilbertschmidt") {
    return MeasureKind::HilbertSchmidt;
  }
  if (lower == "trace" || lower == "tr") return MeasureKind::Trace;
  if (lower == "bures") return MeasureKind::Bures;
  return std::nullopt;
}

double a1_variance(const SpinState& state) {
  require_order(state, 1);
  const double j = state.spin().value();
  return (total_variance(state) - j) / (j * j);
}

double a_purity(const SpinState& state, int t) {
  require_order(state, t);
  return clamp_unit(1.0 - anticoherence_deficit(state, t));
}

double a_distance_from_spectrum(std::span<const double> spectrum, MeasureKind kind) {
  if (spectrum.size() < 2) {
    throw std::invalid_argument("spectrum must have at least two eigenvalues");
  }
  std::vector<double> sigma(spectrum.size());
  std::transform(spectrum.begin(), spectrum.end(), sigma.begin(),
                 [](double l) { return std::sqrt(std::max(l, 0.0)); });
  return distance_from_schmidt(sigma, kind);
}

double a_distance(const SpinState& state, int t, MeasureKind kind) {
  if (kind != MeasureKind::HilbertSchmidt && kind != MeasureKind::Trace &&
      kind != MeasureKind::Bures) {
    throw std::invalid_argument("a_distance: kind must be hs, trace or bures");
  }
  require_order(state, t);
  return distance_from_schmidt(schmidt_values(state, t), kind);
}

double measure(const SpinState& state, int t, MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Variance:
      if (t != 1) throw std::invalid_argument("the variance measure is defined for t = 1 only");
      return a1_variance(state);
    case MeasureKind::Purity: return a_purity(state, t);
    default: return a_distance(state, t, kind);
  }
}

double w_alpha(SpinQuantumNumber j) {
  const double v = j.value();
  return v * (v * v - 2.0 * v + 3.0) / (2.0 * (v - 1.0));
}

double w_beta(SpinQuantumNumber j) {
  const double v = j.value();
  return (2.0 * v - 1.0) * (2.0 * v - 1.0) * v / (3.0 * (v - 1.0));
}

WQuantity w_quantity(const SpinState& state) {
  if (state.two_j() <= 2) {
    throw std::invalid_argument("the W quantity requires j > 1");
  }
  const double j = state.spin().value();
  const SpinOperators ops = build_spin_operators(state.spin());
  const ComplexVector& c = state.coefficients();
  const ComplexVector applied[3] = {ops.jx * c, ops.jy * c, ops.jz * c};
  // <J_a J_b> = <J_a psi | J_b psi> for Hermitian J_a.
  double correlators = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const Complex ab = applied[a].dot(applied[b]);
      const Complex ba = applied[b].dot(applied[a]);
      correlators += (ab * ba).real();
    }
  }
  WQuantity out;
  out.w = total_variance(state) - correlators / (2.0 * j * (j - 1.0));
  out.alpha = w_alpha(state.spin());
  out.beta = w_beta(state.spin());
  return out;
}

double OrderMeasures::get(MeasureKind kind) const {
  switch (kind) {
    case MeasureKind::Variance:
      if (!variance) throw std::invalid_argument("variance measure only exists at t = 1");
      return *variance;
    case MeasureKind::Purity: return purity;
    case MeasureKind::HilbertSchmidt: return hilbert_schmidt;
    case MeasureKind::Trace: return trace;
    case MeasureKind::Bures: return bures;
  }
  throw std::invalid_argument("unknown measure kind");
}

const OrderMeasures& MeasureProfile::at(int t) const {
  if (t < 1 || t > static_cast<int>(orders.size())) {
    throw std::out_of_range("profile has no order t = " + std::to_string(t));
  }
  return orders[t - 1];
}

MeasureProfile measure_profile(const SpinState& state) {
  MeasureProfile profile{state.spin(), {}};
  for (int t = 1; t < state.two_j(); ++t) {
    const auto sigma = schmidt_values(state, t);
    OrderMeasures row;
    row.t = t;
    if (t == 1) row.variance = a1_variance(state);
    row.purity = a_purity(state, t);
    row.hilbert_schmidt = distance_from_schmidt(sigma, MeasureKind::HilbertSchmidt);
    row.trace = distance_from_schmidt(sigma, MeasureKind::Trace);
    row.bures = distance_from_schmidt(sigma, MeasureKind::Bures);
    profile.orders.push_back(row);
  }
  return profile;
}

}  // namespace anticoh
