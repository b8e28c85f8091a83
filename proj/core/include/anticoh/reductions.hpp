#pragma once

#include <memory>
#include <vector>

#include "anticoh/spin.hpp"

namespace anticoh {

/// Coefficients Gamma_k^{k1 k2} for a fixed (j, t); k in [0, 2j - t] and
/// k1, k2 in [0, t].
class GammaTable {
 public:
  GammaTable(SpinQuantumNumber j, int t);

  SpinQuantumNumber spin() const noexcept { return j_; }
  int order() const noexcept { return t_; }
  int k_count() const noexcept { return j_.two_j() - t_ + 1; }

  double operator()(int k, int k1, int k2) const noexcept {
    return values_[(static_cast<std::size_t>(k) * (t_ + 1) + k1) * (t_ + 1) + k2];
  }

 private:
  SpinQuantumNumber j_;
  int t_;
  std::vector<double> values_;
};

/// Single coefficient, evaluated directly. Throws std::out_of_range for
/// indices outside the table.
double gamma(SpinQuantumNumber j, int t, int k, int k1, int k2);

/// Shared, memoized table for (j, t). Safe to call concurrently.
std::shared_ptr<const GammaTable> gamma_table(SpinQuantumNumber j, int t);

/// t-qubit reduced density matrix of the symmetric Majorana image, written in
/// the Dicke basis |D_t^(k)>, k = number of down spins.
class ReducedDensity {
 public:
  /// Validates Hermiticity and unit trace to `tolerance`; throws
  /// NumericalError otherwise.
  ReducedDensity(int t, ComplexMatrix matrix, double tolerance = 1e-9);

  int order() const noexcept { return t_; }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

 private:
  int t_;
  ComplexMatrix rho_;
};

ReducedDensity reduced_density(const SpinState& state, int t);

/// Partial trace of the explicit 2^{2j}-dimensional symmetric state,
/// projected onto the t-qubit Dicke basis. Requires 2j <= 14.
ReducedDensity brute_force_reduced_density(const SpinState& state, int t);

constexpr int kBruteForceMaxTwoJ = 14;

/// Eigenvalues, descending. Values in [-1e-10, 0) are clamped to zero; more
/// negative ones raise NumericalError.
std::vector<double> spectrum(const ReducedDensity& rho);

/// (t+1) x (2j-t+1) matrix M with rho_t = M M^dagger: the Schmidt matrix of
/// the symmetric image split into t and 2j - t qubits.
ComplexMatrix schmidt_factor(const SpinState& state, int t);

/// Singular values of schmidt_factor(), descending. These are the square
/// roots of the spectrum of rho_t with absolute rather than relative-to-sqrt
/// accuracy, zero-padded to t + 1 entries.
std::vector<double> schmidt_values(const SpinState& state, int t);

/// tr(rho_t^2) straight from the |j,m> coefficients.
double purity_from_coefficients(const SpinState& state, int t);

/// (t+1)/t * sum_{k1,k2} |(rho_t)_{k1 k2} - delta_{k1 k2}/(t+1)|^2, i.e.
/// 1 - A_t^R accumulated as a sum of squares, without the cancellation in
/// 1 - purity near a maximally mixed reduction.
double anticoherence_deficit(const SpinState& state, int t);

/// Purity from spin expectation values; t = 1 for any j, t = 2 for j > 1.
double purity_via_spin_expectations(const SpinState& state, int t);

}  // namespace anticoh
