#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace anticoh {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vector3 = Eigen::Vector3d;

/// Raised when a numerical routine produces a result that violates a
/// mathematical invariant by more than roundoff (e.g. a density matrix
/// eigenvalue below the clamp threshold).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by iterative solvers that are required to converge.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Binomial coefficients with the convention C(q, l) = 0 outside 0 <= l <= q.
// Values are evaluated through a log-factorial table so that C(2000, 1000)
// and friends stay representable as ratios.
double log_factorial(int n);
double log_binomial(int q, int l);  // -inf when the coefficient is zero
double binomial(int q, int l);

/// Eigenvalues of a Hermitian matrix in descending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& matrix);

/// Largest |a_ij - conj(a_ji)|.
double hermiticity_defect(const ComplexMatrix& matrix);

/// SplitMix64 step; used to derive independent per-restart seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace anticoh
