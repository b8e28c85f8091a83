#include "anticoh/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace anticoh {

namespace {

constexpr int kLogFactorialTableSize = 1 << 14;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactorialTableSize + 1);
    for (int n = 0; n <= kLogFactorialTableSize; ++n) {
      t[n] = std::lgamma(static_cast<double>(n) + 1.0);
    }
    return t;
  }();
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0 || n > kLogFactorialTableSize) {
    throw std::out_of_range("log_factorial: argument " + std::to_string(n) +
                            " outside the supported table");
  }
  return log_factorial_table()[n];
}

double log_binomial(int q, int l) {
  if (q < 0 || l < 0 || l > q) {
    return -std::numeric_limits<double>::infinity();
  }
  if (l == 0 || l == q) return 0.0;
  return log_factorial(q) - log_factorial(l) - log_factorial(q - l);
}

double binomial(int q, int l) {
  if (q < 0 || l < 0 || l > q) return 0.0;
  // Small arguments are exact through the multiplicative formula.
  if (q <= 60) {
    const int k = std::min(l, q - l);
    double value = 1.0;
    for (int i = 1; i <= k; ++i) {
      value = value * static_cast<double>(q - k + i) / static_cast<double>(i);
    }
    return std::round(value);
  }
  return std::exp(log_binomial(q, l));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& matrix) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double hermiticity_defect(const ComplexMatrix& matrix) {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace anticoh
