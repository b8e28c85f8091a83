#include "anticoh/reductions.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>

namespace anticoh {

namespace {

constexpr double kEigenvalueClamp = -1e-10;

void require_order(const SpinState& state, int t) {
  if (t < 1 || t >= state.two_j()) {
    throw std::invalid_argument("order t = " + std::to_string(t) +
                                " outside 1 <= t < 2j = " + std::to_string(state.two_j()));
  }
}

double gamma_unchecked(int two_j, int t, int k, int k1, int k2) {
  const double log_num = log_binomial(k + k1, k) + log_binomial(two_j - k - k1, t - k1) +
                         log_binomial(k + k2, k) + log_binomial(two_j - k - k2, t - k2);
  if (std::isinf(log_num)) return 0.0;
  return std::exp(0.5 * log_num - log_binomial(two_j, t));
}

}  // namespace

GammaTable::GammaTable(SpinQuantumNumber j, int t) : j_(j), t_(t) {
  if (t < 1 || t >= j.two_j()) {
    throw std::invalid_argument("Gamma table needs 1 <= t < 2j");
  }
  values_.resize(static_cast<std::size_t>(k_count()) * (t + 1) * (t + 1));
  std::size_t idx = 0;
  for (int k = 0; k < k_count(); ++k) {
    for (int k1 = 0; k1 <= t; ++k1) {
      for (int k2 = 0; k2 <= t; ++k2) {
        values_[idx++] = gamma_unchecked(j.two_j(), t, k, k1, k2);
      }
    }
  }
}

double gamma(SpinQuantumNumber j, int t, int k, int k1, int k2) {
  if (t < 1 || t >= j.two_j()) throw std::out_of_range("gamma: t outside 1 <= t < 2j");
  if (k < 0 || k > j.two_j() - t) throw std::out_of_range("gamma: k outside [0, 2j - t]");
  if (k1 < 0 || k1 > t || k2 < 0 || k2 > t) {
    throw std::out_of_range("gamma: k1, k2 outside [0, t]");
  }
  return gamma_unchecked(j.two_j(), t, k, k1, k2);
}

std::shared_ptr<const GammaTable> gamma_table(SpinQuantumNumber j, int t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const GammaTable>> cache;
  const auto key = std::make_pair(j.two_j(), t);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto table = std::make_shared<const GammaTable>(j, t);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

ReducedDensity::ReducedDensity(int t, ComplexMatrix matrix, double tolerance)
    : t_(t), rho_(std::move(matrix)) {
  if (rho_.rows() != t + 1 || rho_.cols() != t + 1) {
    throw std::invalid_argument("reduced density matrix must be (t+1) x (t+1)");
  }
  if (hermiticity_defect(rho_) > tolerance) {
    throw NumericalError("reduced density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - 1.0) > tolerance) {
    throw NumericalError("reduced density matrix trace differs from 1");
  }
}

ReducedDensity reduced_density(const SpinState& state, int t) {
  require_order(state, t);
  const int n = state.two_j();
  const ComplexVector& c = state.coefficients();
  const auto table = gamma_table(state.spin(), t);
  ComplexMatrix rho = ComplexMatrix::Zero(t + 1, t + 1);
  for (int k1 = 0; k1 <= t; ++k1) {
    for (int k2 = k1; k2 <= t; ++k2) {
      Complex sum = 0.0;
      for (int k = 0; k <= n - t; ++k) {
        sum += c(n - k - k1) * std::conj(c(n - k - k2)) * (*table)(k, k1, k2);
      }
      rho(k1, k2) = sum;
      rho(k2, k1) = std::conj(sum);
    }
  }
  return {t, std::move(rho)};
}

ReducedDensity brute_force_reduced_density(const SpinState& state, int t) {
  require_order(state, t);
  const int n = state.two_j();
  if (n > kBruteForceMaxTwoJ) {
    throw std::invalid_argument("brute-force reduction limited to 2j <= " +
                                std::to_string(kBruteForceMaxTwoJ));
  }
  const ComplexVector& c = state.coefficients();

  // Explicit symmetric 2j-qubit vector; bit value 1 marks a down spin.
  const std::size_t full_dim = std::size_t{1} << n;
  std::vector<Complex> psi(full_dim);
  for (std::size_t bits = 0; bits < full_dim; ++bits) {
    const int downs = std::popcount(bits);
    psi[bits] = c(n - downs) / std::sqrt(binomial(n, downs));
  }

  // The lowest t bits form the kept subsystem. For each environment string,
  // accumulate the kept amplitudes by Hamming weight, which is the overlap
  // with the unnormalized Dicke vectors of t qubits.
  const std::size_t sys_dim = std::size_t{1} << t;
  const std::size_t env_dim = std::size_t{1} << (n - t);
  ComplexMatrix rho = ComplexMatrix::Zero(t + 1, t + 1);
  std::vector<Complex> u(t + 1);
  for (std::size_t env = 0; env < env_dim; ++env) {
    std::fill(u.begin(), u.end(), Complex{0.0});
    for (std::size_t sys = 0; sys < sys_dim; ++sys) {
      u[std::popcount(sys)] += psi[sys | (env << t)];
    }
    for (int k1 = 0; k1 <= t; ++k1) {
      for (int k2 = 0; k2 <= t; ++k2) rho(k1, k2) += u[k1] * std::conj(u[k2]);
    }
  }
  for (int k1 = 0; k1 <= t; ++k1) {
    for (int k2 = 0; k2 <= t; ++k2) {
      rho(k1, k2) /= std::sqrt(binomial(t, k1) * binomial(t, k2));
    }
  }
  return {t, std::move(rho)};
}

std::vector<double> spectrum(const ReducedDensity& rho) {
  auto values = hermitian_eigenvalues(rho.matrix());
  for (double& v : values) {
    if (v < kEigenvalueClamp) {
      throw NumericalError("reduced density matrix has eigenvalue " + std::to_string(v));
    }
    if (v < 0.0) v = 0.0;
  }
  return values;
}

ComplexMatrix schmidt_factor(const SpinState& state, int t) {
  require_order(state, t);
  const int n = state.two_j();
  const ComplexVector& x = state.coefficients();
  const double log_norm = 0.5 * log_binomial(n, t);
  ComplexMatrix m = ComplexMatrix::Zero(t + 1, n - t + 1);
  for (int a = 0; a <= t; ++a) {
    for (int k = 0; k <= n - t; ++k) {
      const double log_f = 0.5 * (log_binomial(k + a, k) + log_binomial(n - k - a, t - a)) - log_norm;
      if (!std::isinf(log_f)) m(a, k) = x(n - k - a) * std::exp(log_f);
    }
  }
  return m;
}

std::vector<double> schmidt_values(const SpinState& state, int t) {
  const Eigen::JacobiSVD<ComplexMatrix> svd(schmidt_factor(state, t));
  std::vector<double> out(t + 1, 0.0);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) out[i] = sv(i);
  return out;
}

double purity_from_coefficients(const SpinState& state, int t) {
  require_order(state, t);
  const int n = state.two_j();
  const ComplexVector& c = state.coefficients();
  const auto table = gamma_table(state.spin(), t);
  double purity = 0.0;
  for (int k1 = 0; k1 <= t; ++k1) {
    for (int k2 = 0; k2 <= t; ++k2) {
      Complex sum = 0.0;
      // Shifted summation index kappa = j + k runs over 0..2j-t.
      for (int kappa = 0; kappa <= n - t; ++kappa) {
        sum += std::conj(c(kappa + k1)) * c(kappa + k2) * (*table)(kappa, k1, k2);
      }
      purity += std::norm(sum);
    }
  }
  return purity;
}

double anticoherence_deficit(const SpinState& state, int t) {
  const ReducedDensity rho = reduced_density(state, t);
  const double mixed = 1.0 / (t + 1);
  double sum = 0.0;
  for (int k1 = 0; k1 <= t; ++k1) {
    for (int k2 = 0; k2 <= t; ++k2) {
      sum += std::norm(rho.matrix()(k1, k2) - (k1 == k2 ? mixed : 0.0));
    }
  }
  return (t + 1.0) / t * sum;
}

double purity_via_spin_expectations(const SpinState& state, int t) {
  if (t != 1 && t != 2) {
    throw std::invalid_argument("spin-expectation purity is available for t = 1, 2 only");
  }
  require_order(state, t);
  const double j = state.spin().value();
  const SpinOperators ops = build_spin_operators(state.spin());
  const ComplexVector& c = state.coefficients();
  const ComplexMatrix* comps[3] = {&ops.jx, &ops.jy, &ops.jz};
  ComplexVector applied[3];
  double mean_sq = 0.0;
  for (int a = 0; a < 3; ++a) {
    applied[a] = (*comps[a]) * c;
    mean_sq += std::norm(c.dot(applied[a]));
  }
  if (t == 1) return 0.5 * (1.0 + mean_sq / (j * j));

  // <J_a J_b + J_b J_a> = 2 Re <J_a psi | J_b psi>
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const double anticomm = 2.0 * applied[a].dot(applied[b]).real();
      const double term = (anticomm / j - (a == b ? 1.0 : 0.0)) / (2.0 * (2.0 * j - 1.0));
      sum += term * term;
    }
  }
  return 0.25 + mean_sq / (2.0 * j * j) + sum;
}

}  // namespace anticoh
