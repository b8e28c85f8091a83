#pragma once

// Independent reference implementations used only by the tests. Nothing
// here calls into the library's numerical routines.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "anticoh/spin.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline Vec random_coefficients(int two_j, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec c(two_j + 1);
  for (auto& z : c) z = Complex(normal(rng), normal(rng));
  return c / c.norm();
}

inline anticoh::SpinState random_state(int two_j, std::mt19937_64& rng) {
  return {anticoh::SpinQuantumNumber(two_j), random_coefficients(two_j, rng)};
}

inline double exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Normalized Dicke vector of n qubits with k down spins (bit value 1).
inline Vec dicke_vector(int n, int k) {
  Vec v = Vec::Zero(std::size_t{1} << n);
  const double amp = 1.0 / std::sqrt(exact_binomial(n, k));
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
    if (std::popcount(b) == k) v(b) = amp;
  }
  return v;
}

/// Symmetric 2j-qubit image; |j,m> carries j - m down spins.
inline Vec symmetric_image(const Vec& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Vec psi = Vec::Zero(std::size_t{1} << n);
  for (int i = 0; i <= n; ++i) psi += c(i) * dicke_vector(n, n - i);
  return psi;
}

/// Reduced state of the first t qubits (lowest bits), as a 2^t matrix.
inline Mat partial_trace_full(const Vec& psi, int n, int t) {
  const Eigen::Index sys = Eigen::Index{1} << t;
  const Eigen::Index env = Eigen::Index{1} << (n - t);
  // psi index = sys_bits | env_bits << t, column-major reshape gives M(sys, env).
  const Eigen::Map<const Mat> m(psi.data(), sys, env);
  return m * m.adjoint();
}

/// Reduced state projected on the t-qubit Dicke basis, k = down spins.
inline Mat reduced_density_dicke(const Vec& c, int t) {
  const int n = static_cast<int>(c.size()) - 1;
  const Mat full = partial_trace_full(symmetric_image(c), n, t);
  Mat d(Eigen::Index{1} << t, t + 1);
  for (int k = 0; k <= t; ++k) d.col(k) = dicke_vector(t, k);
  return d.adjoint() * full * d;
}

/// Spin operators from the ladder matrix elements.
struct Ops {
  Mat jx, jy, jz;
};
inline Ops spin_ops(int two_j) {
  const double j = 0.5 * two_j;
  const int d = two_j + 1;
  Mat jp = Mat::Zero(d, d), jz = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = -j + i;
    jz(i, i) = m;
    if (i + 1 < d) jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Mat jm = jp.adjoint();
  return {(jp + jm) / 2.0, (jp - jm) / Complex(0.0, 2.0), jz};
}

/// exp(a) by scaling and squaring with a degree-30 Taylor polynomial.
inline Mat expm_taylor(const Mat& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const Mat scaled = a / std::ldexp(1.0, squarings);
  Mat result = Mat::Identity(a.rows(), a.cols());
  Mat term = Mat::Identity(a.rows(), a.cols());
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

inline Mat rotation(int two_j, const Eigen::Vector3d& axis, double angle) {
  const Ops ops = spin_ops(two_j);
  const Eigen::Vector3d n = axis.normalized();
  const Mat jn = n.x() * ops.jx + n.y() * ops.jy + n.z() * ops.jz;
  return expm_taylor(Complex(0.0, -angle) * jn);
}

/// Symmetrized tensor product of the spinors cos(theta/2)|up> +
/// sin(theta/2) e^{i phi}|down>, read in the |j,m> basis (unnormalized).
inline Vec spinor_product_coefficients(const std::vector<std::pair<double, double>>& points) {
  const int n = static_cast<int>(points.size());
  Vec prod = Vec::Ones(1);
  for (const auto& [theta, phi] : points) {
    Vec next(prod.size() * 2);
    // New qubit occupies the next higher bit.
    next.head(prod.size()) = prod * std::cos(theta / 2.0);
    next.tail(prod.size()) = prod * std::polar(std::sin(theta / 2.0), phi);
    prod = next;
  }
  Vec c(n + 1);
  for (int i = 0; i <= n; ++i) c(i) = dicke_vector(n, n - i).dot(prod);
  return c;
}

/// Closed forms for the spin-1 family at order 1: purity, HS (= trace),
/// Bures.
struct Spin1Values {
  double purity, hs, trace, bures;
};
inline Spin1Values spin1_closed_form(double theta) {
  const double s2 = std::sin(theta / 2.0);
  const double purity = 4.0 * std::pow(s2, 4) / std::pow(std::cos(theta) + 3.0, 2);
  const double cot = std::cos(theta / 4.0) / std::sin(theta / 4.0);
  const double hs = theta == 0.0 ? 0.0 : 2.0 / (1.0 + std::pow(cot, 4));
  // sqrt2 + 2 - (2 sqrt2 + 2)/u with u = sqrt(cos theta + 3), written without
  // the cancellation at theta = pi via u - sqrt2 = 2 cos^2(theta/2) / (u + sqrt2).
  const double u = std::sqrt(std::cos(theta) + 3.0);
  const double c2 = std::pow(std::cos(theta / 2.0), 2);
  const double bures = 1.0 - std::sqrt((2.0 + std::sqrt(2.0)) * 2.0 * c2 / (u * (u + std::sqrt(2.0))));
  return {purity, hs, hs, bures};
}

template <typename F>
std::vector<double> central_gradient(F&& f, std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + h;
    const double up = f(x);
    x[i] = orig - h;
    const double down = f(x);
    x[i] = orig;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace oracle
