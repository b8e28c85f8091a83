#include <cmath>
#include <random>

#include "anticoh/catalog.hpp"
#include "anticoh/reductions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticoh;

TEST_CASE("gamma coefficients") {
  const SpinQuantumNumber j(4);
  // Gamma_k^{k1 k2} with k1 = k2 = 0 reduces to C(2j-k, t) / C(2j, t).
  for (int t = 1; t < 4; ++t) {
    for (int k = 0; k <= 4 - t; ++k) {
      CHECK(gamma(j, t, k, 0, 0) ==
            doctest::Approx(oracle::exact_binomial(4 - k, t) / oracle::exact_binomial(4, t)));
    }
  }
  CHECK_THROWS_AS(gamma(j, 2, 3, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(gamma(j, 2, 0, 3, 0), std::out_of_range);
  const auto table = gamma_table(j, 2);
  CHECK((*table)(1, 1, 2) == doctest::Approx(gamma(j, 2, 1, 1, 2)));
  CHECK(gamma_table(j, 2).get() == table.get());
}

TEST_CASE("reduced density matches both brute-force routes") {
  std::mt19937_64 rng(3);
  for (int two_j = 2; two_j <= 8; ++two_j) {
    for (int r = 0; r < 10; ++r) {
      const SpinState s = oracle::random_state(two_j, rng);
      for (int t = 1; t < two_j; ++t) {
        const ComplexMatrix rho = reduced_density(s, t).matrix();
        const oracle::Mat ref = oracle::reduced_density_dicke(s.coefficients(), t);
        CHECK((rho - ref).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((brute_force_reduced_density(s, t).matrix() - ref).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("purity routes agree") {
  std::mt19937_64 rng(4);
  for (int two_j = 3; two_j <= 9; ++two_j) {
    const SpinState s = oracle::random_state(two_j, rng);
    for (int t = 1; t < two_j; ++t) {
      const auto ev = spectrum(reduced_density(s, t));
      double r = 0.0;
      for (double l : ev) r += l * l;
      CHECK(purity_from_coefficients(s, t) == doctest::Approx(r).epsilon(1e-12));
      CHECK(1.0 - anticoherence_deficit(s, t) ==
            doctest::Approx((t + 1.0) / t * (1.0 - r)).epsilon(1e-12));
      if (t <= 2) CHECK(purity_via_spin_expectations(s, t) == doctest::Approx(r).epsilon(1e-12));
    }
  }
}

TEST_CASE("coherent and anticoherent reductions") {
  const SpinState up = SpinState::basis(SpinQuantumNumber(6), 6);
  for (int t = 1; t < 6; ++t) CHECK(purity_from_coefficients(up, t) == doctest::Approx(1.0));
  const SpinState oct = catalog::octahedron();
  for (int t = 1; t <= 3; ++t) {
    const auto ev = spectrum(reduced_density(oct, t));
    for (double l : ev) CHECK(l == doctest::Approx(1.0 / (t + 1)).epsilon(1e-12));
    CHECK(anticoherence_deficit(oct, t) < 1e-28);
  }
}

TEST_CASE("validation") {
  const SpinState s = catalog::cat(SpinQuantumNumber(3));
  CHECK_THROWS_AS(reduced_density(s, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(purity_via_spin_expectations(s, 3), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_reduced_density(SpinState::basis(SpinQuantumNumber(16), 0), 1),
                  std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(ReducedDensity(1, bad), NumericalError);
  bad(0, 0) = 0.5;
  bad(1, 1) = 0.5;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(ReducedDensity(1, bad), NumericalError);
  ComplexMatrix neg(2, 2);
  neg << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(spectrum(ReducedDensity(1, neg)), NumericalError);
}

TEST_CASE("Schmidt factor reproduces rho_t") {
  std::mt19937_64 rng(77);
  for (int two_j = 2; two_j <= 12; ++two_j) {
    const SpinState s = oracle::random_state(two_j, rng);
    for (int t = 1; t < two_j; ++t) {
      const ComplexMatrix m = schmidt_factor(s, t);
      CHECK((m * m.adjoint() - reduced_density(s, t).matrix()).cwiseAbs().maxCoeff() < 1e-13);
      const auto sigma = schmidt_values(s, t);
      const auto ev = spectrum(reduced_density(s, t));
      REQUIRE(sigma.size() == ev.size());
      for (std::size_t i = 0; i < ev.size(); ++i) CHECK(std::abs(sigma[i] * sigma[i] - ev[i]) < 1e-13);
    }
  }
}
