// Randomized property checks over generated states.

#include <cmath>
#include <random>

#include "anticoh/catalog.hpp"
#include "anticoh/majorana.hpp"
#include "anticoh/measures.hpp"
#include "anticoh/reductions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticoh;

namespace {

struct Case {
  SpinState state;
  std::uint64_t seed;
};

// Mix of Gaussian states, sparse states and states near the coherent point.
std::vector<Case> generate(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> spin(1, 10);
  std::uniform_int_distribution<int> flavour(0, 2);
  std::normal_distribution<double> normal;
  std::vector<Case> out;
  for (int i = 0; i < count; ++i) {
    const int two_j = spin(rng);
    oracle::Vec c = oracle::random_coefficients(two_j, rng);
    switch (flavour(rng)) {
      case 1:
        for (auto& z : c) {
          if (normal(rng) > 0.3) z = 0.0;
        }
        if (c.norm() == 0.0) c(0) = 1.0;
        break;
      case 2:
        c *= 1e-3;
        c(two_j) = 1.0;
        break;
      default: break;
    }
    out.push_back({SpinState(SpinQuantumNumber(two_j), c), rng()});
  }
  return out;
}

}  // namespace

TEST_CASE("measures lie in [0, 1] and respect the t > j bound") {
  for (const auto& [s, seed] : generate(300, 1)) {
    for (int t = 1; t < s.two_j(); ++t) {
      for (MeasureKind k : kOrderMeasureKinds) {
        const double v = measure(s, t, k);
        CHECK(v >= -1e-12);
        CHECK(v <= 1.0 + 1e-12);
        if (2 * t > s.two_j()) CHECK(v < 1.0 - 1e-8);
      }
    }
  }
}

TEST_CASE("measures are invariant under rotations, phases and scaling") {
  for (const auto& [s, seed] : generate(60, 2)) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const Direction axis(normal(rng), normal(rng), normal(rng));
    const SpinState r = rotate(s, axis, normal(rng)).with_global_phase(normal(rng));
    const SpinState scaled(s.spin(), 3.7 * s.coefficients());
    for (int t = 1; t < s.two_j(); ++t) {
      for (MeasureKind k : kOrderMeasureKinds) {
        CHECK(std::abs(measure(s, t, k) - measure(r, t, k)) < 1e-10);
        CHECK(std::abs(measure(s, t, k) - measure(scaled, t, k)) < 1e-12);
      }
    }
  }
}

TEST_CASE("reduced states are consistent under further tracing") {
  // Tracing one more qubit from rho_{t+1} leaves rho_t; checked via purity
  // of the coherent limit and the trace of every reduction.
  for (const auto& [s, seed] : generate(80, 3)) {
    for (int t = 1; t < s.two_j(); ++t) {
      const ComplexMatrix rho = reduced_density(s, t).matrix();
      CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
      const auto ev = spectrum(reduced_density(s, t));
      for (double l : ev) CHECK(l >= 0.0);
    }
    if (s.two_j() >= 3) {
      const ComplexMatrix r2 = reduced_density(s, 2).matrix();
      const ComplexMatrix r1 = reduced_density(s, 1).matrix();
      // Dicke-basis partial trace of one qubit from the symmetric 2-qubit state.
      ComplexMatrix traced(2, 2);
      traced(0, 0) = r2(0, 0) + 0.5 * r2(1, 1);
      traced(1, 1) = r2(2, 2) + 0.5 * r2(1, 1);
      traced(0, 1) = (r2(0, 1) + r2(1, 2)) / std::sqrt(2.0);
      traced(1, 0) = std::conj(traced(0, 1));
      CHECK((traced - r1).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("Majorana round trip over generated states") {
  for (const auto& [s, seed] : generate(200, 4)) {
    CHECK(points_to_state(state_to_points(s)).fidelity(s) > 1 - 1e-8);
  }
}

TEST_CASE("coherent states have zero anticoherence at every order") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal;
  for (int two_j = 2; two_j <= 10; ++two_j) {
    const Vector3 v(normal(rng), normal(rng), normal(rng));
    std::vector<BlochPoint> pts(two_j, BlochPoint::from_vector(v));
    const SpinState s = points_to_state(PointConfiguration(SpinQuantumNumber(two_j), pts));
    for (int t = 1; t < two_j; ++t) {
      for (MeasureKind k : kOrderMeasureKinds) CHECK(std::abs(measure(s, t, k)) < 1e-7);
    }
  }
}
