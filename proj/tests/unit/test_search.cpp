#include <cmath>
#include <random>

#include "anticoh/catalog.hpp"
#include "anticoh/majorana.hpp"
#include "anticoh/reductions.hpp"
#include "anticoh/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace anticoh;

TEST_CASE("analytic purity gradient matches finite differences") {
  std::mt19937_64 rng(21);
  for (int two_j = 2; two_j <= 9; ++two_j) {
    const SpinQuantumNumber j(two_j);
    for (int t = 1; t < two_j; ++t) {
      const oracle::Vec x = 1.7 * oracle::random_coefficients(two_j, rng);
      std::vector<double> grad;
      purity_deficit_with_gradient(j, t, x, &grad);
      std::vector<double> params;
      for (const auto& z : x) {
        params.push_back(z.real());
        params.push_back(z.imag());
      }
      const auto fd = oracle::central_gradient(
          [&](const std::vector<double>& p) {
            ComplexVector y(two_j + 1);
            for (int i = 0; i <= two_j; ++i) y(i) = Complex(p[2 * i], p[2 * i + 1]);
            // Independent objective: 1 - A_t^R through the oracle reduced density.
            const oracle::Mat rho = oracle::reduced_density_dicke(y / y.norm(), t);
            const double r = (rho * rho).trace().real();
            return 1.0 - (t + 1.0) / t * (1.0 - r);
          },
          params, 1e-6);
      for (std::size_t i = 0; i < fd.size(); ++i) CHECK(std::abs(fd[i] - grad[i]) < 1e-7);
    }
  }
}

TEST_CASE("search finds anticoherent states where they exist") {
  SearchProblem p{SpinQuantumNumber(4), 2, 0, {}};
  p.options.restarts = 8;
  SearchResult r = search_anticoherent(p);
  CHECK(r.converged);
  CHECK(is_t_anticoherent_by_definition(r.best_state, 2, 100, 1e-7));
  CHECK(r.restart_values.size() == 8);

  p = SearchProblem{SpinQuantumNumber(6), 3, 0, {}};
  r = search_anticoherent(p);
  CHECK(r.converged);
  CHECK(degeneracy_profile(state_to_points(r.best_state), 1e-4) == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("degeneracy constraint is respected") {
  SearchProblem p{SpinQuantumNumber(4), 2, 1, {}};
  p.options.restarts = 8;
  const SearchResult r = search_anticoherent(p);
  CHECK(r.converged);
  CHECK(std::abs(r.best_state.coefficients()(0)) < 1e-14);
  CHECK(degeneracy_profile(state_to_points(r.best_state), 1e-5).back() >= 1);
  CHECK(r.best_value == doctest::Approx(a_purity(r.best_state, 2)).epsilon(1e-12));

  SearchProblem q{SpinQuantumNumber(8), 1, 4, {}};
  q.options.restarts = 8;
  const SearchResult rq = search_anticoherent(q);
  CHECK(rq.converged);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(rq.best_state.coefficients()(i)) < 1e-14);
  const auto profile = degeneracy_profile(state_to_points(rq.best_state), 1e-5);
  CHECK(profile.back() >= 4);
}

TEST_CASE("j = 5/2 has no 2-anticoherent state") {
  SearchProblem p{SpinQuantumNumber(5), 2, 0, {}};
  p.options.restarts = 64;
  const SearchResult r = search_anticoherent(p);
  CHECK_FALSE(r.converged);
  CHECK(r.best_value == doctest::Approx(0.99).epsilon(1e-8));
  for (double v : r.restart_values) CHECK(v <= 0.99 + 1e-6);
}

TEST_CASE("maximize other measures") {
  const SearchResult bures = maximize_measure(SpinQuantumNumber(5), 2, MeasureKind::Bures, 8, 3);
  CHECK(std::abs(bures.best_value - 0.9247) < 1e-3);
  const SearchResult one = maximize_measure(SpinQuantumNumber(2), 1, MeasureKind::Purity, 4, 3);
  CHECK(one.best_value == doctest::Approx(1.0));
  CHECK(std::abs(spin_expectation(one.best_state).norm()) < 1e-10);
  CHECK_THROWS(maximize_measure(SpinQuantumNumber(5), 1, MeasureKind::Variance, 4, 3));
}

TEST_CASE("determinism across thread counts") {
  SearchProblem p{SpinQuantumNumber(7), 3, 0, {}};
  p.options.restarts = 6;
  p.options.seed = 77;
  SearchProblem q = p;
  q.options.threads = 3;
  const SearchResult a = search_anticoherent(p);
  const SearchResult b = search_anticoherent(q);
  CHECK(a.best_value == b.best_value);
  CHECK(a.restart_index == b.restart_index);
  CHECK(a.restart_values == b.restart_values);
  CHECK((a.best_state.coefficients() - b.best_state.coefficients()).norm() == 0.0);
}

TEST_CASE("problem validation") {
  CHECK_THROWS(search_anticoherent(SearchProblem{SpinQuantumNumber(4), 4, 0, {}}));
  CHECK_THROWS(search_anticoherent(SearchProblem{SpinQuantumNumber(4), 1, 4, {}}));
  SearchProblem p{SpinQuantumNumber(4), 1, 0, {}};
  p.options.restarts = 0;
  CHECK_THROWS(search_anticoherent(p));
  CHECK_THROWS(gmax_table(1, 1, {}));
}

TEST_CASE("small g_max table") {
  const auto rows = gmax_table(4, 2, {});
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].two_j == 2);
  CHECK(rows[0].g_max == 1);
  CHECK(rows[2].two_j == 3);
  CHECK(rows[2].t == 2);
  CHECK_FALSE(rows[2].converged);
  CHECK(rows[4].g_max == 1);
  CHECK(rows[4].converged);
}
