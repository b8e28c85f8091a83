#include "anticoh/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "anticoh/reductions.hpp"
#include "parallel.hpp"

namespace anticoh {

namespace {

constexpr double kFiniteDifferenceStep = 1e-7;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 40;
// Stop once f = 1 - A is this small; the purity deficit is a sum of squares
// and can go far below the distance measures' roundoff floor.
constexpr double kPurityTarget = 1e-24;
constexpr double kDistanceTarget = 1e-14;
// A restart whose relative decrease stays below kPlateauDecrease for
// kPlateauIterations consecutive steps has stagnated.
constexpr double kPlateauDecrease = 1e-14;
constexpr int kPlateauIterations = 25;

using Params = std::vector<double>;

double dot(const Params& a, const Params& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Params& a) { return std::sqrt(dot(a, a)); }

class Objective {
 public:
  Objective(const SearchProblem& problem)
      : j_(problem.spin), t_(problem.t), g_(problem.g), kind_(problem.options.objective) {}

  int size() const { return 2 * (j_.two_j() + 1 - g_); }

  ComplexVector coefficients(const Params& p) const {
    ComplexVector x = ComplexVector::Zero(j_.dimension());
    for (int i = 0; i < size() / 2; ++i) x(g_ + i) = Complex(p[2 * i], p[2 * i + 1]);
    return x;
  }

  double target() const { return kind_ == MeasureKind::Purity ? kPurityTarget : kDistanceTarget; }

  double value(const Params& p) const {
    const ComplexVector x = coefficients(p);
    if (kind_ == MeasureKind::Purity) return purity_deficit_with_gradient(j_, t_, x, nullptr);
    return 1.0 - measure(SpinState(j_, x), t_, kind_);
  }

  double value_and_gradient(const Params& p, Params& grad) const {
    grad.assign(p.size(), 0.0);
    if (kind_ == MeasureKind::Purity) {
      std::vector<double> full;
      const double f = purity_deficit_with_gradient(j_, t_, coefficients(p), &full);
      std::copy(full.begin() + 2 * g_, full.end(), grad.begin());
      return f;
    }
    Params q = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] = p[i] + kFiniteDifferenceStep;
      const double up = value(q);
      q[i] = p[i] - kFiniteDifferenceStep;
      const double down = value(q);
      q[i] = p[i];
      grad[i] = (up - down) / (2.0 * kFiniteDifferenceStep);
    }
    return value(p);
  }

 private:
  SpinQuantumNumber j_;
  int t_;
  int g_;
  MeasureKind kind_;
};

struct LocalOutcome {
  Params p;
  int iterations = 0;
  bool stagnated = false;
};

// BFGS on the inverse Hessian with Armijo backtracking.
LocalOutcome bfgs(const Objective& obj, Params p, const SearchOptions& options) {
  const std::size_t n = p.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
  bool h_is_identity = true;
  bool first_update = true;
  Params grad, grad_new, trial(n), d(n);
  double f = obj.value_and_gradient(p, grad);

  LocalOutcome out;
  int plateau = 0;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (plateau >= kPlateauIterations) {
      out.stagnated = true;
      break;
    }
    if (f < obj.target()) break;
    if (norm(grad) * norm(p) < options.gradient_tolerance) {
      out.stagnated = true;
      break;
    }
    const Eigen::Map<const Eigen::VectorXd> gv(grad.data(), n);
    Eigen::Map<Eigen::VectorXd>(d.data(), n) = -(h * gv);
    double slope = dot(d, grad);
    if (!(slope < 0.0)) {
      h.setIdentity();
      h_is_identity = true;
      for (std::size_t i = 0; i < n; ++i) d[i] = -grad[i];
      slope = dot(d, grad);
    }

    double alpha = 1.0;
    double f_trial = f;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = p[i] + alpha * d[i];
      f_trial = obj.value(trial);
      if (f_trial <= f + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (h_is_identity) {
        out.stagnated = true;
        break;
      }
      h.setIdentity();
      h_is_identity = true;
      continue;
    }

    obj.value_and_gradient(trial, grad_new);
    Eigen::VectorXd s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = trial[i] - p[i];
      y[i] = grad_new[i] - grad[i];
    }
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (first_update) {
        h *= sy / y.squaredNorm();
        first_update = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = h * y;
      h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
           rho * (hy * s.transpose() + s * hy.transpose());
      h_is_identity = false;
    }
    plateau = f - f_trial <= kPlateauDecrease * f ? plateau + 1 : 0;
    p.swap(trial);
    grad.swap(grad_new);
    f = f_trial;
  }
  out.iterations = it;
  out.p = std::move(p);
  return out;
}

void validate(const SearchProblem& problem) {
  const int two_j = problem.spin.two_j();
  if (problem.t < 1 || problem.t >= two_j) {
    throw std::invalid_argument("search: order t must satisfy 1 <= t < 2j");
  }
  if (problem.g < 0 || problem.g > two_j - 1) {
    throw std::invalid_argument("search: degeneracy g must satisfy 0 <= g <= 2j - 1");
  }
  if (problem.options.restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");
  if (problem.options.max_iterations < 1) {
    throw std::invalid_argument("search: max_iterations must be >= 1");
  }
  if (problem.options.objective == MeasureKind::Variance && problem.t != 1) {
    throw std::invalid_argument("search: the variance objective needs t = 1");
  }
}

}  // namespace

double purity_deficit_with_gradient(SpinQuantumNumber j, int t, const ComplexVector& x,
                                    std::vector<double>* gradient) {
  const int n = j.two_j();
  if (t < 1 || t >= n) throw std::invalid_argument("purity deficit needs 1 <= t < 2j");
  if (x.size() != j.dimension()) throw std::invalid_argument("coefficient length mismatch");
  const double s = x.squaredNorm();
  if (!(s > 0.0)) throw std::invalid_argument("zero coefficient vector");

  const auto table = gamma_table(j, t);
  ComplexMatrix rho = ComplexMatrix::Zero(t + 1, t + 1);
  for (int a = 0; a <= t; ++a) {
    for (int b = a; b <= t; ++b) {
      Complex sum = 0.0;
      for (int k = 0; k <= n - t; ++k) sum += x(n - k - a) * std::conj(x(n - k - b)) * (*table)(k, a, b);
      rho(a, b) = sum;
      rho(b, a) = std::conj(sum);
    }
  }
  ComplexMatrix e = rho / s;
  e.diagonal().array() -= 1.0 / (t + 1);
  const double scale = (t + 1.0) / t;
  const double deficit = scale * e.squaredNorm();
  if (gradient == nullptr) return deficit;

  // w_i = dD/d conj(x_i); dD/dRe = 2 Re w, dD/dIm = 2 Im w.
  ComplexVector w = ComplexVector::Zero(n + 1);
  for (int k = 0; k <= n - t; ++k) {
    for (int a = 0; a <= t; ++a) {
      for (int b = 0; b <= t; ++b) {
        w(n - k - b) += e(b, a) * (*table)(k, a, b) * x(n - k - a);
      }
    }
  }
  const double tr_e_rho = (e * rho).trace().real();
  w = (2.0 * scale) * (w / s - (tr_e_rho / (s * s)) * x);
  gradient->resize(2 * (n + 1));
  for (int i = 0; i <= n; ++i) {
    (*gradient)[2 * i] = 2.0 * w(i).real();
    (*gradient)[2 * i + 1] = 2.0 * w(i).imag();
  }
  return deficit;
}

SearchResult search_anticoherent(const SearchProblem& problem) {
  validate(problem);
  const SearchOptions& options = problem.options;
  const Objective objective(problem);

  struct Outcome {
    ComplexVector x;
    double value = 0.0;
    int iterations = 0;
    bool stagnated = false;
  };
  std::vector<Outcome> outcomes(options.restarts);
  detail::parallel_for(options.restarts, options.threads, [&](int r) {
    std::mt19937_64 rng(mix_seed(options.seed, static_cast<std::uint64_t>(r)));
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Params p(objective.size());
    for (double& v : p) v = normal(rng);
    LocalOutcome local = bfgs(objective, std::move(p), options);
    Outcome& o = outcomes[r];
    o.x = objective.coefficients(local.p);
    o.value = measure(SpinState(problem.spin, o.x), problem.t, options.objective);
    o.iterations = local.iterations;
    o.stagnated = local.stagnated;
  });

  int best = 0;
  for (int r = 1; r < options.restarts; ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  SearchResult result{SpinState(problem.spin, outcomes[best].x),
                      outcomes[best].value,
                      1.0 - outcomes[best].value < options.success_threshold,
                      outcomes[best].iterations,
                      best,
                      {},
                      true};
  for (const auto& o : outcomes) {
    result.restart_values.push_back(o.value);
    result.all_stagnated = result.all_stagnated && o.stagnated;
  }
  return result;
}

SearchResult maximize_measure(SpinQuantumNumber j, int t, MeasureKind kind, int restarts,
                              std::uint64_t seed, int threads) {
  if (kind == MeasureKind::Variance) {
    throw std::invalid_argument("maximize_measure: kind must be purity, hs, trace or bures");
  }
  SearchProblem problem{j, t, 0, {}};
  problem.options.objective = kind;
  problem.options.restarts = restarts;
  problem.options.seed = seed;
  problem.options.threads = threads;
  return search_anticoherent(problem);
}

std::vector<GmaxEntry> gmax_table(int two_j_max, int t_max, const SearchOptions& options) {
  if (two_j_max < 2) throw std::invalid_argument("gmax_table: 2j_max must be >= 2");
  if (t_max < 1) throw std::invalid_argument("gmax_table: t_max must be >= 1");
  std::vector<GmaxEntry> rows;
  for (int two_j = 2; two_j <= two_j_max; ++two_j) {
    for (int t = 1; t <= std::min(t_max, two_j - 1); ++t) {
      GmaxEntry entry;
      entry.two_j = two_j;
      entry.t = t;
      for (int g = 0; g <= two_j - 1; ++g) {
        SearchProblem problem{SpinQuantumNumber(two_j), t, g, options};
        problem.options.seed =
            mix_seed(options.seed, static_cast<std::uint64_t>(two_j) * 4096 + t * 64 + g);
        const SearchResult r = search_anticoherent(problem);
        if (!r.converged) {
          if (g == 0) entry.best_value = r.best_value;
          entry.failure_stagnated = r.all_stagnated;
          break;
        }
        entry.g_max = g;
        entry.best_value = r.best_value;
        entry.converged = true;
      }
      rows.push_back(entry);
    }
  }
  return rows;
}

}  // namespace anticoh
