#include "anticoh/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string_view>

#include "anticoh/thomson.hpp"

namespace anticoh::catalog {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

ComplexVector zeros(SpinQuantumNumber j) { return ComplexVector::Zero(j.dimension()); }

// Storage index of m = two_m / 2.
int index_of(SpinQuantumNumber j, int two_m) { return (two_m + j.two_j()) / 2; }

// Appendix coefficients, exactly as printed, ascending m.
constexpr std::string_view kAppendixA1[] = {
    "0",
    "0",
    "0.6189711605133+0.3210948626046i",
    "0.0035795645781-0.005571932846i",
    "0.0000596970141+0.0009612745249i",
    "0.0747280614210+0.0848752159787i",
    "-0.098250832667+0.0704276863999i",
    "-0.004358698832-0.006121053115i",
    "0.0169591633687+0.0449205206870i",
    "0.6727762527486-0.173404352179i",
    "0.0053207161522+0.0351899547234i",
    "-0.001014420524-0.000272398051i",
};

constexpr std::string_view kAppendixA2[] = {
    "0",
    "0",
    "0",
    "0.6207434617909+0.3092681061476i",
    "-0.004351945720-0.004576402817i",
    "0.0012063346305-0.004493986067i",
    "-0.018457273316+0.0463722998675i",
    "0.0655377989379+0.0201067990800i",
    "0.0686716910441-0.011023764770i",
    "0.0455872510982+0.1357843214759i",
    "-0.033716686148+0.0740640065423i",
    "-0.065020180326+0.0699845281978i",
    "-0.142220507502+0.0527191543731i",
    "0.6344068714556+0.1721745869811i",
    "0.0530094546887+0.0724148358782i",
    "0.0113869490780+0.0848466671314i",
    "0.0127861473227+0.0031452746268i",
};

constexpr std::string_view kAppendixA3[] = {
    "0",
    "0",
    "0.3232497765551+0.4980926832112i",
    "-0.002755440315+0.0002941675004i",
    "0.0096608735602-0.019233596605i",
    "0.0353301997743+0.0318247115315i",
    "0.0938165016555-0.001235092383i",
    "-0.003767421017-0.082840446425i",
    "0.0895251593971-0.005880000805i",
    "0.0127309067916-0.038624872627i",
    "0.2264247580540+0.6299063613884i",
    "0.0268965215414+0.0274972703211i",
    "0.0799844343901-0.093411408577i",
    "0.0206511586120+0.0431241880491i",
    "0.0456490431434-0.141531955144i",
    "0.0053521006629-0.007262562142i",
    "0.3557695532332+0.0599218154303i",
};

double parse_decimal(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw std::invalid_argument("malformed decimal literal '" + s + "'");
  }
  return v;
}

// "a+bi", "a-bi" or a plain real literal.
Complex parse_complex_literal(std::string_view text) {
  if (text.empty() || text.back() != 'i') return {parse_decimal(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      return {parse_decimal(body.substr(0, pos)), parse_decimal(body.substr(pos))};
    }
  }
  return {0.0, parse_decimal(body)};
}

template <std::size_t N>
ComplexVector parse_vector(const std::string_view (&literals)[N]) {
  ComplexVector c(static_cast<Eigen::Index>(N));
  for (std::size_t i = 0; i < N; ++i) c(static_cast<Eigen::Index>(i)) = parse_complex_literal(literals[i]);
  return c;
}

}  // namespace

SpinState cat(SpinQuantumNumber j) {
  ComplexVector c = zeros(j);
  c(0) = 1.0;
  c(j.two_j()) = 1.0;
  return {j, std::move(c)};
}

SpinState dicke(SpinQuantumNumber j, int two_m) { return SpinState::basis(j, two_m); }

SpinState tetrahedron() {
  const SpinQuantumNumber j(4);
  ComplexVector c = zeros(j);
  c(0) = 0.5;
  c(2) = Complex(0.0, 0.5 * kSqrt2);
  c(4) = 0.5;
  return {j, std::move(c)};
}

SpinState mu_state(Complex mu) {
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag())) {
    throw std::invalid_argument("mu must be finite");
  }
  const SpinQuantumNumber j(4);
  ComplexVector c = zeros(j);
  c(0) = 1.0;
  c(2) = mu;
  c(4) = 1.0;
  return {j, std::move(c)};
}

SpinState spin1(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw std::invalid_argument("spin1: theta must lie in [0, pi]");
  }
  // Multiplying through by sin^2(theta/4) keeps theta = 0 finite.
  const double cq = std::cos(0.25 * theta);
  const double sq = std::sin(0.25 * theta);
  const SpinQuantumNumber j(2);
  ComplexVector c = zeros(j);
  c(0) = -cq * cq;
  c(2) = sq * sq;
  return {j, std::move(c)};
}

SpinState psi52_counterexample() {
  const SpinQuantumNumber j(5);
  ComplexVector c = zeros(j);
  c(index_of(j, -5)) = 0.5;
  c(index_of(j, -3)) = 0.5;
  c(index_of(j, 3)) = 0.5;
  c(index_of(j, 5)) = 0.5;
  return {j, std::move(c)};
}

SpinState qq52() {
  const SpinQuantumNumber j(5);
  ComplexVector c = zeros(j);
  c(index_of(j, -5)) = -std::sqrt(5.0) / 4.0;
  c(index_of(j, -1)) = kSqrt2 / 4.0;
  c(index_of(j, 3)) = 3.0 / 4.0;
  return {j, std::move(c)};
}

SpinState octahedron() {
  const SpinQuantumNumber j(6);
  ComplexVector c = zeros(j);
  c(index_of(j, -4)) = 1.0 / kSqrt2;
  c(index_of(j, 4)) = 1.0 / kSqrt2;
  return {j, std::move(c)};
}

SpinState icosa(double theta) {
  if (!(theta >= 0.0 && theta <= 0.5 * kPi)) {
    throw std::invalid_argument("icosa: theta must lie in [0, pi/2]");
  }
  const SpinQuantumNumber j(12);
  ComplexVector c = zeros(j);
  c(index_of(j, -10)) = std::sqrt(7.0) / 5.0;
  c(index_of(j, 0)) = std::polar(std::sqrt(11.0) / 5.0, theta);
  c(index_of(j, 10)) = std::sqrt(7.0) / 5.0;
  return {j, std::move(c)};
}

SpinState t1_max_degenerate(SpinQuantumNumber j) {
  if (j.two_j() < 2) {
    throw std::invalid_argument("1-anticoherent states need j >= 1");
  }
  if (j.is_integer()) return SpinState::basis(j, 0);
  const double two_j = j.two_j();
  ComplexVector c = zeros(j);
  c(index_of(j, -1)) = std::sqrt(two_j / (two_j + 1.0));
  c(index_of(j, j.two_j())) = std::sqrt(1.0 / (two_j + 1.0));
  return {j, std::move(c)};
}

SpinQuantumNumber t2_family_spin(int g) {
  if (g < 1) throw std::invalid_argument("t2_family: g must be >= 1");
  return SpinQuantumNumber(1 + 3 * g);
}

SpinState t2_family(int g) {
  const SpinQuantumNumber j = t2_family_spin(g);
  const double jv = j.value();
  // m = -(j + 1)/3 = -(1 + g)/2
  const int two_m = -(1 + g);
  ComplexVector c = zeros(j);
  c(index_of(j, two_m)) = std::sqrt(3.0 * jv / (4.0 * jv + 1.0));
  c(index_of(j, j.two_j())) = std::sqrt((jv + 1.0) / (4.0 * jv + 1.0));
  return {j, std::move(c)};
}

SpinState ghz(SpinQuantumNumber j, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5 * kPi)) {
    throw std::invalid_argument("ghz: epsilon must lie in [0, pi/2]");
  }
  if (j.two_j() < 1) throw std::invalid_argument("ghz: j must be positive");
  const int n = j.two_j();
  const double log_cos = std::log(std::cos(epsilon));
  const double log_sin = std::log(std::sin(epsilon));
  ComplexVector c = zeros(j);
  for (int i = 0; i <= n; ++i) {
    // |eps>^{2j} contributes sqrt(C(2j, i)) cos^{2j-i} sin^{i} to m = i - j.
    double log_term = 0.5 * log_binomial(n, i);
    if (n - i > 0) log_term += (n - i) * log_cos;
    if (i > 0) log_term += i * log_sin;
    c(i) = std::exp(log_term);
  }
  c(0) += 1.0;
  return {j, std::move(c)};
}

SpinState appendix_state(AppendixId id) {
  switch (id) {
    case AppendixId::A1: return {SpinQuantumNumber(11), parse_vector(kAppendixA1)};
    case AppendixId::A2: return {SpinQuantumNumber(16), parse_vector(kAppendixA2)};
    case AppendixId::A3: return {SpinQuantumNumber(16), parse_vector(kAppendixA3)};
  }
  throw std::invalid_argument("unknown appendix state");
}

int appendix_order(AppendixId id) { return id == AppendixId::A3 ? 4 : 3; }

std::optional<AppendixId> parse_appendix_id(const std::string& text) {
  if (text == "A1" || text == "a1") return AppendixId::A1;
  if (text == "A2" || text == "a2") return AppendixId::A2;
  if (text == "A3" || text == "a3") return AppendixId::A3;
  return std::nullopt;
}

bool mu_in_domain(Complex mu) {
  const double root = std::sqrt(2.0 / 3.0);
  if (mu.real() < 0.0 || mu.imag() < 0.0) return false;
  if (std::abs(mu - root) > 2.0 * root) return false;
  if (mu.imag() == 0.0 && mu.real() > root) return false;
  return true;
}

std::array<double, 3> mu_spectrum(Complex mu) {
  const double a2 = std::norm(mu);
  const double re = std::abs(mu.real());
  const double denom = 6.0 * (2.0 + a2);
  return {2.0 * a2 / (3.0 * (2.0 + a2)), (6.0 + a2 - 2.0 * std::sqrt(6.0) * re) / denom,
          (6.0 + a2 + 2.0 * std::sqrt(6.0) * re) / denom};
}

std::vector<NamedState> named_states() {
  using MK = MeasureKind;
  std::vector<NamedState> out;

  const double cat_bures = (1.0 + kSqrt2 - kSqrt3) / 2.0;
  out.push_back({"cat", "j=3/2", cat(SpinQuantumNumber(3)),
                 {{1, MK::Variance, 1.0, 1e-12, "vanishing spin expectation"},
                  {1, MK::Purity, 1.0, 1e-12, "vanishing spin expectation"},
                  {2, MK::Purity, 0.75, 1e-12, "published value"},
                  {2, MK::HilbertSchmidt, 0.5, 1e-12, "published value"},
                  {2, MK::Trace, 0.5, 1e-12, "published value"},
                  {2, MK::Bures, cat_bures, 1e-12, "published closed form"}}});
  out.push_back({"cat", "j=2", cat(SpinQuantumNumber(4)),
                 {{1, MK::Variance, 1.0, 1e-12, "vanishing spin expectation"},
                  {1, MK::Bures, 1.0, 1e-12, "vanishing spin expectation"},
                  {2, MK::Bures, cat_bures, 1e-12, "mu = 0 minimum of the mu family"}}});
  out.push_back({"dicke", "j=2 m=-1", dicke(SpinQuantumNumber(4), -2),
                 {{1, MK::Variance, 0.75, 1e-12, "(2j-1)/j^2"},
                  {1, MK::Purity, 0.75, 1e-12, "(2j-1)/j^2"}}});
  out.push_back({"dicke", "j=3 m=3", dicke(SpinQuantumNumber(6), 6),
                 {{1, MK::Purity, 0.0, 1e-12, "coherent state"},
                  {3, MK::Bures, 0.0, 1e-12, "coherent state"},
                  {5, MK::Trace, 0.0, 1e-12, "coherent state"}}});
  out.push_back({"tetrahedron", "", tetrahedron(),
                 {{1, MK::Purity, 1.0, 1e-12, "tetrahedral symmetry"},
                  {2, MK::Purity, 1.0, 1e-12, "tetrahedral symmetry"},
                  {2, MK::HilbertSchmidt, 1.0, 1e-12, "tetrahedral symmetry"},
                  {2, MK::Trace, 1.0, 1e-12, "tetrahedral symmetry"},
                  {2, MK::Bures, 1.0, 1e-12, "tetrahedral symmetry"}}});
  out.push_back({"mu", "mu=1", mu_state(1.0),
                 {{1, MK::Purity, 1.0, 1e-12, "mu family is 1-anticoherent"},
                  {3, MK::HilbertSchmidt, 1.0 - 1.0 / kSqrt3, 1e-10, "mu independent"},
                  {3, MK::Trace, 1.0 / 3.0, 1e-10, "mu independent"},
                  {3, MK::Bures, 1.0 - std::sqrt(2.0 - kSqrt2), 1e-10, "mu independent"}}});
  const double qq_bures =
      1.0 - std::sqrt((-3.0 * std::sqrt(10.0) - std::sqrt(30.0) + 15.0) / (15.0 - 5.0 * kSqrt3));
  out.push_back({"qq52", "", qq52(),
                 {{2, MK::Purity, 0.99, 1e-12, "published value"},
                  {2, MK::HilbertSchmidt, 0.9, 1e-12, "1 - sqrt(1 - A_2^R)"},
                  {2, MK::Bures, qq_bures, 1e-12, "published closed form"},
                  {2, MK::Bures, 0.9247, 1e-4, "published decimal"}}});
  out.push_back({"psi52", "", psi52_counterexample(),
                 {{1, MK::Purity, 0.8, 1e-12, "direct evaluation"},
                  {2, MK::Purity, 0.81, 1e-12, "direct evaluation"},
                  {1, MK::HilbertSchmidt, 1.0 - 1.0 / std::sqrt(5.0), 1e-12, "direct evaluation"},
                  {2, MK::HilbertSchmidt, 1.0 - std::sqrt(0.19), 1e-12, "direct evaluation"}}});
  out.push_back({"octahedron", "", octahedron(),
                 {{3, MK::Purity, 1.0, 1e-12, "octahedral symmetry"},
                  {3, MK::Bures, 1.0, 1e-12, "octahedral symmetry"}}});
  out.push_back({"icosa", "theta=0", icosa(0.0),
                 {{4, MK::Purity, 1.0, 1e-12, "published 4-anticoherent family"}}});
  out.push_back({"icosa", "theta=pi/2", icosa(0.5 * kPi),
                 {{4, MK::Purity, 1.0, 1e-12, "icosahedral symmetry"},
                  {5, MK::Purity, 1.0, 1e-12, "icosahedral symmetry"}}});
  out.push_back({"t1-max-degenerate", "j=4", t1_max_degenerate(SpinQuantumNumber(8)),
                 {{1, MK::Purity, 1.0, 1e-12, "Dicke state |j,0>"}}});
  out.push_back({"t1-max-degenerate", "j=9/2", t1_max_degenerate(SpinQuantumNumber(9)),
                 {{1, MK::Purity, 1.0, 1e-12, "published construction"}}});
  out.push_back({"t2-family", "g=6", t2_family(6),
                 {{2, MK::Purity, 1.0, 1e-10, "published construction"}}});
  out.push_back({"spin1", "theta=pi", spin1(kPi),
                 {{1, MK::Purity, 1.0, 1e-12, "closed form at theta = pi"},
                  {1, MK::HilbertSchmidt, 1.0, 1e-12, "closed form at theta = pi"},
                  {1, MK::Bures, 1.0, 1e-12, "closed form at theta = pi"}}});
  out.push_back({"ghz", "j=2 epsilon=0", ghz(SpinQuantumNumber(4), 0.0),
                 {{1, MK::Purity, 0.0, 1e-12, "separable at epsilon = 0"}}});
  out.push_back({"ghz", "j=2 epsilon=pi/2", ghz(SpinQuantumNumber(4), 0.5 * kPi),
                 {{1, MK::Purity, 1.0, 1e-12, "GHZ state"}}});
  out.push_back({"appendix", "id=A1", appendix_state(AppendixId::A1),
                 {{3, MK::Purity, 1.0, 1e-9, "printed 13-digit coefficients"}}});
  out.push_back({"appendix", "id=A2", appendix_state(AppendixId::A2),
                 {{3, MK::Purity, 1.0, 1e-9, "printed 13-digit coefficients"}}});
  out.push_back({"appendix", "id=A3", appendix_state(AppendixId::A3),
                 {{4, MK::Purity, 1.0, 1e-9, "printed 13-digit coefficients"}}});
  return out;
}

std::vector<std::string> state_names() {
  return {"cat",  "dicke", "tetrahedron",       "mu",        "spin1",
          "psi52", "qq52", "octahedron",        "icosa",     "t1-max-degenerate",
          "t2-family", "ghz", "appendix", "coulomb"};
}

SpinState make_state(const std::string& name, const StateParameters& p) {
  auto need_j = [&]() -> SpinQuantumNumber {
    if (!p.j) throw std::invalid_argument("state '" + name + "' needs a spin (--j or --two-j)");
    return *p.j;
  };
  auto need = [&](const auto& opt, const char* what) {
    if (!opt) throw std::invalid_argument("state '" + name + "' needs --" + std::string(what));
    return *opt;
  };
  if (name == "cat") return cat(need_j());
  if (name == "dicke") return dicke(need_j(), need(p.two_m, "m"));
  if (name == "tetrahedron") return tetrahedron();
  if (name == "mu") return mu_state(need(p.mu, "mu"));
  if (name == "spin1") return spin1(need(p.theta, "theta"));
  if (name == "psi52") return psi52_counterexample();
  if (name == "qq52") return qq52();
  if (name == "octahedron") return octahedron();
  if (name == "icosa") return icosa(need(p.theta, "theta"));
  if (name == "t1-max-degenerate") return t1_max_degenerate(need_j());
  if (name == "t2-family") return t2_family(need(p.g, "g"));
  if (name == "ghz") return ghz(need_j(), need(p.epsilon, "epsilon"));
  if (name == "appendix") {
    const auto id = parse_appendix_id(need(p.id, "id"));
    if (!id) throw std::invalid_argument("appendix id must be A1, A2 or A3");
    return appendix_state(*id);
  }
  if (name == "coulomb") return coulomb_state(need_j(), p.seed.value_or(0));
  throw std::invalid_argument("unknown state name '" + name + "'");
}

}  // namespace anticoh::catalog
