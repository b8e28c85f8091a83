#include "anticoh/sweep.hpp"

#include <cmath>

#include "anticoh/catalog.hpp"
#include "anticoh/io.hpp"
#include "anticoh/measures.hpp"
#include "anticoh/reductions.hpp"
#include "json.hpp"

namespace anticoh {

namespace {

using nlohmann::json;

Grid grid_from_json(const json& obj, const char* key, Grid fallback) {
  if (!obj.contains(key)) return fallback;
  const json& g = obj.at(key);
  if (!g.is_object()) throw std::invalid_argument(std::string("'") + key + "' must be an object");
  if (g.contains("start")) fallback.start = g.at("start").get<double>();
  if (g.contains("stop")) fallback.stop = g.at("stop").get<double>();
  if (g.contains("count")) fallback.count = g.at("count").get<int>();
  return fallback;
}

std::optional<SpinQuantumNumber> spin_from_json(const json& obj) {
  if (obj.contains("two_j")) return SpinQuantumNumber(obj.at("two_j").get<int>());
  if (obj.contains("j")) {
    const json& j = obj.at("j");
    if (j.is_string()) return SpinQuantumNumber::parse(j.get<std::string>());
    if (j.is_number()) return SpinQuantumNumber(static_cast<int>(std::lround(2.0 * j.get<double>())));
    throw std::invalid_argument("'j' must be a string or number");
  }
  return std::nullopt;
}

catalog::StateParameters parameters_from_json(const json& obj) {
  catalog::StateParameters p;
  p.j = spin_from_json(obj);
  if (obj.contains("two_m")) p.two_m = obj.at("two_m").get<int>();
  if (obj.contains("m")) p.two_m = static_cast<int>(std::lround(2.0 * obj.at("m").get<double>()));
  if (obj.contains("mu")) {
    const json& mu = obj.at("mu");
    if (mu.is_array() && mu.size() == 2) {
      p.mu = Complex(mu.at(0).get<double>(), mu.at(1).get<double>());
    } else if (mu.is_number()) {
      p.mu = Complex(mu.get<double>(), 0.0);
    } else {
      throw std::invalid_argument("'mu' must be a number or [re, im]");
    }
  }
  if (obj.contains("theta")) p.theta = obj.at("theta").get<double>();
  if (obj.contains("epsilon")) p.epsilon = obj.at("epsilon").get<double>();
  if (obj.contains("g")) p.g = obj.at("g").get<int>();
  if (obj.contains("id")) p.id = obj.at("id").get<std::string>();
  if (obj.contains("seed")) p.seed = obj.at("seed").get<std::uint64_t>();
  return p;
}

std::string measures_row(const SpinState& state, int t) {
  const auto values = spectrum(reduced_density(state, t));
  return format_double(a_purity(state, t)) + "," +
         format_double(a_distance_from_spectrum(values, MeasureKind::HilbertSchmidt)) + "," +
         format_double(a_distance_from_spectrum(values, MeasureKind::Trace)) + "," +
         format_double(a_distance_from_spectrum(values, MeasureKind::Bures));
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::Spin1Theta: return "spin1-theta";
    case SweepKind::MuGrid: return "mu-grid";
    case SweepKind::GhzEpsilon: return "ghz-epsilon";
    case SweepKind::ProfileT: return "profile-t";
  }
  return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view text) {
  for (SweepKind k : {SweepKind::Spin1Theta, SweepKind::MuGrid, SweepKind::GhzEpsilon,
                      SweepKind::ProfileT}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::vector<double> Grid::values() const {
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("grid bounds must be finite");
  if (count == 1) return {start};
  if (!(start < stop)) throw std::invalid_argument("grid must be increasing (start < stop)");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = i == count - 1 ? stop : start + (stop - start) * i / (count - 1);
  }
  return out;
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed sweep spec: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    throw std::invalid_argument("sweep spec needs a string 'kind'");
  }
  SweepSpec spec;
  const auto kind = parse_sweep_kind(doc.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown sweep kind '" + doc.at("kind").get<std::string>() + "'");
  spec.kind = *kind;
  try {
    spec.theta = grid_from_json(doc, "theta", spec.theta);
    spec.mu_re = grid_from_json(doc, "mu_re", spec.mu_re);
    spec.mu_im = grid_from_json(doc, "mu_im", spec.mu_im);
    spec.epsilon = grid_from_json(doc, "epsilon", spec.epsilon);
    if (auto j = spin_from_json(doc)) spec.two_j = j->two_j();
    if (doc.contains("t")) {
      const json& t = doc.at("t");
      spec.orders = t.is_array() ? t.get<std::vector<int>>() : std::vector<int>{t.get<int>()};
    }
    if (doc.contains("output")) spec.output = doc.at("output").get<std::string>();
    if (doc.contains("state_file")) {
      spec.state = parse_state_document(read_text_file(doc.at("state_file").get<std::string>())).state;
    } else if (doc.contains("state")) {
      const json& s = doc.at("state");
      if (!s.is_object() || !s.contains("name")) {
        throw std::invalid_argument("'state' must be an object with a 'name'");
      }
      spec.state = catalog::make_state(s.at("name").get<std::string>(), parameters_from_json(s));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid sweep spec field: ") + e.what());
  }
  if (spec.kind == SweepKind::ProfileT && !spec.state) {
    throw std::invalid_argument("profile-t sweep needs 'state' or 'state_file'");
  }
  return spec;
}

std::string run_sweep(const SweepSpec& spec) {
  std::string out;
  switch (spec.kind) {
    case SweepKind::Spin1Theta: {
      out = csv_line({"theta", "variance", "purity", "hs", "trace", "bures"});
      for (double theta : spec.theta.values()) {
        const SpinState s = catalog::spin1(theta);
        out += format_double(theta) + "," + format_double(a1_variance(s)) + "," + measures_row(s, 1) + "\n";
      }
      break;
    }
    case SweepKind::MuGrid: {
      out = csv_line({"mu_re", "mu_im", "purity", "hs", "trace", "bures", "lambda1", "lambda2",
                      "lambda3"});
      const auto im_values = spec.mu_im.values();
      for (double re : spec.mu_re.values()) {
        for (double im : im_values) {
          const Complex mu(re, im);
          if (!catalog::mu_in_domain(mu)) continue;
          const SpinState s = catalog::mu_state(mu);
          const auto lambda = spectrum(reduced_density(s, 2));
          out += format_double(re) + "," + format_double(im) + "," + measures_row(s, 2);
          for (double l : lambda) out += "," + format_double(l);
          out += "\n";
        }
      }
      break;
    }
    case SweepKind::GhzEpsilon: {
      const SpinQuantumNumber j(spec.two_j);
      if (spec.orders.empty()) throw std::invalid_argument("ghz sweep needs at least one order");
      for (int t : spec.orders) {
        if (t < 1 || t >= j.two_j()) throw std::invalid_argument("ghz sweep order outside 1 <= t < 2j");
      }
      out = csv_line({"epsilon", "t", "purity", "hs", "trace", "bures"});
      for (double eps : spec.epsilon.values()) {
        const SpinState s = catalog::ghz(j, eps);
        for (int t : spec.orders) {
          out += format_double(eps) + "," + std::to_string(t) + "," + measures_row(s, t) + "\n";
        }
      }
      break;
    }
    case SweepKind::ProfileT: {
      if (!spec.state) throw std::invalid_argument("profile-t sweep needs a state");
      out = csv_line({"t", "variance", "purity", "hs", "trace", "bures"});
      const MeasureProfile profile = measure_profile(*spec.state);
      for (const auto& row : profile.orders) {
        out += std::to_string(row.t) + "," + (row.variance ? format_double(*row.variance) : "") + "," +
               format_double(row.purity) + "," + format_double(row.hilbert_schmidt) + "," +
               format_double(row.trace) + "," + format_double(row.bures) + "\n";
      }
      break;
    }
  }
  return out;
}

}  // namespace anticoh
