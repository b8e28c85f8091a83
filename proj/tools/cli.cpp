#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "anticoh/catalog.hpp"
#include "anticoh/io.hpp"
#include "anticoh/majorana.hpp"
#include "anticoh/measures.hpp"
#include "anticoh/search.hpp"
#include "anticoh/sweep.hpp"
#include "json.hpp"

namespace anticoh::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "3", "-1/2", "1.5" -> twice the value.
int parse_twice(const std::string& text, const char* what) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash || text.substr(slash + 1) != "2") throw std::invalid_argument(text);
      return num;
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || 2.0 * v != std::round(2.0 * v)) throw std::invalid_argument(text);
    return static_cast<int>(std::lround(2.0 * v));
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
}

double parse_real(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
}

// "re,im", "a+bi" or a real number.
Complex parse_complex(const std::string& text) {
  if (const auto comma = text.find(','); comma != std::string::npos) {
    return {parse_real(text.substr(0, comma), "mu"), parse_real(text.substr(comma + 1), "mu")};
  }
  if (!text.empty() && text.back() == 'i') {
    const std::string body = text.substr(0, text.size() - 1);
    for (std::size_t pos = body.size(); pos-- > 1;) {
      if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
        const std::string im = body.substr(pos);
        return {parse_real(body.substr(0, pos), "mu"),
                im.size() == 1 ? (im == "-" ? -1.0 : 1.0) : parse_real(im, "mu")};
      }
    }
    return {0.0, body.empty() ? 1.0 : parse_real(body, "mu")};
  }
  return {parse_real(text, "mu"), 0.0};
}

struct SpinInput {
  std::string j;
  std::optional<int> two_j;

  std::optional<SpinQuantumNumber> resolve() const {
    if (two_j) return SpinQuantumNumber(*two_j);
    if (!j.empty()) return SpinQuantumNumber(parse_twice(j, "spin"));
    return std::nullopt;
  }
};

void add_spin_options(CLI::App* cmd, SpinInput& in) {
  auto* j = cmd->add_option("--j", in.j, "spin quantum number, e.g. 5/2");
  auto* tj = cmd->add_option("--two-j", in.two_j, "twice the spin quantum number");
  j->excludes(tj);
}

struct StateInput {
  std::string name;
  std::string file;
  SpinInput spin;
  std::string m;
  std::string mu;
  std::optional<double> theta;
  std::optional<double> epsilon;
  std::optional<int> g;
  std::string id;
  std::optional<std::uint64_t> seed;
};

void add_state_options(CLI::App* cmd, StateInput& in) {
  auto* name = cmd->add_option("--name", in.name, "catalog state name");
  auto* file = cmd->add_option("--file", in.file, "state document (JSON)");
  name->excludes(file);
  add_spin_options(cmd, in.spin);
  cmd->add_option("--m", in.m, "magnetic quantum number for dicke, e.g. -1/2");
  cmd->add_option("--mu", in.mu, "complex mu as re,im or a+bi");
  cmd->add_option("--theta", in.theta, "angle parameter for spin1 and icosa");
  cmd->add_option("--epsilon", in.epsilon, "ghz angle");
  cmd->add_option("--g", in.g, "degeneracy index for t2-family");
  cmd->add_option("--id", in.id, "appendix id A1, A2 or A3");
  cmd->add_option("--seed", in.seed, "seed for coulomb");
}

SpinState resolve_state(const StateInput& in, std::ostream& err) {
  if (!in.file.empty()) {
    std::vector<std::string> warnings;
    StateDocument doc = parse_state_document(read_text_file(in.file), &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return doc.state;
  }
  if (in.name.empty()) throw UsageError("a state is required: use --name or --file");
  catalog::StateParameters p;
  p.j = in.spin.resolve();
  if (!in.m.empty()) p.two_m = parse_twice(in.m, "m");
  if (!in.mu.empty()) p.mu = parse_complex(in.mu);
  p.theta = in.theta;
  p.epsilon = in.epsilon;
  p.g = in.g;
  if (!in.id.empty()) p.id = in.id;
  p.seed = in.seed;
  return catalog::make_state(in.name, p);
}

int resolve_threads(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw UsageError("--threads must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("ANTICOH_THREADS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int n = std::stoi(env, &used);
      if (used == std::string(env).size() && n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("invalid ANTICOH_THREADS '") + env + "'");
  }
  return 1;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

MeasureKind parse_kind(const std::string& text) {
  const auto kind = parse_measure_kind(text);
  if (!kind) throw UsageError("unknown measure kind '" + text + "'");
  return *kind;
}

json state_json(const SpinState& state) {
  json coeffs = json::array();
  for (const Complex& c : state.coefficients()) coeffs.push_back({c.real(), c.imag()});
  return {{"schema_version", kStateSchemaVersion}, {"two_j", state.two_j()}, {"coefficients", coeffs}};
}

// ---------------------------------------------------------------------------

struct MeasureArgs {
  StateInput state;
  std::vector<int> orders;
  std::vector<std::string> kinds;
  std::string output;
};

void cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
  const SpinState state = resolve_state(a.state, err);
  std::vector<MeasureKind> kinds;
  for (const auto& k : a.kinds) kinds.push_back(parse_kind(k));
  const bool default_kinds = kinds.empty();
  if (default_kinds) kinds.assign(kAllMeasureKinds.begin(), kAllMeasureKinds.end());
  std::vector<int> orders = a.orders;
  if (orders.empty()) {
    for (int t = 1; t < state.two_j(); ++t) orders.push_back(t);
  }

  std::string csv = csv_line({"t", "kind", "value", "error"});
  for (int t : orders) {
    for (MeasureKind kind : kinds) {
      if (default_kinds && kind == MeasureKind::Variance && t != 1) continue;
      std::string value, error;
      if (t < 1 || t >= state.two_j()) {
        error = "t outside 1 <= t < 2j";
      } else if (kind == MeasureKind::Variance && t != 1) {
        error = "variance is defined for t = 1 only";
      } else {
        value = format_double(measure(state, t, kind));
      }
      csv += csv_line({std::to_string(t), std::string(to_string(kind)), value, error});
    }
  }
  emit(a.output, csv, out);
}

struct ProfileArgs {
  StateInput state;
  std::string output;
};

void cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.kind = SweepKind::ProfileT;
  spec.state = resolve_state(a.state, err);
  emit(a.output, run_sweep(spec), out);
}

struct SweepArgs {
  std::string spec_file;
  std::string kind;
  std::optional<double> start, stop;
  std::optional<int> count;
  std::optional<double> re_start, re_stop, im_start, im_stop;
  std::optional<int> re_count, im_count;
  std::vector<int> orders;
  StateInput state;
  std::string output;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  if (!a.spec_file.empty()) {
    spec = parse_sweep_spec(read_text_file(a.spec_file));
  } else {
    if (a.kind.empty()) throw UsageError("sweep needs --spec or --kind");
    const auto kind = parse_sweep_kind(a.kind);
    if (!kind) throw UsageError("unknown sweep kind '" + a.kind + "'");
    spec.kind = *kind;
    Grid& main_grid = spec.kind == SweepKind::GhzEpsilon ? spec.epsilon : spec.theta;
    if (a.start) main_grid.start = *a.start;
    if (a.stop) main_grid.stop = *a.stop;
    if (a.count) main_grid.count = *a.count;
    if (a.re_start) spec.mu_re.start = *a.re_start;
    if (a.re_stop) spec.mu_re.stop = *a.re_stop;
    if (a.re_count) spec.mu_re.count = *a.re_count;
    if (a.im_start) spec.mu_im.start = *a.im_start;
    if (a.im_stop) spec.mu_im.stop = *a.im_stop;
    if (a.im_count) spec.mu_im.count = *a.im_count;
    if (auto j = a.state.spin.resolve()) spec.two_j = j->two_j();
    if (!a.orders.empty()) spec.orders = a.orders;
    if (spec.kind == SweepKind::ProfileT) spec.state = resolve_state(a.state, err);
  }
  if (!a.output.empty()) spec.output = a.output;
  const std::string csv = run_sweep(spec);
  emit(spec.output, csv, out);
}

struct MajoranaArgs {
  StateInput state;
  std::string format = "json";
  double tolerance = kDefaultDegeneracyTolerance;
  std::string output;
};

void cmd_majorana(const MajoranaArgs& a, std::ostream& out, std::ostream& err) {
  const SpinState state = resolve_state(a.state, err);
  const auto clusters = cluster_points(state_to_points(state), a.tolerance);
  if (a.format == "json") {
    emit(a.output, format_points_json(state.spin(), clusters), out);
  } else if (a.format == "csv") {
    emit(a.output, format_points_csv(clusters), out);
  } else {
    throw UsageError("--format must be json or csv");
  }
}

struct FromPointsArgs {
  std::string points;
  std::string name;
  std::string output;
};

void cmd_from_points(const FromPointsArgs& a, std::ostream& out) {
  const PointConfiguration config = parse_points_document(read_text_file(a.points));
  StateDocument doc{points_to_state(config), std::nullopt, std::string("from Majorana points")};
  if (!a.name.empty()) doc.name = a.name;
  emit(a.output, format_state_document(doc), out);
}

struct SearchArgs {
  std::string config;
  SpinInput spin;
  std::optional<int> t;
  std::optional<int> g;
  std::optional<std::string> objective;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_iterations;
  std::optional<double> gradient_tolerance;
  std::optional<double> threshold;
  std::optional<int> threads;
  std::string output;
  std::string state_output;
  bool require_converged = false;
};

SearchProblem search_problem(const SearchArgs& a) {
  SearchProblem problem;
  std::optional<SpinQuantumNumber> spin;
  if (!a.config.empty()) {
    json cfg;
    try {
      cfg = json::parse(read_text_file(a.config));
    } catch (const json::parse_error& e) {
      throw IoError(std::string("malformed search config: ") + e.what());
    }
    if (!cfg.is_object()) throw UsageError("search config must be a JSON object");
    try {
      if (cfg.contains("two_j")) spin = SpinQuantumNumber(cfg.at("two_j").get<int>());
      if (cfg.contains("j")) {
        const json& j = cfg.at("j");
        spin = SpinQuantumNumber(j.is_string() ? parse_twice(j.get<std::string>(), "spin")
                                               : parse_twice(std::to_string(j.get<double>()), "spin"));
      }
      if (cfg.contains("t")) problem.t = cfg.at("t").get<int>();
      if (cfg.contains("g")) problem.g = cfg.at("g").get<int>();
      auto& o = problem.options;
      if (cfg.contains("objective")) o.objective = parse_kind(cfg.at("objective").get<std::string>());
      if (cfg.contains("restarts")) o.restarts = cfg.at("restarts").get<int>();
      if (cfg.contains("seed")) o.seed = cfg.at("seed").get<std::uint64_t>();
      if (cfg.contains("max_iterations")) o.max_iterations = cfg.at("max_iterations").get<int>();
      if (cfg.contains("gradient_tolerance")) o.gradient_tolerance = cfg.at("gradient_tolerance").get<double>();
      if (cfg.contains("success_threshold")) o.success_threshold = cfg.at("success_threshold").get<double>();
      if (cfg.contains("threads")) o.threads = cfg.at("threads").get<int>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("invalid search config field: ") + e.what());
    }
  }
  if (auto j = a.spin.resolve()) spin = j;
  if (!spin) throw UsageError("search needs a spin (--j, --two-j or config)");
  problem.spin = *spin;
  if (a.t) problem.t = *a.t;
  if (a.g) problem.g = *a.g;
  auto& o = problem.options;
  if (a.objective) o.objective = parse_kind(*a.objective);
  if (a.restarts) o.restarts = *a.restarts;
  if (a.seed) o.seed = *a.seed;
  if (a.max_iterations) o.max_iterations = *a.max_iterations;
  if (a.gradient_tolerance) o.gradient_tolerance = *a.gradient_tolerance;
  if (a.threshold) o.success_threshold = *a.threshold;
  if (a.threads || a.config.empty()) o.threads = resolve_threads(a.threads);
  return problem;
}

void cmd_search(const SearchArgs& a, std::ostream& out) {
  const SearchProblem problem = search_problem(a);
  const SearchResult r = search_anticoherent(problem);
  json doc = {{"schema_version", 1},
              {"two_j", problem.spin.two_j()},
              {"t", problem.t},
              {"g", problem.g},
              {"objective", std::string(to_string(problem.options.objective))},
              {"restarts", problem.options.restarts},
              {"seed", problem.options.seed},
              {"success_threshold", problem.options.success_threshold},
              {"best_value", r.best_value},
              {"converged", r.converged},
              {"all_stagnated", r.all_stagnated},
              {"iterations", r.iterations},
              {"restart_index", r.restart_index},
              {"restart_values", r.restart_values},
              {"best_state", state_json(r.best_state)}};
  emit(a.output, doc.dump(2) + "\n", out);
  if (!a.state_output.empty()) {
    std::ostringstream note;
    note << "search two_j=" << problem.spin.two_j() << " t=" << problem.t << " g=" << problem.g
         << " seed=" << problem.options.seed;
    write_text_file(a.state_output,
                    format_state_document({r.best_state, std::nullopt, note.str()}));
  }
  if (a.require_converged && !r.converged) {
    throw NotConverged("search did not converge (best value " + format_double(r.best_value) + ")");
  }
}

struct GmaxArgs {
  SpinInput spin_max;
  int t_max = 3;
  std::optional<int> restarts;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_iterations;
  std::optional<int> threads;
  std::string output;
};

void cmd_gmax(const GmaxArgs& a, std::ostream& out) {
  const auto spin = a.spin_max.resolve();
  if (!spin) throw UsageError("gmax needs --j-max or --two-j-max");
  if (spin->two_j() < 2 || spin->two_j() > 20) throw UsageError("gmax needs 1 <= j_max <= 10");
  if (a.t_max < 1 || a.t_max > 5) throw UsageError("gmax needs 1 <= t_max <= 5");
  SearchOptions options;
  if (a.restarts) options.restarts = *a.restarts;
  if (a.seed) options.seed = *a.seed;
  if (a.max_iterations) options.max_iterations = *a.max_iterations;
  options.threads = resolve_threads(a.threads);
  std::string csv = csv_line({"two_j", "t", "g_max", "best_value", "converged"});
  for (const auto& e : gmax_table(spin->two_j(), a.t_max, options)) {
    csv += csv_line({std::to_string(e.two_j), std::to_string(e.t), std::to_string(e.g_max),
                     format_double(e.best_value), e.converged ? "true" : "false"});
  }
  emit(a.output, csv, out);
}

struct CatalogArgs {
  bool names_only = false;
  std::string output;
};

void cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  std::string csv;
  if (a.names_only) {
    csv = csv_line({"name"});
    for (const auto& n : catalog::state_names()) csv += csv_line({n});
  } else {
    csv = csv_line({"name", "parameters", "t", "kind", "expected", "tolerance", "computed", "pass",
                    "source"});
    for (const auto& entry : catalog::named_states()) {
      for (const auto& e : entry.expected) {
        const double v = measure(entry.state, e.t, e.kind);
        const bool pass = std::abs(v - e.value) <= e.tolerance;
        csv += csv_line({entry.name, entry.parameters, std::to_string(e.t),
                         std::string(to_string(e.kind)), format_double(e.value),
                         format_double(e.tolerance), format_double(v), pass ? "true" : "false",
                         e.source});
      }
    }
  }
  emit(a.output, csv, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anticoherence measures, Majorana points and anticoherent-state search", "anticoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "anticoh 0.1.0");

  MeasureArgs measure_args;
  auto* measure_cmd = app.add_subcommand("measure", "anticoherence measures of one state");
  add_state_options(measure_cmd, measure_args.state);
  measure_cmd->add_option("--t", measure_args.orders, "orders, e.g. 1,2,3")->delimiter(',');
  measure_cmd->add_option("--kinds", measure_args.kinds, "variance,purity,hs,trace,bures")->delimiter(',');
  measure_cmd->add_option("--output", measure_args.output, "CSV path (default stdout)");

  ProfileArgs profile_args;
  auto* profile_cmd = app.add_subcommand("profile", "all measures at every order");
  add_state_options(profile_cmd, profile_args.state);
  profile_cmd->add_option("--output", profile_args.output, "CSV path (default stdout)");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "figure-data sweeps as CSV");
  sweep_cmd->add_option("--spec", sweep_args.spec_file, "sweep spec (JSON)");
  sweep_cmd->add_option("--kind", sweep_args.kind, "spin1-theta, mu-grid, ghz-epsilon, profile-t");
  sweep_cmd->add_option("--start", sweep_args.start, "theta or epsilon grid start");
  sweep_cmd->add_option("--stop", sweep_args.stop, "theta or epsilon grid stop");
  sweep_cmd->add_option("--count", sweep_args.count, "theta or epsilon grid size");
  sweep_cmd->add_option("--re-start", sweep_args.re_start, "Re(mu) grid start");
  sweep_cmd->add_option("--re-stop", sweep_args.re_stop, "Re(mu) grid stop");
  sweep_cmd->add_option("--re-count", sweep_args.re_count, "Re(mu) grid size");
  sweep_cmd->add_option("--im-start", sweep_args.im_start, "Im(mu) grid start");
  sweep_cmd->add_option("--im-stop", sweep_args.im_stop, "Im(mu) grid stop");
  sweep_cmd->add_option("--im-count", sweep_args.im_count, "Im(mu) grid size");
  sweep_cmd->add_option("--t", sweep_args.orders, "orders for ghz-epsilon")->delimiter(',');
  add_state_options(sweep_cmd, sweep_args.state);
  sweep_cmd->add_option("--output", sweep_args.output, "CSV path (default stdout)");

  MajoranaArgs majorana_args;
  auto* majorana_cmd = app.add_subcommand("majorana", "Majorana points of a state");
  add_state_options(majorana_cmd, majorana_args.state);
  majorana_cmd->add_option("--format", majorana_args.format, "json or csv");
  majorana_cmd->add_option("--tol", majorana_args.tolerance, "clustering tolerance (radians)");
  majorana_cmd->add_option("--output", majorana_args.output, "output path (default stdout)");

  FromPointsArgs from_points_args;
  auto* from_points_cmd = app.add_subcommand("from-points", "state document from Majorana points");
  from_points_cmd->add_option("--points", from_points_args.points, "points file (JSON or CSV)")->required();
  from_points_cmd->add_option("--name", from_points_args.name, "name stored in the document");
  from_points_cmd->add_option("--output", from_points_args.output, "output path (default stdout)");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "degeneracy-constrained anticoherent-state search");
  search_cmd->add_option("--config", search_args.config, "search config (JSON)");
  add_spin_options(search_cmd, search_args.spin);
  search_cmd->add_option("--t", search_args.t, "order");
  search_cmd->add_option("--g", search_args.g, "number of pinned lowest-m coefficients");
  search_cmd->add_option("--objective", search_args.objective, "purity, hs, trace or bures");
  search_cmd->add_option("--restarts", search_args.restarts, "random restarts");
  search_cmd->add_option("--seed", search_args.seed, "64-bit seed");
  search_cmd->add_option("--max-iters", search_args.max_iterations, "iterations per restart");
  search_cmd->add_option("--grad-tol", search_args.gradient_tolerance, "stagnation gradient norm");
  search_cmd->add_option("--threshold", search_args.threshold, "success threshold on 1 - A");
  search_cmd->add_option("--threads", search_args.threads, "worker threads");
  search_cmd->add_option("--output", search_args.output, "result JSON path (default stdout)");
  search_cmd->add_option("--state-output", search_args.state_output, "state document of the best state");
  search_cmd->add_flag("--require-converged", search_args.require_converged, "exit 3 unless converged");

  GmaxArgs gmax_args;
  auto* gmax_cmd = app.add_subcommand("gmax", "largest Majorana degeneracy table as CSV");
  gmax_cmd->add_option("--j-max", gmax_args.spin_max.j, "largest spin, e.g. 3");
  gmax_cmd->add_option("--two-j-max", gmax_args.spin_max.two_j, "twice the largest spin");
  gmax_cmd->add_option("--t-max", gmax_args.t_max, "largest order");
  gmax_cmd->add_option("--restarts", gmax_args.restarts, "random restarts per cell");
  gmax_cmd->add_option("--seed", gmax_args.seed, "64-bit seed");
  gmax_cmd->add_option("--max-iters", gmax_args.max_iterations, "iterations per restart");
  gmax_cmd->add_option("--threads", gmax_args.threads, "worker threads");
  gmax_cmd->add_option("--output", gmax_args.output, "CSV path (default stdout)");

  CatalogArgs catalog_args;
  auto* catalog_cmd = app.add_subcommand("catalog", "named states and their expected properties");
  catalog_cmd->add_flag("--names", catalog_args.names_only, "list state names only");
  catalog_cmd->add_option("--output", catalog_args.output, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (measure_cmd->parsed()) cmd_measure(measure_args, out, err);
    else if (profile_cmd->parsed()) cmd_profile(profile_args, out, err);
    else if (sweep_cmd->parsed()) cmd_sweep(sweep_args, out, err);
    else if (majorana_cmd->parsed()) cmd_majorana(majorana_args, out, err);
    else if (from_points_cmd->parsed()) cmd_from_points(from_points_args, out);
    else if (search_cmd->parsed()) cmd_search(search_args, out);
    else if (gmax_cmd->parsed()) cmd_gmax(gmax_args, out);
    else if (catalog_cmd->parsed()) cmd_catalog(catalog_args, out);
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << "\n";
    return kNotConverged;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace anticoh::cli
