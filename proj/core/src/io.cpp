#include "anticoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace anticoh {

namespace {

using nlohmann::json;

constexpr double kNormTolerance = 1e-9;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw IoError(std::string("missing numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  return out;
}

double parse_number(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw IoError("malformed number '" + text + "'");
  }
}

PointConfiguration points_from_rows(const std::vector<std::tuple<double, double, int>>& rows) {
  std::vector<BlochPoint> points;
  for (const auto& [theta, phi, mult] : rows) {
    if (mult < 1) throw IoError("point multiplicity must be >= 1");
    if (!std::isfinite(theta) || !std::isfinite(phi)) throw IoError("non-finite point angle");
    for (int i = 0; i < mult; ++i) points.emplace_back(theta, phi);
  }
  if (points.empty()) throw IoError("points document has no points");
  const int two_j = static_cast<int>(points.size());
  return PointConfiguration(SpinQuantumNumber(two_j), std::move(points));
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

StateDocument parse_state_document(const std::string& json_text,
                                   std::vector<std::string>* warnings) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw IoError("state document must be a JSON object");
  if (doc.contains("schema_version")) {
    if (!doc.at("schema_version").is_number_integer() ||
        doc.at("schema_version").get<int>() != kStateSchemaVersion) {
      throw IoError("unsupported state schema_version");
    }
  }
  if (!doc.contains("two_j") || !doc.at("two_j").is_number_integer()) {
    throw IoError("state document needs an integer 'two_j'");
  }
  const int two_j = doc.at("two_j").get<int>();
  if (two_j < 1) throw IoError("two_j must be >= 1");
  if (!doc.contains("coefficients") || !doc.at("coefficients").is_array()) {
    throw IoError("state document needs a 'coefficients' array");
  }
  const json& coeffs = doc.at("coefficients");
  if (static_cast<int>(coeffs.size()) != two_j + 1) {
    throw IoError("expected " + std::to_string(two_j + 1) + " coefficients, found " +
                  std::to_string(coeffs.size()));
  }
  ComplexVector c(two_j + 1);
  for (int i = 0; i <= two_j; ++i) {
    const json& pair = coeffs.at(i);
    if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() ||
        !pair.at(1).is_number()) {
      throw IoError("coefficient " + std::to_string(i) + " must be a [re, im] pair");
    }
    c(i) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  if (!c.allFinite()) throw IoError("coefficients must be finite");
  const double norm = c.norm();
  if (norm == 0.0) throw IoError("state has zero norm");
  if (std::abs(norm - 1.0) > kNormTolerance && warnings != nullptr) {
    warnings->push_back("state norm " + format_double(norm) + " renormalized to 1");
  }
  StateDocument out{SpinState(SpinQuantumNumber(two_j), c / norm), std::nullopt, std::nullopt};
  if (doc.contains("name") && doc.at("name").is_string()) out.name = doc.at("name").get<std::string>();
  if (doc.contains("provenance") && doc.at("provenance").is_string()) {
    out.provenance = doc.at("provenance").get<std::string>();
  }
  return out;
}

std::string format_state_document(const StateDocument& doc) {
  json out;
  out["schema_version"] = kStateSchemaVersion;
  out["two_j"] = doc.state.two_j();
  json coeffs = json::array();
  for (const Complex& c : doc.state.coefficients()) coeffs.push_back({c.real(), c.imag()});
  out["coefficients"] = std::move(coeffs);
  if (doc.name) out["name"] = *doc.name;
  if (doc.provenance) out["provenance"] = *doc.provenance;
  return out.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string format_points_json(SpinQuantumNumber j, const std::vector<PointCluster>& clusters) {
  json out;
  out["two_j"] = j.two_j();
  json points = json::array();
  for (const auto& c : clusters) {
    points.push_back({{"theta", c.point.theta()},
                      {"phi", c.point.phi()},
                      {"multiplicity", c.multiplicity}});
  }
  out["points"] = std::move(points);
  return out.dump(2) + "\n";
}

std::string format_points_csv(const std::vector<PointCluster>& clusters) {
  std::string out = csv_line({"theta", "phi", "multiplicity"});
  for (const auto& c : clusters) {
    out += csv_line({format_double(c.point.theta()), format_double(c.point.phi()),
                     std::to_string(c.multiplicity)});
  }
  return out;
}

PointConfiguration parse_points_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw IoError("empty points document");
  std::vector<std::tuple<double, double, int>> rows;

  if (text[first] == '{') {
    const json doc = parse_json(text);
    if (!doc.contains("points") || !doc.at("points").is_array()) {
      throw IoError("points document needs a 'points' array");
    }
    for (const json& p : doc.at("points")) {
      if (!p.is_object()) throw IoError("each point must be an object");
      int mult = 1;
      if (p.contains("multiplicity")) {
        if (!p.at("multiplicity").is_number_integer()) throw IoError("multiplicity must be an integer");
        mult = p.at("multiplicity").get<int>();
      }
      rows.emplace_back(number_field(p, "theta"), number_field(p, "phi"), mult);
    }
    auto config = points_from_rows(rows);
    if (doc.contains("two_j") && doc.at("two_j") != config.spin().two_j()) {
      throw IoError("two_j does not match the total point multiplicity");
    }
    return config;
  }

  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int theta_col = 0, phi_col = 1, mult_col = -1;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line, ',');
    if (!header_seen) {
      header_seen = true;
      theta_col = phi_col = mult_col = -1;
      for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
        if (fields[i] == "theta") theta_col = i;
        if (fields[i] == "phi") phi_col = i;
        if (fields[i] == "multiplicity") mult_col = i;
      }
      if (theta_col < 0 || phi_col < 0) throw IoError("points CSV header needs theta and phi");
      continue;
    }
    const int needed = std::max({theta_col, phi_col, mult_col});
    if (static_cast<int>(fields.size()) <= needed) throw IoError("short points CSV row");
    int mult = 1;
    if (mult_col >= 0) {
      const double m = parse_number(fields[mult_col]);
      if (m != std::floor(m)) throw IoError("multiplicity must be an integer");
      mult = static_cast<int>(m);
    }
    rows.emplace_back(parse_number(fields[theta_col]), parse_number(fields[phi_col]), mult);
  }
  return points_from_rows(rows);
}

}  // namespace anticoh
