#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anticoh/majorana.hpp"
#include "anticoh/spin.hpp"

namespace anticoh {

/// Malformed or unreadable input/output files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kStateSchemaVersion = 1;

/// JSON form:
///   {"schema_version": 1, "two_j": 3, "coefficients": [[re, im], ...],
///    "name": "...", "provenance": "..."}
/// with coefficients in ascending m.
struct StateDocument {
  SpinState state;
  std::optional<std::string> name;
  std::optional<std::string> provenance;
};

/// Renormalizes when the norm is off by more than 1e-9 and appends a note to
/// `warnings`. Throws IoError on malformed input.
StateDocument parse_state_document(const std::string& json_text,
                                   std::vector<std::string>* warnings = nullptr);
std::string format_state_document(const StateDocument& doc);

std::string read_text_file(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Clustered Majorana points as
///   {"two_j": 4, "points": [{"theta": ..., "phi": ..., "multiplicity": 1}, ...]}
std::string format_points_json(SpinQuantumNumber j, const std::vector<PointCluster>& clusters);
/// CSV with header theta,phi,multiplicity.
std::string format_points_csv(const std::vector<PointCluster>& clusters);

/// Accepts either format above; the spin is the total multiplicity. Throws
/// IoError on malformed input.
PointConfiguration parse_points_document(const std::string& text);

/// 15 significant digits.
std::string format_double(double value);

/// Joins fields with commas, quoting any that contain commas or quotes.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace anticoh
