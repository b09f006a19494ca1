#pragma once

#include <optional>
#include <string>

#include "cfdim/solver.hpp"

namespace cfdim {

inline constexpr const char* kVersion = "0.1.0";

// Pressure-sum convention tag attached to every numeric output: weights
// are |q|^{-2t} |1+a|^{+/-2t}.
inline constexpr const char* kConvention = "q^-2t";

// One bounds computation, ready for text/JSON/CSV emission.  JSON
// round-trips losslessly; with include_timing off the serialized form is
// byte-stable across identical runs.
struct RunRecord {
  std::string command = "bounds";
  std::string alphabet;
  std::optional<long long> ceiling;
  int k = 0;
  std::optional<double> t_minus;
  std::string t_minus_reason;
  std::optional<double> t_plus;
  std::string t_plus_reason;
  std::uint64_t offending_minus = 0;
  std::uint64_t offending_plus = 0;
  bool plus_clamped = false;
  double tolerance = 0;
  std::uint64_t term_count = 0;
  int threads = 0;
  std::string mode;  // "stored" | "streamed"
  int iterations_minus = 0;
  int iterations_plus = 0;
  std::optional<double> mu_sum_at_plus;
  std::optional<double> tail_estimate;
  std::optional<double> wall_ms;  // absent under --stable-output
  std::string version = kVersion;
  std::string convention = kConvention;

  bool operator==(const RunRecord&) const = default;
};

RunRecord make_run_record(const DimensionBounds& db, const std::string& alphabet_text,
                          std::optional<long long> ceiling, int threads, bool include_timing);

std::string to_json_string(const RunRecord& r);
std::string to_json_array(const std::vector<RunRecord>& records);
RunRecord run_record_from_json(const std::string& json_text);

std::string run_record_csv_header();
std::string to_csv_row(const RunRecord& r);

std::string to_text(const RunRecord& r);

}  // namespace cfdim
