#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rlab {

// Settings fingerprint carried by every record so a run can be reproduced.
struct Settings {
  double c_small = 0.1;
  double block_fraction = 0.5;  // the dyadic block constant
  double rho = 8.0;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

struct ExperimentRecord {
  std::string quantity;
  int N = 0;
  int k = 0;
  std::optional<double> p;
  double value = 0.0;
  Settings settings;
  std::string timestamp;  // ISO-8601 UTC, or empty when suppressed
};

// Current UTC time in ISO-8601 (seconds resolution).
std::string iso_timestamp_now();

// Comma-separated text, header row
//   quantity,N,k,p,value,c_small,C_k,rho,tol,seed,timestamp
// numbers in shortest round-trip form; p empty when absent. Appends when
// append = true (header only written for a fresh file).
void persist(const std::vector<ExperimentRecord>& records, const std::string& path,
             bool append = false);

// Loads a record file; raises invalid_input naming the line for malformed rows.
std::vector<ExperimentRecord> load_records(const std::string& path);

// JSON-shaped export of the same fields.
std::string records_to_json(const std::vector<ExperimentRecord>& records);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace rlab
