#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlab/records.hpp"

namespace rlab {

// A measurable quantity for an N-scan. Registered names:
//   opnorm            restriction constant via matrix-free power iteration
//   ratio_window      interference-construction L^p ratio over the window
//   cylinder_ratio    two-dimensional cylinder L^2 ratio over its set
//   moment_ratio      moment-curve L^6 ratio over its set
//   cc_window / cc_full   constant-coefficient L^p ratios
//   row_sum           max row sum of the squared stationary model
//   schur_witness     max row sum of the stationary model itself
struct QuantityRequest {
  std::string name;
  int k = 3;
  std::optional<double> p;
};

struct ScanError {
  int N = 0;
  std::string what;
  bool convergence = false;  // true when the failure was a convergence error
};

struct ScanOutcome {
  std::vector<ExperimentRecord> records;
  std::vector<ScanError> errors;
};

std::vector<std::string> scan_quantities();

// One record per N, dispatched to the owning module; per-N failures are
// collected and the scan continues. Deterministic given settings.
ScanOutcome run_scan(const QuantityRequest& quantity, const std::vector<int>& Ns,
                     const Settings& settings, bool with_timestamp = true);

}  // namespace rlab
