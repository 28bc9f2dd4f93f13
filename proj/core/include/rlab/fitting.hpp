#pragma once

#include <optional>
#include <span>

#include "rlab/records.hpp"

namespace rlab {

enum class FitModel { pure_power, power_log };

struct FitResult {
  double exponent = 0.0;   // alpha in value ~ amplitude * N^alpha (* log-term)
  double amplitude = 0.0;
  std::optional<double> log_power;  // power_log only
  double residual = 0.0;   // max relative deviation over the fit grid
  FitModel model = FitModel::pure_power;

  double evaluate(double N) const;
};

// Log-log least squares of value against N. pure_power needs >= 3 records,
// power_log >= 4. power_log fits value ~ A N^alpha log(N) by default (the
// log exponent fixed to 1); free_log_power releases it as a third parameter.
FitResult fit_exponent(std::span<const ExperimentRecord> records, FitModel model,
                       bool free_log_power = false);

}  // namespace rlab
