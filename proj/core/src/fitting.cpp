#include "rlab/fitting.hpp"

#include <array>
#include <cmath>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

// solve the 3x3 symmetric normal equations by Gaussian elimination
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> a,
                             std::array<double, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (a[col][col] == 0.0) throw invalid_input("exponent fit is degenerate");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return {b[0] / a[0][0], b[1] / a[1][1], b[2] / a[2][2]};
}

}  // namespace

double FitResult::evaluate(double N) const {
  double v = amplitude * std::pow(N, exponent);
  if (model == FitModel::power_log) v *= std::pow(std::log(N), log_power.value_or(1.0));
  return v;
}

FitResult fit_exponent(std::span<const ExperimentRecord> records, FitModel model,
                       bool free_log_power) {
  std::size_t min_count = model == FitModel::pure_power ? 3 : 4;
  if (records.size() < min_count)
    throw invalid_input("exponent fit needs at least " + std::to_string(min_count) +
                        " records");
  for (const auto& r : records) {
    if (!(r.value > 0.0)) throw invalid_input("exponent fit requires positive values");
    if (r.N < 2) throw invalid_input("exponent fit requires N >= 2");
  }

  FitResult fit;
  fit.model = model;
  std::size_t count = records.size();

  if (model == FitModel::pure_power || !free_log_power) {
    // regress y = log v (- log log N for the fixed-log model) on [1, log N]
    double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto& r : records) {
      double x = std::log(double(r.N));
      double y = std::log(r.value);
      if (model == FitModel::power_log) y -= std::log(std::log(double(r.N)));
      s1 += 1;
      sx += x;
      sxx += x * x;
      sy += y;
      sxy += x * y;
    }
    double det = s1 * sxx - sx * sx;
    if (det == 0.0) throw invalid_input("exponent fit is degenerate");
    double alpha = (s1 * sxy - sx * sy) / det;
    double loga = (sxx * sy - sx * sxy) / det;
    fit.exponent = alpha;
    fit.amplitude = std::exp(loga);
    if (model == FitModel::power_log) fit.log_power = 1.0;
  } else {
    // three-parameter fit with the log exponent free
    std::array<std::array<double, 3>, 3> a{};
    std::array<double, 3> b{};
    for (const auto& r : records) {
      double x1 = std::log(double(r.N));
      double x2 = std::log(std::log(double(r.N)));
      double y = std::log(r.value);
      std::array<double, 3> row{1.0, x1, x2};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] += row[std::size_t(i)] * row[std::size_t(j)];
        b[std::size_t(i)] += row[std::size_t(i)] * y;
      }
    }
    auto sol = solve3(a, b);
    fit.amplitude = std::exp(sol[0]);
    fit.exponent = sol[1];
    fit.log_power = sol[2];
  }

  for (std::size_t i = 0; i < count; ++i) {
    double predicted = fit.evaluate(double(records[i].N));
    fit.residual =
        std::max(fit.residual, std::abs(predicted - records[i].value) / records[i].value);
  }
  return fit;
}

}  // namespace rlab
