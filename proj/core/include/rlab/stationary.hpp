#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "rlab/kernel_matrix.hpp"
#include "rlab/quadrature.hpp"

namespace rlab {

// Leading-order model for the Gram tail on the dyadic block
// [block_fraction * N, N]: entries of magnitude
// |C| / (|n-m|^{1/2} |n+m|^{1/(2(k-1))}) with the explicit critical-point
// phase, supported where |n - m| >= N^{1/(k-1)}.
struct StationaryModel {
  int k = 3;
  double N = 0.0;
  std::complex<double> leading_constant{0.63, 0.63};  // refit via fit_stationary_constant
  double block_fraction = 0.5;

  double threshold() const { return std::pow(N, 1.0 / double(k - 1)); }
  int block_lo() const { return int(std::ceil(block_fraction * N)); }
  int block_hi() const { return int(N); }
  int block_size() const { return block_hi() - block_lo() + 1; }
};

// Pair phase (n - m)(x - (n + m) x^k / k) in cycles, its critical point
// x0 = (n+m)^{-1/(k-1)}, and the phase value at the critical point.
double pair_phase(int n, int m, int k, double x);
double pair_critical_point(int n, int m, int k);
double pair_critical_phase(int n, int m, int k);  // (k-1)(n-m) / (k (n+m)^{1/(k-1)})

// lambda = (m^2 - n^2) / (n + m)^{k/(k-1)}; the rescaled frequency of the
// critical-point bump.
double pair_lambda(int n, int m, int k);

// Model entry; zero on the diagonal and below the threshold. Indices must
// lie inside the block.
std::complex<double> stationary_model_entry(int n, int m, const StationaryModel& model);

// True oscillatory integral of e(pair_phase) against the plateau bump
// eta((n+m)^{1/(k-1)} (x - x0)) with support half-width delta (scaled units).
std::complex<double> stationary_pair_integral(int n, int m, int k, double eta_delta,
                                              double rho = 8.0);

// Complement check: integral over [0, 1] of e(pair_phase) (1 - eta) dx.
std::complex<double> nonstationary_integral(int n, int m, int k, double eta_delta,
                                            double rho = 8.0);

// Deterministic stationary pairs with lambda spread over a geometric ladder
// in [lambda_lo, lambda_hi]; matched ladders at different N make the fitted
// constants comparable.
std::vector<std::pair<int, int>> stationary_sample_pairs(int N, int k,
                                                         double block_fraction,
                                                         int count, double lambda_lo,
                                                         double lambda_hi);

struct StationaryFit {
  std::complex<double> constant;        // fitted leading constant
  double max_scaled_residual = 0.0;     // max |I - model| * |n - m|
  int samples = 0;
};

// Least-squares fit of the leading constant from true integrals, after
// removing the critical-point phase and magnitude law; a 1/sqrt(lambda)
// regressor absorbs the next-order term.
StationaryFit fit_stationary_constant(int N, int k, double block_fraction,
                                      const std::vector<std::pair<int, int>>& pairs,
                                      double eta_delta, double rho = 8.0);

// d_{n,m} = sum_x c_{n,x} c_{x,m} over the integer block (exact double loop).
std::complex<double> correlation_entry(int n, int m, const StationaryModel& model);

// Dense model matrix on the block.
KernelMatrix stationary_model_matrix(const StationaryModel& model);

struct CorrelationSummary {
  double max_row_sum = 0.0;        // max_n sum_m |d_{n,m}|
  double near_max_scaled = 0.0;    // max |d| N^{1/(k-1)} over |n-m| <= N^{(2k-1)/(3(k-1))}
  double far_max_scaled = 0.0;     // max |d| |n-m|^{3/2} / N^{(2k-3)/(2(k-1))} beyond
  bool far_regime_empty = true;
};

// Full correlation matrix scan: row sums and the two normalized band
// quantities for the near/far index-separation regimes.
CorrelationSummary correlation_summary(const StationaryModel& model);

// max_n sum_m |c_{n,m}|: the row-sum test alone, for comparison against
// N^{(k-2)/(2(k-1))} (it is too weak by exactly that factor).
double schur_row_sum_witness(const StationaryModel& model);

}  // namespace rlab
