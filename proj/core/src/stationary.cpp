#include "rlab/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rlab/errors.hpp"
#include "rlab/sums.hpp"

namespace rlab {
namespace {

void check_block(int n, int m, const StationaryModel& model) {
  if (n < model.block_lo() || n > model.block_hi() || m < model.block_lo() ||
      m > model.block_hi())
    throw invalid_input("index outside the dyadic block");
}

double entry_magnitude(int n, int m, const StationaryModel& model) {
  double dn = std::abs(double(n) - double(m));
  double s = double(n) + double(m);
  return 1.0 / (std::sqrt(dn) * std::pow(s, 0.5 / double(model.k - 1)));
}

}  // namespace

double pair_phase(int n, int m, int k, double x) {
  double xk = 1.0;
  for (int i = 0; i < k; ++i) xk *= x;
  return (double(n) - double(m)) * (x - (double(n) + double(m)) * xk / double(k));
}

double pair_critical_point(int n, int m, int k) {
  return std::pow(double(n) + double(m), -1.0 / double(k - 1));
}

double pair_critical_phase(int n, int m, int k) {
  return double(k - 1) * (double(n) - double(m)) /
         (double(k) * std::pow(double(n) + double(m), 1.0 / double(k - 1)));
}

double pair_lambda(int n, int m, int k) {
  double s = double(n) + double(m);
  return (double(m) * m - double(n) * n) / std::pow(s, double(k) / double(k - 1));
}

std::complex<double> stationary_model_entry(int n, int m, const StationaryModel& model) {
  check_block(n, m, model);
  if (n == m || std::abs(n - m) < model.threshold()) return 0.0;
  std::complex<double> c = (m < n) ? std::conj(model.leading_constant)
                                   : model.leading_constant;
  return c * entry_magnitude(n, m, model) * e(pair_critical_phase(n, m, model.k));
}

std::complex<double> stationary_pair_integral(int n, int m, int k, double eta_delta,
                                              double rho) {
  if (n == m) throw invalid_input("stationary integral requires n != m");
  double x0 = pair_critical_point(n, m, k);
  double scale = 1.0 / x0;  // (n+m)^{1/(k-1)}
  Cutoff cutoff = Cutoff::plateau_at(x0, scale, eta_delta);
  double lo = cutoff.bump.support_lo();
  double hi = cutoff.bump.support_hi();
  // frequency of the pair phase over the support
  double fmax = 0.0;
  for (int i = 0; i <= 32; ++i) {
    double x = lo + (hi - lo) * i / 32.0;
    double xk1 = 1.0;
    for (int j = 0; j < k - 1; ++j) xk1 *= x;
    fmax = std::max(fmax, std::abs(double(n) - double(m)) *
                              std::abs(1.0 - (double(n) + double(m)) * xk1));
  }
  QuadratureGrid grid =
      build_grid_for_variation(lo, hi, fmax * (hi - lo), rho, 512);
  auto phase_fn = [&](double x) { return pair_phase(n, m, k, x); };
  return oscillatory_integral(phase_fn, cutoff, lo, hi, grid);
}

std::complex<double> nonstationary_integral(int n, int m, int k, double eta_delta,
                                            double rho) {
  if (n == m) throw invalid_input("nonstationary integral requires n != m");
  double x0 = pair_critical_point(n, m, k);
  double scale = 1.0 / x0;
  PlateauCutoff bump{x0, scale, eta_delta};
  double fmax = std::abs(double(n) - double(m)) * (1.0 + (double(n) + double(m)));
  QuadratureGrid grid = build_grid_for_variation(0.0, 1.0, fmax, rho, 512);
  double sr = 0.0, si = 0.0;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    double x = grid.node(i);
    double w = grid.weight(i) * (1.0 - bump(x));
    if (w == 0.0) continue;
    auto c = e(pair_phase(n, m, k, x));
    sr += w * c.real();
    si += w * c.imag();
  }
  return {sr, si};
}

std::vector<std::pair<int, int>> stationary_sample_pairs(int N, int k,
                                                         double block_fraction,
                                                         int count, double lambda_lo,
                                                         double lambda_hi) {
  if (count < 2) throw invalid_input("need at least 2 sample pairs");
  StationaryModel model{k, double(N), {1.0, 0.0}, block_fraction};
  int blo = model.block_lo(), bhi = model.block_hi();
  int dmin = int(std::ceil(model.threshold()));
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  double ratio = lambda_hi / lambda_lo;
  // three interleaved center tracks spread the pairs across the block
  const double tracks[3] = {0.35, 0.5, 0.65};
  for (int j = 0; j < count; ++j) {
    double lam = lambda_lo * std::pow(ratio, double(j) / double(count - 1));
    double frac = tracks[j % 3];
    int center = blo + int(frac * double(bhi - blo));
    for (int attempt = 0; attempt < 64 && int(pairs.size()) <= j; ++attempt) {
      int c = center + attempt;
      int s = 2 * c;
      int d = int(std::lround(lam * std::pow(double(s), 1.0 / double(k - 1))));
      d = std::max(d, dmin);
      int n = c - (d + 1) / 2;
      int m = n + d;
      if (n < blo || m > bhi) continue;
      if (seen.insert({n, m}).second) pairs.push_back({n, m});
    }
  }
  if (int(pairs.size()) < count / 2)
    throw invalid_input("stationary regime too thin to sample at this N");
  return pairs;
}

StationaryFit fit_stationary_constant(int N, int k, double block_fraction,
                                      const std::vector<std::pair<int, int>>& pairs,
                                      double eta_delta, double rho) {
  if (pairs.size() < 2) throw invalid_input("fit needs at least 2 sample pairs");
  StationaryModel probe{k, double(N), {1.0, 0.0}, block_fraction};
  // two-parameter complex least squares: U = C + b / sqrt(lambda)
  double a11 = 0, a12 = 0, a22 = 0;
  std::complex<double> r1 = 0, r2 = 0;
  std::vector<std::complex<double>> integrals(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [n, m] = pairs[i];
    if (m < n) std::swap(n, m);
    check_block(n, m, probe);
    if (std::abs(n - m) < probe.threshold())
      throw invalid_input("sample pair below the stationary threshold");
    std::complex<double> I = stationary_pair_integral(n, m, k, eta_delta, rho);
    integrals[i] = I;
    double lam = pair_lambda(n, m, k);
    double mag = entry_magnitude(n, m, probe);
    std::complex<double> U = I * e(-pair_critical_phase(n, m, k)) / mag;
    double g = 1.0 / std::sqrt(lam);
    a11 += 1.0;
    a12 += g;
    a22 += g * g;
    r1 += U;
    r2 += g * U;
  }
  double det = a11 * a22 - a12 * a12;
  std::complex<double> c_fit;
  if (std::abs(det) < 1e-12 * a11 * a22) {
    c_fit = r1 / a11;  // degenerate ladder; fall back to the plain mean
  } else {
    c_fit = (a22 * r1 - a12 * r2) / det;
  }

  StationaryFit fit;
  fit.constant = c_fit;
  fit.samples = int(pairs.size());
  StationaryModel fitted{k, double(N), c_fit, block_fraction};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [n, m] = pairs[i];
    if (m < n) std::swap(n, m);
    std::complex<double> model_val = stationary_model_entry(n, m, fitted);
    fit.max_scaled_residual = std::max(
        fit.max_scaled_residual, std::abs(integrals[i] - model_val) * std::abs(n - m));
  }
  return fit;
}

std::complex<double> correlation_entry(int n, int m, const StationaryModel& model) {
  check_block(n, m, model);
  std::complex<double> acc = 0.0;
  for (int x = model.block_lo(); x <= model.block_hi(); ++x)
    acc += stationary_model_entry(n, x, model) * stationary_model_entry(x, m, model);
  return acc;
}

KernelMatrix stationary_model_matrix(const StationaryModel& model) {
  int lo = model.block_lo(), size = model.block_size();
  KernelMatrix c(lo, size, KernelMatrix::Tag::stationary_model);
  for (int n = lo; n < lo + size; ++n)
    for (int m = lo; m < lo + size; ++m) c.at(n, m) = stationary_model_entry(n, m, model);
  return c;
}

CorrelationSummary correlation_summary(const StationaryModel& model) {
  KernelMatrix c = stationary_model_matrix(model);
  int size = c.size();
  int k = model.k;
  double split = std::pow(model.N, double(2 * k - 1) / (3.0 * double(k - 1)));
  double near_scale = std::pow(model.N, 1.0 / double(k - 1));
  double far_scale = std::pow(model.N, double(2 * k - 3) / (2.0 * double(k - 1)));

  CorrelationSummary s;
  auto usize = std::size_t(size);
  std::vector<std::complex<double>> row(usize);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      std::complex<double> acc = 0.0;
      for (int x = 0; x < size; ++x) acc += c.entry(i, x) * c.entry(x, j);
      row[std::size_t(j)] = acc;
    }
    double row_sum = 0.0;
    for (int j = 0; j < size; ++j) {
      double mag = std::abs(row[std::size_t(j)]);
      row_sum += mag;
      double sep = std::abs(i - j);
      if (sep <= split) {
        s.near_max_scaled = std::max(s.near_max_scaled, mag * near_scale);
      } else {
        s.far_max_scaled =
            std::max(s.far_max_scaled, mag * std::pow(sep, 1.5) / far_scale);
        s.far_regime_empty = false;
      }
    }
    s.max_row_sum = std::max(s.max_row_sum, row_sum);
  }
  return s;
}

double schur_row_sum_witness(const StationaryModel& model) {
  int lo = model.block_lo(), hi = model.block_hi();
  double worst = 0.0;
  for (int n = lo; n <= hi; ++n) {
    double row = 0.0;
    for (int m = lo; m <= hi; ++m)
      row += std::abs(stationary_model_entry(n, m, model));
    worst = std::max(worst, row);
  }
  return worst;
}

}  // namespace rlab
