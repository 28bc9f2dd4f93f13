#include "rlab/sums.hpp"

#include <cmath>

#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"

namespace rlab {
namespace {

void check_points(const PhaseSpec& phase, std::span<const double> points) {
  for (double x : points) {
    if (!std::isfinite(x)) throw invalid_input("evaluation point must be finite");
    if (!PhaseSpec::admissible(x))
      throw invalid_input("evaluation point outside the admissible domain");
  }
}

}  // namespace

std::vector<std::complex<double>> eval_sum(const CoefficientVector& a,
                                           const PhaseSpec& phase,
                                           std::span<const double> points) {
  check_points(phase, points);
  SplitCoefficients split(a.lo(), a.values());
  std::vector<std::complex<double>> out(points.size());
  // Blocks of points keep results independent of the worker count.
  constexpr std::int64_t kBlock = 256;
  std::int64_t blocks = (std::int64_t(points.size()) + kBlock - 1) / kBlock;
  parallel_blocks(blocks, [&](std::int64_t b) {
    std::int64_t begin = b * kBlock;
    std::int64_t end = std::min<std::int64_t>(begin + kBlock, std::int64_t(points.size()));
    for (std::int64_t i = begin; i < end; ++i) {
      out[std::size_t(i)] = split.sum_against(phase.poly_at(points[std::size_t(i)]));
    }
  });
  return out;
}

double lp_norm(const CoefficientVector& a, const PhaseSpec& phase, double p,
               double lo, double hi, const QuadratureGrid& grid) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw invalid_input("lp_norm requires finite p >= 1");
  if (!grid.covers(lo, hi)) throw invalid_input("quadrature grid does not cover the interval");
  SplitCoefficients split(a.lo(), a.values());

  // Fixed panel blocks, reduced in order: bit-stable across worker counts.
  constexpr std::int64_t kPanelsPerBlock = 1024;
  std::int64_t blocks = (grid.panel_count() + kPanelsPerBlock - 1) / kPanelsPerBlock;
  std::vector<double> partial(std::size_t(blocks), 0.0);
  parallel_blocks(blocks, [&](std::int64_t b) {
    std::int64_t p0 = b * kPanelsPerBlock;
    std::int64_t p1 = std::min(p0 + kPanelsPerBlock, grid.panel_count());
    double acc = 0.0;
    for (std::int64_t panel = p0; panel < p1; ++panel) {
      for (int j = 0; j < 16; ++j) {
        std::int64_t i = 16 * panel + j;
        double x = grid.node(i);
        if (x < lo || x > hi) continue;
        std::complex<double> s = split.sum_against(phase.poly_at(x));
        acc += grid.weight(i) * std::pow(std::abs(s), p);
      }
    }
    partial[std::size_t(b)] = acc;
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return std::pow(total, 1.0 / p);
}

double plateau(double t, double delta) {
  double u = std::abs(t);
  if (u >= delta) return 0.0;
  if (u <= 0.5 * delta) return 1.0;
  // ramp from 1 at delta/2 down to 0 at delta
  auto moll = [](double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; };
  double s = (delta - u) / (0.5 * delta);  // in (0, 1) on the ramp
  return moll(s) / (moll(s) + moll(1.0 - s));
}

std::complex<double> oscillatory_integral(const std::function<double(double)>& phase_fn,
                                          const Cutoff& cutoff, double lo, double hi,
                                          const QuadratureGrid& grid) {
  if (!grid.covers(lo, hi)) throw invalid_input("quadrature grid does not cover the interval");
  if (cutoff.kind == Cutoff::Kind::plateau) {
    if (cutoff.bump.support_lo() < lo - 1e-12 || cutoff.bump.support_hi() > hi + 1e-12)
      throw invalid_input("cutoff support extends outside the integration interval");
  }
  double sr = 0.0, si = 0.0;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    double x = grid.node(i);
    if (x < lo || x > hi) continue;
    double w = grid.weight(i);
    if (cutoff.kind == Cutoff::Kind::plateau) {
      w *= cutoff.bump(x);
      if (w == 0.0) continue;
    }
    std::complex<double> c = e(phase_fn(x));
    sr += w * c.real();
    si += w * c.imag();
  }
  return {sr, si};
}

}  // namespace rlab
