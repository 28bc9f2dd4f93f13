#include "rlab/quadrature.hpp"

#include <cmath>
#include <string>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

// Nodes/weights by Newton iteration on P_16; converges to full double
// precision from the Chebyshev initial guess.
struct GL16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};
  GL16() {
    const int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
        double dx = p0 / pp;
        xi -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      x[std::size_t(i)] = -xi;
      x[std::size_t(n - 1 - i)] = xi;
      double wi = 2.0 / ((1.0 - xi * xi) * pp * pp);
      w[std::size_t(i)] = wi;
      w[std::size_t(n - 1 - i)] = wi;
    }
  }
};

const GL16& gl16() {
  static const GL16 table;
  return table;
}

std::int64_t required_panels(double variation, double rho, std::int64_t floor_nodes) {
  double nodes = std::max(double(floor_nodes), rho * variation);
  return std::max<std::int64_t>((std::int64_t(std::ceil(nodes)) + 15) / 16, 1);
}

void check_budget(std::int64_t nodes, const GridLimits& limits) {
  if (nodes > limits.max_nodes)
    throw resource_error("quadrature grid needs " + std::to_string(nodes) +
                             " nodes, over the configured budget of " +
                             std::to_string(limits.max_nodes),
                         nodes);
}

}  // namespace

const std::array<double, 16>& gl16_nodes() { return gl16().x; }
const std::array<double, 16>& gl16_weights() { return gl16().w; }

QuadratureGrid::QuadratureGrid(double lo, double hi, double mpv, double rho,
                               std::vector<double> panel_lo,
                               std::vector<double> panel_width)
    : lo_(lo), hi_(hi), mpv_(mpv), rho_(rho), panel_lo_(std::move(panel_lo)),
      panel_width_(std::move(panel_width)) {}

std::vector<double> QuadratureGrid::nodes() const {
  auto count = std::size_t(node_count());
  std::vector<double> out(count);
  for (std::int64_t i = 0; i < node_count(); ++i) out[std::size_t(i)] = node(i);
  return out;
}

std::vector<double> QuadratureGrid::weights() const {
  auto count = std::size_t(node_count());
  std::vector<double> out(count);
  for (std::int64_t i = 0; i < node_count(); ++i) out[std::size_t(i)] = weight(i);
  return out;
}

double QuadratureGrid::weight_sum() const {
  double s = 0.0;
  for (double w : panel_width_) s += w;
  return s;
}

QuadratureGrid build_grid(const PhaseSpec& phase, double N, double lo, double hi,
                          double rho, GridLimits limits) {
  if (!(hi > lo)) throw invalid_input("quadrature interval is degenerate");
  if (rho < 4.0) throw invalid_input("oversampling must be at least 4");
  double variation = phase.max_frequency(lo, hi, N) * (hi - lo);
  std::int64_t panels = required_panels(variation, rho, 64);
  check_budget(16 * panels, limits);
  auto pcount = std::size_t(panels);
  std::vector<double> plo(pcount), pw(pcount);
  double w = (hi - lo) / double(panels);
  for (std::int64_t p = 0; p < panels; ++p) {
    plo[std::size_t(p)] = lo + w * double(p);
    pw[std::size_t(p)] = w;
  }
  return QuadratureGrid(lo, hi, variation, rho, std::move(plo), std::move(pw));
}

QuadratureGrid build_adaptive_grid(const PhaseSpec& phase, double N, double lo,
                                   double hi, double rho, GridLimits limits) {
  if (!(hi > lo)) throw invalid_input("quadrature interval is degenerate");
  if (rho < 4.0) throw invalid_input("oversampling must be at least 4");
  if (phase.kind() == PhaseKind::general_scalar)
    return build_grid(phase, N, lo, hi, rho, limits);

  // Panel boundaries at equal quantiles of the cumulative frequency bound
  //   F(x) = N x + |beta| N^2 sgn(x) |x|^k,
  // so each panel carries the same certified phase variation.
  int k = phase.k();
  double ab = std::abs(phase.beta());
  auto F = [&](double x) {
    double p = std::abs(x);
    double xk = 1.0;
    for (int i = 0; i < k; ++i) xk *= p;
    return N * x + ab * N * N * std::copysign(xk, x);
  };
  auto dF = [&](double x) {
    double p = std::abs(x);
    double xk1 = 1.0;
    for (int i = 0; i < k - 1; ++i) xk1 *= p;
    return N + double(k) * ab * N * N * xk1;
  };
  double variation = F(hi) - F(lo);
  std::int64_t panels = required_panels(variation, rho, 64);
  check_budget(16 * panels, limits);
  if (variation <= 1e-9 || panels < 2) {
    auto count = std::size_t(panels);
    std::vector<double> plo(count), pw(count);
    double w = (hi - lo) / double(panels);
    for (std::int64_t p = 0; p < panels; ++p) {
      plo[std::size_t(p)] = lo + w * double(p);
      pw[std::size_t(p)] = w;
    }
    return QuadratureGrid(lo, hi, variation, rho, std::move(plo), std::move(pw));
  }

  auto pcount = std::size_t(panels);
  std::vector<double> plo(pcount), pw(pcount);
  double Flo = F(lo);
  double step = variation / double(panels);
  double x = lo;
  for (std::int64_t p = 0; p < panels; ++p) {
    plo[std::size_t(p)] = x;
    double target = Flo + step * double(p + 1);
    double next = (p + 1 == panels) ? hi : x + step / dF(x);
    if (p + 1 < panels) {
      for (int it = 0; it < 60; ++it) {
        double err = F(next) - target;
        double d = dF(next);
        double dx = err / d;
        next -= dx;
        if (next <= x) next = 0.5 * (x + hi);
        if (next >= hi) next = 0.5 * (x + hi);
        if (std::abs(dx) < 1e-15 * (std::abs(next) + 1.0)) break;
      }
    }
    pw[std::size_t(p)] = next - x;
    x = next;
  }
  return QuadratureGrid(lo, hi, variation, rho, std::move(plo), std::move(pw));
}

QuadratureGrid build_grid_for_variation(double lo, double hi, double variation,
                                        double rho, std::int64_t floor_nodes,
                                        GridLimits limits) {
  if (!(hi > lo)) throw invalid_input("quadrature interval is degenerate");
  std::int64_t panels = required_panels(variation, rho, floor_nodes);
  check_budget(16 * panels, limits);
  auto pcount = std::size_t(panels);
  std::vector<double> plo(pcount), pw(pcount);
  double w = (hi - lo) / double(panels);
  for (std::int64_t p = 0; p < panels; ++p) {
    plo[std::size_t(p)] = lo + w * double(p);
    pw[std::size_t(p)] = w;
  }
  return QuadratureGrid(lo, hi, variation, rho, std::move(plo), std::move(pw));
}

}  // namespace rlab
