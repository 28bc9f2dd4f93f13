#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rlab/phase.hpp"

namespace rlab {

// 16-point Gauss-Legendre reference rule on [-1, 1].
const std::array<double, 16>& gl16_nodes();
const std::array<double, 16>& gl16_weights();

struct GridLimits {
  std::int64_t max_nodes = std::int64_t(1) << 26;
};

// Composite Gauss-Legendre grid on [lo, hi], 16-point panels.
// max_phase_variation is a certified upper bound (in cycles) on the total
// phase change of the target integrand family over the interval, and the
// node count is at least oversampling * max_phase_variation. Nodes are
// generated on demand from the panel table so large grids stay cheap;
// nodes()/weights() materialize copies for inspection.
class QuadratureGrid {
 public:
  QuadratureGrid(double lo, double hi, double max_phase_variation, double oversampling,
                 std::vector<double> panel_lo, std::vector<double> panel_width);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double max_phase_variation() const { return mpv_; }
  double oversampling() const { return rho_; }

  std::int64_t node_count() const { return 16 * std::int64_t(panel_lo_.size()); }
  std::int64_t panel_count() const { return std::int64_t(panel_lo_.size()); }

  double node(std::int64_t i) const {
    std::int64_t p = i / 16;
    double half = 0.5 * panel_width_[std::size_t(p)];
    return panel_lo_[std::size_t(p)] + half * (1.0 + gl16_nodes()[std::size_t(i % 16)]);
  }
  double weight(std::int64_t i) const {
    return 0.5 * panel_width_[std::size_t(i / 16)] * gl16_weights()[std::size_t(i % 16)];
  }
  double panel_lower(std::int64_t p) const { return panel_lo_[std::size_t(p)]; }
  double panel_width(std::int64_t p) const { return panel_width_[std::size_t(p)]; }

  std::vector<double> nodes() const;
  std::vector<double> weights() const;
  double weight_sum() const;  // equals hi - lo up to rounding

  bool covers(double a, double b, double slack = 1e-12) const {
    return lo_ <= a + slack && b <= hi_ + slack;
  }

 private:
  double lo_, hi_, mpv_, rho_;
  std::vector<double> panel_lo_, panel_width_;
};

// Uniform-panel grid certified against the conservative frequency bound
// sup_{x,n} |d/dx psi|. Node count >= oversampling * bound * length, with a
// floor of 64 nodes. Throws resource_error (naming the required count) if the
// grid would exceed limits.max_nodes.
QuadratureGrid build_grid(const PhaseSpec& phase, double N, double lo, double hi,
                          double rho, GridLimits limits = {});

// Same certification contract, but panel widths follow the local frequency
// bound sup_n |d/dx psi(x, n)|, so the node count is proportional to the
// total variation instead of sup * length. Used by the norm and operator
// evaluations where the uniform rule would be k times larger.
QuadratureGrid build_adaptive_grid(const PhaseSpec& phase, double N, double lo,
                                   double hi, double rho, GridLimits limits = {});

// Uniform grid for a single integrand with the given total variation bound
// (cycles over [lo, hi]); floor_nodes guards integrands whose variation is
// small but whose envelope still needs resolving.
QuadratureGrid build_grid_for_variation(double lo, double hi, double variation,
                                        double rho, std::int64_t floor_nodes = 64,
                                        GridLimits limits = {});

}  // namespace rlab
