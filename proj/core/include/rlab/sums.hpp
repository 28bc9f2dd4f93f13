#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "rlab/coefficients.hpp"
#include "rlab/phase.hpp"
#include "rlab/quadrature.hpp"

namespace rlab {

struct SumSample {
  double x = 0.0;
  std::complex<double> value;
};

// S(x) = sum_n a_n e(psi(x, n)) at each point, by direct summation.
std::vector<std::complex<double>> eval_sum(const CoefficientVector& a,
                                           const PhaseSpec& phase,
                                           std::span<const double> points);

// (integral over the grid of |S|^p)^(1/p). The grid must cover [lo, hi].
double lp_norm(const CoefficientVector& a, const PhaseSpec& phase, double p,
               double lo, double hi, const QuadratureGrid& grid);

// Smooth plateau bump: support [-delta, delta], identically 1 on
// [-delta/2, delta/2], built from exp(-1/t) mollifier ramps.
double plateau(double t, double delta);

struct PlateauCutoff {
  double center = 0.0;
  double scale = 1.0;  // eta(scale * (x - center))
  double delta = 1.0;  // support half-width in the scaled variable

  double operator()(double x) const { return plateau(scale * (x - center), delta); }
  double support_lo() const { return center - delta / scale; }
  double support_hi() const { return center + delta / scale; }
};

struct Cutoff {
  enum class Kind { none, plateau } kind = Kind::none;
  PlateauCutoff bump;

  static Cutoff none() { return {}; }
  static Cutoff plateau_at(double center, double scale, double delta) {
    Cutoff c;
    c.kind = Kind::plateau;
    c.bump = {center, scale, delta};
    return c;
  }
};

// integral over [lo, hi] of e(phase_fn(x)) * cutoff(x) dx by quadrature.
// phase_fn returns cycles. A plateau cutoff must have its support inside the
// interval.
std::complex<double> oscillatory_integral(const std::function<double(double)>& phase_fn,
                                          const Cutoff& cutoff, double lo, double hi,
                                          const QuadratureGrid& grid);

}  // namespace rlab
