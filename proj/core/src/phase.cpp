#include "rlab/phase.hpp"

#include <cmath>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

double pow_int(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// d^order/dx^order of x^k
double monomial_deriv(double x, int k, int order) {
  if (order > k) return 0.0;
  double c = 1.0;
  for (int i = 0; i < order; ++i) c *= double(k - i);
  return c * pow_int(x, k - order);
}

}  // namespace

PhaseSpec PhaseSpec::monomial(int k, double beta) {
  if (k < 2) throw invalid_input("phase requires k >= 2");
  if (!std::isfinite(beta) || beta == 0.0)
    throw invalid_input("monomial phase requires finite nonzero beta");
  return PhaseSpec(PhaseKind::monomial_curve, k, beta);
}

PhaseSpec PhaseSpec::general(int k, SmoothFn phi) {
  if (k < 2) throw invalid_input("phase requires k >= 2");
  if (!phi.deriv) throw invalid_input("general phase requires a derivative oracle");
  if (phi.max_order < k + 1)
    throw invalid_input("general phase oracle must provide derivatives up to order k+1");
  PhaseSpec spec(PhaseKind::general_scalar, k, 0.0);
  spec.phi_ = std::move(phi);
  return spec;
}

PhaseSpec PhaseSpec::cylinder() { return PhaseSpec(PhaseKind::cylinder_2d, 3, -1.0); }

PhaseSpec PhaseSpec::moment_curve() {
  return PhaseSpec(PhaseKind::moment_curve_2d, 3, -1.0);
}

double PhaseSpec::psi(double x, double n) const {
  PhasePoly p = poly_at(x);
  return p(n);
}

PhasePoly PhaseSpec::poly_at(double x) const {
  PhasePoly p;
  p.c1 = x;
  p.c2 = -phi_deriv(x, 0);
  return p;
}

double PhaseSpec::phi_deriv(double x, int order) const {
  // phi in the convention psi(x, n) = n x - n^2 phi(x)
  if (kind_ == PhaseKind::general_scalar) return phi_->deriv(x, order);
  return -beta_ * monomial_deriv(x, k_, order);
}

double PhaseSpec::max_frequency(double lo, double hi, double N) const {
  if (kind_ == PhaseKind::general_scalar) {
    // Sampled bound with headroom; the oracle families used here are smooth
    // and slowly varying at this scale.
    double sup = 0.0;
    const int samples = 1024;
    for (int i = 0; i <= samples; ++i) {
      double x = lo + (hi - lo) * double(i) / samples;
      sup = std::max(sup, std::abs(phi_->deriv(x, 1)));
    }
    return N + N * N * sup * 1.5;
  }
  double xmax = std::max(std::abs(lo), std::abs(hi));
  return N + double(k_) * std::abs(beta_) * N * N * pow_int(xmax, k_ - 1);
}

double PhaseSpec::total_variation(double lo, double hi, double N) const {
  if (kind_ == PhaseKind::general_scalar) return max_frequency(lo, hi, N) * (hi - lo);
  // integral of N + k|beta| N^2 |x|^{k-1}
  auto F = [&](double x) {
    return N * x + std::abs(beta_) * N * N * std::copysign(pow_int(std::abs(x), k_), x);
  };
  return F(hi) - F(lo);
}

}  // namespace rlab
