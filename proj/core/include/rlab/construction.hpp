#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "rlab/coefficients.hpp"
#include "rlab/phase.hpp"
#include "rlab/sums.hpp"

namespace rlab {

// Parameters of the constructive-interference window: the critical point
// x_N with phi'(x_N) = 1/N, the x half-width Delta = c_small N^{-(k+1)/(3(k-1))},
// the index block half-width M = floor(N^{(2k-1)/(3(k-1))}) around n0 = N/2.
struct ConstructionParams {
  int N = 0;
  int k = 0;
  double c_small = 0.1;
  double x_N = 0.0;
  double delta = 0.0;
  int M = 0;
  int n0 = 0;
};

ConstructionParams make_construction_params(const PhaseSpec& phase, int N,
                                            double c_small);

// Root of phi'(x) = 1/N. Closed form (kN)^{-1/(k-1)} for monomials; Newton
// from the monomial seed otherwise (residual |phi'(x) N - 1| <= 1e-12).
double critical_point(const PhaseSpec& phase, double N);

// Axis-aligned box on which the constructed sum keeps |S| comparable to the
// number of active indices. Coordinates beyond `dimension` are unused.
struct InterferenceSet {
  int dimension = 1;
  std::array<double, 3> center{};
  std::array<double, 3> half_width{};

  double measure() const {
    double m = 1.0;
    for (int d = 0; d < dimension; ++d) m *= 2.0 * half_width[std::size_t(d)];
    return m;
  }
};

// Unimodular quadratically modulated weights on |n - n0| <= M: the linear and
// quadratic Taylor data of psi(x, n) in n at (x_N, n0) is cancelled so the
// remaining phase on the window is the o(1) cubic remainder.
CoefficientVector interference_coefficients(const ConstructionParams& params,
                                            const PhaseSpec& phase);

// Sizes of the three cubic remainder terms (with their Taylor factorials),
// evaluated from the closed-form partials at the expansion point. All three
// stay below ~2 c_small for the window rules above.
struct TaylorBudget {
  double xnn_term = 0.0;  // (1/2) |psi_xnn| Delta M^2
  double xxn_term = 0.0;  // (1/2) |psi_xxn| Delta^2 M
  double xxx_term = 0.0;  // (1/6) |psi_xxx| Delta^3
};
TaylorBudget taylor_budget(const ConstructionParams& params, const PhaseSpec& phase);

// (integral over the set of |S|^p)^{1/p} / ||a||_2, integrating over the
// interference set only (a certified lower bound for the full-interval ratio).
double lower_bound_ratio(const CoefficientVector& a, const PhaseSpec& phase, double p,
                         const InterferenceSet& set, int nodes_per_half_width = 64);

struct CertificateResult {
  bool pass = false;
  double min_abs = 0.0;
  double threshold = 0.0;     // threshold fraction of the active count
  int active_count = 0;
  SumSample min_sample;       // where the minimum was attained
};

// Samples |S| over the set and checks min >= threshold * (active count).
CertificateResult interference_certificate(const CoefficientVector& a,
                                           const PhaseSpec& phase,
                                           const InterferenceSet& set, double threshold,
                                           int nodes_per_half_width = 64);

// Two-dimensional construction on the zero-curvature cylinder: the product
// weights a_{n,m} = u_n u_m concentrate |S| ~ (active count) on a sheared box
// in (x, y - x). Reported ratio is L^2 over the set against ||a||_2.
struct CylinderResult {
  CoefficientVector factor;  // u_n; a_{n,m} = u_n * u_m
  int n0 = 0;
  int M = 0;
  InterferenceSet set;  // coordinates (x, y - x)
  double l2_ratio = 0.0;
  double min_product_abs = 0.0;  // min over the set of |A(x) B(x,y)|
  std::vector<std::vector<std::complex<double>>> coefficients() const;
};
CylinderResult cylinder_interference(int N, double c_small,
                                     int nodes_per_half_width = 64);

// Three-dimensional moment-curve construction in the substituted variables
// u = x, v = y + x^3; combines the quadratic modulations of both phases.
struct MomentCurveResult {
  CoefficientVector coeffs;
  int n0 = 0;
  int M = 0;
  double v_N = 0.0;
  double theta_vn_at_center = 0.0;  // mixed partial at (v_N, n0); 0 by design
  InterferenceSet set;              // coordinates (u, v)
  double l6_ratio = 0.0;
  CertificateResult certificate;
};
MomentCurveResult moment_curve_interference(int N, double c_small,
                                            double certificate_threshold = 0.8,
                                            int nodes_per_half_width = 64);

// Constant coefficients a_n = 1: L^p/l^2 ratio over |x| <= 1/N and over the
// full interval (-1, 1).
struct ConstantCoefficientResult {
  double window_ratio = 0.0;
  double full_ratio = 0.0;
};
ConstantCoefficientResult constant_coefficient_ratio(int N, int k, double p,
                                                     double rho = 8.0);

// Lipschitz comparison family: sum_{n=N/2}^{N} a_n e(n phi(x) + n^2 x) for
// random unit coefficient draws; returns the max L^2(-1,1)/l^2 ratio.
struct LipschitzFn {
  std::function<double(double)> f;
  double constant = 1.0;  // recorded Lipschitz constant
};
double lipschitz_ratio_check(const LipschitzFn& phi, int N, int trials,
                             std::uint64_t seed, double rho = 8.0);

}  // namespace rlab
