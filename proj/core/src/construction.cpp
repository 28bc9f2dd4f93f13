#include "rlab/construction.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

// uniform grid over [c - h, c + h] with at least nodes_per_half_width nodes
// per half-width; the integrands here are non-oscillatory by construction
QuadratureGrid set_grid(double center, double half_width, int nodes_per_half_width) {
  return build_grid_for_variation(center - half_width, center + half_width, 0.0, 8.0,
                                  2 * std::int64_t(nodes_per_half_width));
}

struct ModulationData {
  double psi_n = 0.0;   // d/dn psi at (x_N, n0) = x_N - 2 n0 phi(x_N)
  double psi_nn = 0.0;  // d^2/dn^2 psi = -2 phi(x_N)
};

ModulationData modulation_at(const ConstructionParams& p, const PhaseSpec& phase) {
  double phi0 = phase.phi(p.x_N);
  return {p.x_N - 2.0 * double(p.n0) * phi0, -2.0 * phi0};
}

void check_set_in_domain(const InterferenceSet& set) {
  for (int d = 0; d < set.dimension; ++d) {
    double lo = set.center[std::size_t(d)] - set.half_width[std::size_t(d)];
    double hi = set.center[std::size_t(d)] + set.half_width[std::size_t(d)];
    if (lo < -1.0 || hi > 1.0)
      throw invalid_input("interference set extends outside the integration domain");
  }
}

}  // namespace

double critical_point(const PhaseSpec& phase, double N) {
  if (!(N > 0)) throw invalid_input("critical_point requires N > 0");
  int k = phase.k();
  if (phase.kind() != PhaseKind::general_scalar) {
    if (phase.beta() >= 0.0)
      throw invalid_input("critical_point requires phi with positive leading term");
    // phi = |beta| x^k, phi' = k |beta| x^{k-1} = 1/N
    return std::pow(double(k) * (-phase.beta()) * N, -1.0 / double(k - 1));
  }
  // Newton on phi'(x) - 1/N from the monomial seed
  double target = 1.0 / N;
  double x = std::pow(double(k) * N, -1.0 / double(k - 1));
  for (int it = 0; it < 100; ++it) {
    double f = phase.phi_deriv(x, 1) - target;
    if (std::abs(f) <= 1e-12 * target) return x;
    double fp = phase.phi_deriv(x, 2);
    if (fp == 0.0) break;
    x -= f / fp;
  }
  double residual = std::abs(phase.phi_deriv(x, 1) - target) / target;
  if (residual > 1e-12)
    throw convergence_error("critical point iteration stalled", residual, 100);
  return x;
}

ConstructionParams make_construction_params(const PhaseSpec& phase, int N,
                                            double c_small) {
  if (N < 2) throw invalid_input("construction requires N >= 2");
  if (!(c_small > 0.0) || c_small > 0.5)
    throw invalid_input("c_small must lie in (0, 0.5]");
  int k = phase.k();
  ConstructionParams p;
  p.N = N;
  p.k = k;
  p.c_small = c_small;
  p.x_N = critical_point(phase, double(N));
  p.delta = c_small * std::pow(double(N), -double(k + 1) / (3.0 * double(k - 1)));
  p.M = int(std::floor(std::pow(double(N), double(2 * k - 1) / (3.0 * double(k - 1)))));
  p.n0 = N / 2;
  if (p.n0 + p.M > N || p.n0 - p.M < -N)
    throw invalid_input("interference block does not fit inside [-N, N]");
  return p;
}

CoefficientVector interference_coefficients(const ConstructionParams& params,
                                            const PhaseSpec& phase) {
  ModulationData mod = modulation_at(params, phase);
  int lo = params.n0 - params.M;
  int hi = params.n0 + params.M;
  std::vector<std::complex<double>> values(std::size_t(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    double d = double(n - params.n0);
    values[std::size_t(n - lo)] = e(-mod.psi_n * d - 0.5 * mod.psi_nn * d * d);
  }
  return CoefficientVector(lo, std::move(values));
}

TaylorBudget taylor_budget(const ConstructionParams& params, const PhaseSpec& phase) {
  double x = params.x_N;
  double n0 = double(params.n0);
  double M = double(params.M);
  double d = params.delta;
  TaylorBudget b;
  b.xnn_term = 2.0 * std::abs(phase.phi_deriv(x, 1)) * d * M * M;
  b.xxn_term = 2.0 * n0 * std::abs(phase.phi_deriv(x, 2)) * d * d * M;
  b.xxx_term = n0 * n0 * std::abs(phase.phi_deriv(x, 3)) * d * d * d;
  return b;
}

double lower_bound_ratio(const CoefficientVector& a, const PhaseSpec& phase, double p,
                         const InterferenceSet& set, int nodes_per_half_width) {
  if (set.dimension != 1)
    throw invalid_input("lower_bound_ratio integrates one-dimensional sets");
  check_set_in_domain(set);
  QuadratureGrid grid = set_grid(set.center[0], set.half_width[0], nodes_per_half_width);
  SplitCoefficients split(a.lo(), a.values());
  double acc = 0.0;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    std::complex<double> s = split.sum_against(phase.poly_at(grid.node(i)));
    acc += grid.weight(i) * std::pow(std::abs(s), p);
  }
  return std::pow(acc, 1.0 / p) / a.l2_norm();
}

CertificateResult interference_certificate(const CoefficientVector& a,
                                           const PhaseSpec& phase,
                                           const InterferenceSet& set, double threshold,
                                           int nodes_per_half_width) {
  if (set.dimension != 1)
    throw invalid_input("interference_certificate samples one-dimensional sets");
  check_set_in_domain(set);
  SplitCoefficients split(a.lo(), a.values());
  CertificateResult r;
  r.threshold = threshold;
  r.active_count = a.nonzero_count();
  r.min_abs = std::numeric_limits<double>::infinity();
  int samples = 2 * nodes_per_half_width;
  for (int i = 0; i <= samples; ++i) {
    double x = set.center[0] - set.half_width[0] +
               2.0 * set.half_width[0] * double(i) / double(samples);
    std::complex<double> s = split.sum_against(phase.poly_at(x));
    if (std::abs(s) < r.min_abs) {
      r.min_abs = std::abs(s);
      r.min_sample = {x, s};
    }
  }
  r.pass = r.min_abs >= threshold * double(r.active_count);
  return r;
}

std::vector<std::vector<std::complex<double>>> CylinderResult::coefficients() const {
  std::size_t len = std::size_t(factor.size());
  std::vector<std::vector<std::complex<double>>> a(
      len, std::vector<std::complex<double>>(len));
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j)
      a[i][j] = factor.values()[i] * factor.values()[j];
  return a;
}

CylinderResult cylinder_interference(int N, double c_small, int nodes_per_half_width) {
  if (N < 64) throw invalid_input("cylinder construction requires N >= 64");
  PhaseSpec phase = PhaseSpec::monomial(3, -1.0);
  ConstructionParams params = make_construction_params(phase, N, c_small);

  CylinderResult r{.factor = interference_coefficients(params, phase)};
  r.n0 = params.n0;
  r.M = params.M;
  r.set.dimension = 2;
  r.set.center = {params.x_N, 0.0, 0.0};
  r.set.half_width = {params.delta, c_small * std::pow(double(N), -5.0 / 6.0), 0.0};

  SplitCoefficients split(r.factor.lo(), r.factor.values());
  QuadratureGrid gx = set_grid(r.set.center[0], r.set.half_width[0], nodes_per_half_width);
  QuadratureGrid gt = set_grid(0.0, r.set.half_width[1], nodes_per_half_width);

  double acc = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  for (std::int64_t ix = 0; ix < gx.node_count(); ++ix) {
    double x = gx.node(ix);
    double x3 = x * x * x;
    std::complex<double> A = split.sum_against(PhasePoly{x, -x3, 0.0});
    for (std::int64_t it = 0; it < gt.node_count(); ++it) {
      double t = gt.node(it);  // t = y - x
      std::complex<double> B = split.sum_against(PhasePoly{x + t, -x3, 0.0});
      double mag2 = std::norm(A) * std::norm(B);
      acc += gx.weight(ix) * gt.weight(it) * mag2;
      min_abs = std::min(min_abs, std::sqrt(mag2));
    }
  }
  double l2_coeff = double(2 * params.M + 1);  // ||a||_2 of the product weights
  r.l2_ratio = std::sqrt(acc) / l2_coeff;
  r.min_product_abs = min_abs;
  return r;
}

MomentCurveResult moment_curve_interference(int N, double c_small,
                                            double certificate_threshold,
                                            int nodes_per_half_width) {
  if (N < 64) throw invalid_input("moment-curve construction requires N >= 64");
  PhaseSpec phase = PhaseSpec::monomial(3, -1.0);
  ConstructionParams params = make_construction_params(phase, N, c_small);
  ModulationData mod_u = modulation_at(params, phase);

  double v_N = 2.0 / (3.0 * std::sqrt(double(N)));
  double n0 = double(params.n0);
  // theta(v, n) = n^2 v - n^3 v^3 + n^3 v_N^3; quadratic Taylor data in n
  double theta_n = 2.0 * n0 * v_N;  // at (v_N, n0)
  double theta_nn = 2.0 * v_N;
  double theta_vn = 2.0 * n0 - 9.0 * n0 * n0 * v_N * v_N;

  int lo = params.n0 - params.M;
  int hi = params.n0 + params.M;
  std::vector<std::complex<double>> values(std::size_t(hi - lo + 1));
  double vN3 = v_N * v_N * v_N;
  for (int n = lo; n <= hi; ++n) {
    double d = double(n - params.n0);
    double nn = double(n);
    double cycles = -(mod_u.psi_n * d + 0.5 * mod_u.psi_nn * d * d)  // u-window data
                    - (theta_n * d + 0.5 * theta_nn * d * d)         // v-window data
                    + nn * nn * nn * vN3;  // counterterm folded into theta
    values[std::size_t(n - lo)] = e(cycles);
  }

  MomentCurveResult r{.coeffs = CoefficientVector(lo, std::move(values))};
  r.n0 = params.n0;
  r.M = params.M;
  r.v_N = v_N;
  r.theta_vn_at_center = theta_vn;
  r.set.dimension = 2;
  r.set.center = {params.x_N, v_N, 0.0};
  r.set.half_width = {params.delta, c_small * std::pow(double(N), -5.0 / 3.0), 0.0};

  SplitCoefficients split(lo, r.coeffs.values());
  QuadratureGrid gu = set_grid(r.set.center[0], r.set.half_width[0], nodes_per_half_width);
  QuadratureGrid gv = set_grid(r.set.center[1], r.set.half_width[1], nodes_per_half_width);

  double acc = 0.0;
  CertificateResult cert;
  cert.threshold = certificate_threshold;
  cert.active_count = r.coeffs.nonzero_count();
  cert.min_abs = std::numeric_limits<double>::infinity();
  for (std::int64_t iu = 0; iu < gu.node_count(); ++iu) {
    double u = gu.node(iu);
    double u3 = u * u * u;
    for (std::int64_t iv = 0; iv < gv.node_count(); ++iv) {
      double v = gv.node(iv);
      // phase in n: n u + n^2 (v - u^3) - n^3 v^3
      std::complex<double> s = split.sum_against(PhasePoly{u, v - u3, -v * v * v});
      double mag = std::abs(s);
      acc += gu.weight(iu) * gv.weight(iv) * std::pow(mag, 6.0);
      if (mag < cert.min_abs) {
        cert.min_abs = mag;
        cert.min_sample = {u, s};
      }
    }
  }
  cert.pass = cert.min_abs >= certificate_threshold * double(cert.active_count);
  r.certificate = cert;
  r.l6_ratio = std::pow(acc, 1.0 / 6.0) / r.coeffs.l2_norm();
  return r;
}

ConstantCoefficientResult constant_coefficient_ratio(int N, int k, double p, double rho) {
  if (N < 1) throw invalid_input("constant_coefficient_ratio requires N >= 1");
  if (!(p >= 2.0)) throw invalid_input("constant_coefficient_ratio requires p >= 2");
  PhaseSpec phase = PhaseSpec::monomial(k, -1.0);
  CoefficientVector a = CoefficientVector::ones(-N, N);

  ConstantCoefficientResult r;
  double win = 1.0 / double(N);
  QuadratureGrid wgrid = build_grid_for_variation(
      -win, win, phase.total_variation(-win, win, double(N)), rho, 256);
  r.window_ratio = lp_norm(a, phase, p, -win, win, wgrid) / a.l2_norm();

  QuadratureGrid grid = build_adaptive_grid(phase, double(N), -1.0, 1.0, rho);
  r.full_ratio = lp_norm(a, phase, p, -1.0, 1.0, grid) / a.l2_norm();
  return r;
}

double lipschitz_ratio_check(const LipschitzFn& phi, int N, int trials,
                             std::uint64_t seed, double rho) {
  if (!phi.f) throw invalid_input("lipschitz_ratio_check requires a callable");
  if (N < 4 || trials < 1)
    throw invalid_input("lipschitz_ratio_check needs N >= 4, trials >= 1");
  int lo = N / 2, hi = N;
  std::size_t len = std::size_t(hi - lo + 1);
  // sup_x |d/dx (n phi + n^2 x)| <= N Lip + N^2
  double variation = (double(N) * phi.constant + double(N) * double(N)) * 2.0;
  QuadratureGrid grid = build_grid_for_variation(-1.0, 1.0, variation, rho, 64);

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::complex<double>> a(len);
    double norm2 = 0.0;
    for (auto& z : a) {
      z = {2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0,
           2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0};
      norm2 += std::norm(z);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : a) z *= inv;
    SplitCoefficients split(lo, a);
    double acc = 0.0;
    for (std::int64_t i = 0; i < grid.node_count(); ++i) {
      double x = grid.node(i);
      std::complex<double> s = split.sum_against(PhasePoly{phi.f(x), x, 0.0});
      acc += grid.weight(i) * std::norm(s);
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace rlab
