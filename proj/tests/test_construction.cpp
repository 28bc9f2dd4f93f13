#include <doctest.h>

#include <cmath>
#include <complex>

#include "rlab/construction.hpp"
#include "rlab/errors.hpp"
#include "rlab/spectral.hpp"

using namespace rlab;
using doctest::Approx;

TEST_SUITE("construction") {

TEST_CASE("critical point: closed forms and a general oracle") {
  auto k3 = PhaseSpec::monomial(3, -1.0);
  CHECK(critical_point(k3, 3000.0) == Approx(1.0 / std::sqrt(9000.0)).epsilon(1e-14));

  auto k4 = PhaseSpec::monomial(4, -1.0);
  CHECK(critical_point(k4, 256.0) == Approx(std::pow(1024.0, -1.0 / 3.0)).epsilon(1e-14));

  // phi(x) = x^3 + x^4 through the derivative oracle
  SmoothFn phi{[](double x, int order) {
                 switch (order) {
                   case 0: return x * x * x + x * x * x * x;
                   case 1: return 3 * x * x + 4 * x * x * x;
                   case 2: return 6 * x + 12 * x * x;
                   case 3: return 6.0 + 24 * x;
                   case 4: return 24.0;
                   default: return 0.0;
                 }
               },
               4};
  auto gen = PhaseSpec::general(3, phi);
  double x = critical_point(gen, 1000.0);
  CHECK(std::abs(phi.deriv(x, 1) - 1e-3) <= 1e-12 * 1e-3);
}

TEST_CASE("construction parameters follow the closed-form rules") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  auto p = make_construction_params(phase, 1024, 0.1);
  CHECK(p.M == 322);  // floor(1024^{5/6})
  CHECK(p.n0 == 512);
  CHECK(p.delta == Approx(0.1 * std::pow(1024.0, -2.0 / 3.0)).epsilon(1e-14));
  CHECK(3.0 * p.x_N * p.x_N == Approx(1.0 / 1024.0).epsilon(1e-12));
}

TEST_CASE("interference coefficients are unimodular with the right norm") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  auto p = make_construction_params(phase, 256, 0.1);
  auto a = interference_coefficients(p, phase);
  CHECK(a.size() == 2 * p.M + 1);
  for (auto& z : a.values()) CHECK(std::abs(z) == Approx(1.0).epsilon(1e-14));
  CHECK(a.l2_norm() == Approx(std::sqrt(2.0 * p.M + 1.0)).epsilon(1e-13));
}

TEST_CASE("taylor budget terms stay within the window design") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  for (int N : {256, 512, 1024}) {
    auto p = make_construction_params(phase, N, 0.1);
    auto b = taylor_budget(p, phase);
    CHECK(b.xnn_term <= 0.2);
    CHECK(b.xxn_term <= 0.2);
    CHECK(b.xxx_term <= 0.2);
    CHECK(b.xnn_term >= 0.19);  // the binding term sits just under the cap
  }
}

TEST_CASE("mixed partial vanishes at the expansion point") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  for (int N : {128, 512}) {
    auto p = make_construction_params(phase, N, 0.1);
    // psi_xn = 1 - 2 n phi'(x) at (x_N, n0); phi'(x_N) = 1/N and n0 = N/2
    double psi_xn = 1.0 - 2.0 * double(p.n0) * phase.phi_deriv(p.x_N, 1);
    CHECK(std::abs(psi_xn) < 1e-10);
  }
}

TEST_CASE("single-coefficient ratio equals the square root of the measure") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  auto a = CoefficientVector::delta(-4, 4, 2, 1.0);
  InterferenceSet set{1, {0.25, 0, 0}, {0.01, 0, 0}};
  double ratio = lower_bound_ratio(a, phase, 2.0, set);
  CHECK(ratio == Approx(std::sqrt(set.measure())).epsilon(1e-12));
}

TEST_CASE("window ratio is consistent with the operator norm") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  int N = 64;
  auto p = make_construction_params(phase, N, 0.1);
  auto a = interference_coefficients(p, phase);
  InterferenceSet set{1, {p.x_N, 0, 0}, {p.delta, 0, 0}};
  double ratio = lower_bound_ratio(a, phase, 2.0, set);
  auto dense = opnorm_dense(dense_gram(N, phase, -1.0, 1.0));
  CHECK(ratio <= dense.value * (1.0 + 1e-6));
  CHECK(ratio > 0.0);
}

TEST_CASE("full interference at x = 0 with constant weights") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  int N = 32;
  auto a = CoefficientVector::ones(-N, N);
  double pts[] = {0.0};
  auto s = eval_sum(a, phase, pts);
  CHECK(s[0].real() == Approx(2.0 * N + 1.0).epsilon(1e-14));
}

TEST_CASE("certificate passes on the window and fails off-resonance") {
  auto phase = PhaseSpec::monomial(3, -1.0);
  int N = 512;
  auto p = make_construction_params(phase, N, 0.1);
  auto a = interference_coefficients(p, phase);
  InterferenceSet set{1, {p.x_N, 0, 0}, {p.delta, 0, 0}};
  auto cert = interference_certificate(a, phase, set, 0.8);
  CHECK(cert.pass);
  CHECK(cert.min_abs >= 0.8 * (2.0 * p.M + 1.0));

  InterferenceSet shifted = set;
  shifted.center[0] += 10.0 * p.delta;
  auto off = interference_certificate(a, phase, shifted, 0.8);
  CHECK_FALSE(off.pass);
  CHECK(off.min_abs < 0.5 * (2.0 * p.M + 1.0));
}

TEST_CASE("cylinder construction: unimodular block and coherent product") {
  auto c = cylinder_interference(128, 0.1);
  for (auto& z : c.factor.values()) CHECK(std::abs(z) == Approx(1.0).epsilon(1e-14));
  int active = (2 * c.M + 1) * (2 * c.M + 1);
  CHECK(c.min_product_abs >= 0.7 * active);
  CHECK(c.l2_ratio > 0.0);
  auto mat = c.coefficients();
  CHECK(int(mat.size()) == 2 * c.M + 1);
  CHECK(std::abs(mat[1][2] - c.factor.values()[1] * c.factor.values()[2]) < 1e-15);
  CHECK_THROWS_AS(cylinder_interference(32, 0.1), invalid_input);
}

TEST_CASE("moment-curve construction: centered data and certificate") {
  auto m = moment_curve_interference(256, 0.1);
  CHECK(m.v_N == Approx(2.0 / (3.0 * 16.0)).epsilon(1e-14));
  CHECK(std::abs(m.theta_vn_at_center) < 1e-12);
  for (auto& z : m.coeffs.values()) CHECK(std::abs(z) == Approx(1.0).epsilon(1e-13));
  CHECK(m.certificate.pass);
  CHECK(m.certificate.min_abs >= 0.8 * m.certificate.active_count);
}

TEST_CASE("constant coefficients: window dominates and scales") {
  auto r = constant_coefficient_ratio(64, 3, 4.0, 8.0);
  CHECK(r.window_ratio > 0.0);
  CHECK(r.full_ratio >= r.window_ratio * (1.0 - 1e-12));
}

TEST_CASE("lipschitz family stays bounded") {
  LipschitzFn zero{[](double) { return 0.0; }, 0.0};
  LipschitzFn ident{[](double x) { return x; }, 1.0};
  for (int N : {64, 128}) {
    double r0 = lipschitz_ratio_check(zero, N, 3, 11, 4.0);
    double r1 = lipschitz_ratio_check(ident, N, 3, 11, 4.0);
    double ceiling = std::sqrt(2.0 * (N / 2.0 + 1.0));
    CHECK(r0 <= ceiling);
    CHECK(r1 <= ceiling);
    CHECK(r0 <= 4.0);  // orthogonality-dominated case is O(1)
    CHECK(r1 <= 4.0);
  }
}

}  // TEST_SUITE
