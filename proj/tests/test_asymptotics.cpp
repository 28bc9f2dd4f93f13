#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rlab/calibration.hpp"
#include "rlab/derivative_tests.hpp"
#include "rlab/errors.hpp"
#include "rlab/phase_profile.hpp"
#include "rlab/quadrature.hpp"
#include "rlab/stationary.hpp"
#include "rlab/sums.hpp"

using namespace rlab;
using doctest::Approx;

namespace {
StationaryModel model_at(int N, int k = 3) {
  return {k, double(N), calib::kLeadingConstant, calib::kBlockFraction};
}
}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("stationary model entries: support, symmetry, magnitude law") {
  auto m = model_at(512);
  int lo = m.block_lo();
  CHECK(stationary_model_entry(300, 300, m) == std::complex<double>(0.0));
  // below threshold (sqrt(512) ~ 22.6)
  CHECK(stationary_model_entry(300, 310, m) == std::complex<double>(0.0));
  // hermitian and exact magnitude law above threshold
  for (int gap : {23, 40, 80, 150}) {
    int n = lo + 10, mm = n + gap;
    auto up = stationary_model_entry(n, mm, m);
    auto dn = stationary_model_entry(mm, n, m);
    CHECK(std::abs(up - std::conj(dn)) < 1e-15);
    double normalized = std::abs(up) * std::sqrt(double(gap)) *
                        std::pow(double(n + mm), 0.25);
    CHECK(normalized == Approx(std::abs(m.leading_constant)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(stationary_model_entry(10, 300, m), invalid_input);
}

TEST_CASE("quadratic reference: plateau integral follows the half-power law") {
  // integral of e(lambda t^2) eta(t) with the order-one plateau: magnitude
  // 1/sqrt(2 lambda) up to the next-order correction
  for (double lambda : {100.0, 300.0, 1000.0}) {
    double variation = 2.0 * lambda * 2.0;  // sup |d/dt lambda t^2| over [-1,1]
    auto grid = build_grid_for_variation(-1.0, 1.0, variation, 8.0, 512);
    auto cutoff = Cutoff::plateau_at(0.0, 1.0, calib::kEtaDelta);
    auto I = oscillatory_integral([lambda](double t) { return lambda * t * t; }, cutoff,
                                  -1.0, 1.0, grid);
    double predicted = 1.0 / std::sqrt(2.0 * lambda);
    CHECK(std::abs(std::abs(I) - predicted) / predicted < 0.10);
  }
}

TEST_CASE("stationary fit: residual scale and constant stability") {
  auto pairs256 = stationary_sample_pairs(256, 3, calib::kBlockFraction, 60,
                                          calib::kLambdaLo, calib::kLambdaHi);
  auto fit256 = fit_stationary_constant(256, 3, calib::kBlockFraction, pairs256,
                                        calib::kEtaDelta);
  auto pairs512 = stationary_sample_pairs(512, 3, calib::kBlockFraction, 60,
                                          calib::kLambdaLo, calib::kLambdaHi);
  auto fit512 = fit_stationary_constant(512, 3, calib::kBlockFraction, pairs512,
                                        calib::kEtaDelta);
  CHECK(fit256.max_scaled_residual <= calib::kStationaryResidualCap);
  CHECK(fit512.max_scaled_residual <= calib::kStationaryResidualCap);
  double drift = std::abs(fit512.constant - fit256.constant) / std::abs(fit256.constant);
  CHECK(drift <= 0.02);
  // magnitude lands near the half-power reference value 1/sqrt(k-1)
  CHECK(std::abs(fit512.constant) == Approx(1.0 / std::sqrt(2.0)).epsilon(0.10));
  CHECK_THROWS_AS(fit_stationary_constant(256, 3, calib::kBlockFraction, {},
                                          calib::kEtaDelta),
                  invalid_input);
}

TEST_CASE("nonstationary complement integrals decay like the separation") {
  auto pairs = stationary_sample_pairs(256, 3, calib::kBlockFraction, 24,
                                       calib::kLambdaLo, calib::kLambdaHi);
  for (auto [n, m] : pairs) {
    auto I = nonstationary_integral(n, m, 3, calib::kEtaDelta);
    CHECK(std::abs(I) * std::abs(n - m) <= calib::kNonstationaryCap);
  }
}

TEST_CASE("correlation entries are hermitian and match the matrix product") {
  auto m = model_at(128);
  int lo = m.block_lo();
  auto d1 = correlation_entry(lo + 5, lo + 40, m);
  auto d2 = correlation_entry(lo + 40, lo + 5, m);
  CHECK(std::abs(d1 - std::conj(d2)) < 1e-15);

  auto c = stationary_model_matrix(m);
  std::complex<double> acc = 0;
  for (int x = 0; x < c.size(); ++x) acc += c.entry(5, x) * c.entry(x, 40);
  CHECK(std::abs(acc - d1) < 1e-14);
}

TEST_CASE("squared-kernel row sums tie the spectral bound to the summary") {
  auto m = model_at(128);
  auto c = stationary_model_matrix(m);
  auto summary = correlation_summary(m);
  CHECK(ttstar_bound(c) == Approx(std::sqrt(summary.max_row_sum)).epsilon(1e-12));
}

TEST_CASE("correlation band quantities move slowly in N") {
  double near_prev = 0, far_prev = 0;
  for (int N : {128, 256}) {
    auto s = correlation_summary(model_at(N));
    CHECK_FALSE(s.far_regime_empty);
    if (near_prev > 0) {
      CHECK(s.near_max_scaled / near_prev <= calib::kCorrelationBandStep);
      CHECK(s.near_max_scaled / near_prev >= 1.0 / calib::kCorrelationBandStep);
      CHECK(s.far_max_scaled / far_prev <= calib::kCorrelationBandStep);
      CHECK(s.far_max_scaled / far_prev >= 1.0 / calib::kCorrelationBandStep);
    }
    near_prev = s.near_max_scaled;
    far_prev = s.far_max_scaled;
  }
}

TEST_CASE("row-sum witness comparison: squared kernel beats plain row sums") {
  // the plain row-sum bound scales like N^{(k-2)/(2(k-1))} while the squared
  // kernel grows slower; their normalized forms sit in stable bands
  for (int N : {128, 256}) {
    auto m = model_at(N);
    double witness = schur_row_sum_witness(m);
    double scaled = witness / std::pow(double(N), 0.25);
    CHECK(scaled > 0.4);
    CHECK(scaled < 1.0);
  }
}

TEST_CASE("phase profile: exact level match and derivative identities") {
  auto rep = phase_profile_report(340, 430, 3, 0.5, 512.0);
  CHECK(rep.f_match < 1e-12);
  CHECK(rep.fp_fd_max_rel < 1e-6);
  CHECK(rep.fpp_fd_max_rel < 1e-6);
  CHECK(rep.r2_min > 0.0);
  CHECK(rep.r2_max / rep.r2_min <= calib::kProfileBandRatioCap);
  CHECK(rep.r1_max / rep.r1_min <= calib::kProfileBandRatioCap);
}

TEST_CASE("profile ratio bands are stable across N and k") {
  for (int k : {3, 4}) {
    double lo2 = 1e300, hi2 = 0;
    for (int N : {256, 512}) {
      int n = int(0.75 * N), m = n + N / 16;
      auto rep = phase_profile_report(n, m, k, 0.5, double(N));
      lo2 = std::min(lo2, rep.r2_min);
      hi2 = std::max(hi2, rep.r2_max);
    }
    CHECK(hi2 / lo2 <= calib::kProfileBandRatioCap);
  }
}

TEST_CASE("no-cancellation window near the regime split") {
  // with |n - m| around N^{(2k-1)/(3(k-1))}, the f-phases stay nearly level
  // near the interior critical point: the weighted partial sum over that
  // window keeps at least half its mass
  int N = 512, k = 3;
  auto m = model_at(N);
  int split = int(std::pow(double(N), 5.0 / 6.0));
  int n = m.block_lo() + 10;
  int mm = n + split;
  REQUIRE(mm <= m.block_hi());
  PhaseProfile prof{n, mm, k};
  // locate the critical point of f inside (n, m) by scanning fp
  double x0 = 0.5 * (n + mm);
  for (int it = 0; it < 60; ++it) {
    double d = prof.fp(x0);
    double dd = prof.fpp(x0);
    if (dd == 0.0) break;
    x0 -= d / dd;
  }
  REQUIRE(x0 > n);
  REQUIRE(x0 < mm);
  int half = int(0.1 * (mm - n));
  std::complex<double> coherent = 0;
  double mass = 0;
  for (int x = int(x0) - half; x <= int(x0) + half; ++x) {
    double w = 1.0 / (std::sqrt(std::abs(double(n) - x) * std::abs(double(mm) - x)) *
                      std::pow((double(n) + x) * (double(mm) + x), 0.25));
    coherent += w * e(prof.f(double(x)));
    mass += w;
  }
  CHECK(std::abs(coherent) >= 0.5 * mass);
}

TEST_CASE("derivative tests: linear and quadratic reference families") {
  double alpha = 0.01;
  auto lin = derivative_test_check(1, [alpha](double x) { return alpha * x; }, 1, 1000,
                                   alpha);
  CHECK(lin.lhs <= 1.0 / (2.0 * std::sin(M_PI * alpha)) + 1e-9);
  CHECK(lin.ratio <= 1.0);

  double T = 1e4;
  auto quad = derivative_test_check(2, [T](double x) { return x * x / (2.0 * T); }, 1,
                                    1000, 1.0 / T);
  CHECK(quad.ratio <= 10.0);

  // a flat phase is rejected: lambda must be positive and o(1)
  CHECK_THROWS_AS(derivative_test_check(1, [](double) { return 0.0; }, 1, 100, 0.0),
                  invalid_input);
  CHECK_THROWS_AS(derivative_test_check(1, [](double x) { return 0.4 * x; }, 1, 100, 0.4),
                  invalid_input);
  // mismatch between claimed lambda and the actual slope is caught
  CHECK_THROWS_AS(derivative_test_check(1, [](double) { return 0.0; }, 1, 100, 0.01),
                  invalid_input);
}

TEST_CASE("summation by parts: telescoping norms and random trials") {
  std::vector<double> wconst(12, 1.0);
  std::vector<double> f(12);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.083 * double(i * i);
  auto rc = partial_summation_bound(wconst, f);
  CHECK(rc.v1_norm == Approx(1.0));
  CHECK(rc.lhs <= rc.rhs + 1e-12);

  std::vector<double> wmono{0.5, 0.9, 1.7, 2.0, 2.4, 3.1};
  std::vector<double> f2{0.1, 0.9, 0.3, 0.7, 0.2, 0.8};
  auto rm = partial_summation_bound(wmono, f2);
  CHECK(rm.v1_norm == Approx(std::abs(wmono.back()) +
                             std::abs(wmono.back() - wmono.front())).epsilon(1e-14));
  CHECK(rm.lhs <= rm.rhs + 1e-12);

  std::mt19937_64 rng(5);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
  };
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t len = 2 + rng() % 40;
    std::vector<double> w(len), g(len);
    for (std::size_t i = 0; i < len; ++i) {
      w[i] = uniform(-2, 2);
      g[i] = uniform(-5, 5);
    }
    auto r = partial_summation_bound(w, g);
    CHECK(r.lhs <= r.rhs + 1e-12 * (1.0 + r.rhs));
  }
}

TEST_CASE("sample pairs stay inside the stationary regime") {
  auto pairs = stationary_sample_pairs(256, 3, 0.5, 40, 1.2, 5.0);
  StationaryModel m = model_at(256);
  CHECK(pairs.size() >= 20);
  for (auto [n, mm] : pairs) {
    CHECK(n >= m.block_lo());
    CHECK(mm <= m.block_hi());
    CHECK(std::abs(n - mm) >= m.threshold());
  }
}

}  // TEST_SUITE
