#include "rlab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "rlab/calibration.hpp"
#include "rlab/construction.hpp"
#include "rlab/derivative_tests.hpp"
#include "rlab/errors.hpp"
#include "rlab/fitting.hpp"
#include "rlab/kernel_matrix.hpp"
#include "rlab/parallel.hpp"
#include "rlab/phase_profile.hpp"
#include "rlab/scan.hpp"
#include "rlab/spectral.hpp"
#include "rlab/stationary.hpp"

namespace rlab {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  int k = 3;
  std::vector<int> Ns = {64, 128, 256, 512};
  double p = 2.0;
  bool p_set = false;
  Settings settings{};
  int max_iter = 10000;
  int threads = 0;
  int trials = 200;
  bool fit = false;
  bool no_timestamp = false;
  std::string out_path;
  std::string json_path;

  void attach(CLI::App* cmd, double default_tol) {
    settings.tol = default_tol;
    settings.block_fraction = calib::kBlockFraction;
    cmd->add_option("--k", k, "phase exponent k (>= 2)")->capture_default_str();
    cmd->add_option("--n", Ns, "scan sizes N (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--p", p, "Lebesgue exponent p")->capture_default_str()
        ->each([this](const std::string&) { p_set = true; });
    cmd->add_option("--c-small", settings.c_small, "window constant for every <<")
        ->capture_default_str();
    cmd->add_option("--ck", settings.block_fraction, "dyadic block constant C_k")
        ->capture_default_str();
    cmd->add_option("--rho", settings.rho, "quadrature oversampling (>= 4)")
        ->capture_default_str();
    cmd->add_option("--tol", settings.tol, "iteration tolerance")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();
    cmd->add_option("--seed", settings.seed, "random seed")->capture_default_str();
    cmd->add_option("--trials", trials, "randomized trial count")->capture_default_str();
    cmd->add_option("--threads", threads,
                    "worker cap (default: RESTRICT_LAB_THREADS or hardware)");
    cmd->add_option("--out", out_path, "append records to this CSV file");
    cmd->add_option("--json-out", json_path, "write records as JSON");
    cmd->add_flag("--fit", fit, "fit and print the growth exponent");
    cmd->add_flag("--no-timestamp", no_timestamp,
                  "suppress the timestamp column for byte-stable outputs");
  }

  void apply_threads() const {
    if (threads > 0) set_worker_count(threads);
  }

  void validate() const {
    if (k < 2) throw invalid_input("k must be at least 2");
    if (Ns.empty()) throw invalid_input("at least one N is required");
    for (int n : Ns)
      if (n < 0) throw invalid_input("N must be nonnegative");
    if (settings.rho < 4.0) throw invalid_input("rho must be at least 4");
    if (!(settings.tol > 0.0)) throw invalid_input("tol must be positive");
    if (!(settings.c_small > 0.0) || settings.c_small > 0.5)
      throw invalid_input("c-small must lie in (0, 0.5]");
  }
};

void write_outputs(const CommonOptions& opt, const std::vector<ExperimentRecord>& recs) {
  if (!opt.out_path.empty()) persist(recs, opt.out_path, /*append=*/true);
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    if (!out) throw invalid_input("cannot open JSON output: " + opt.json_path);
    out << records_to_json(recs);
  }
}

int scan_exit_code(const ScanOutcome& outcome) {
  if (outcome.errors.empty()) return kExitOk;
  for (const auto& err : outcome.errors)
    std::fprintf(stderr, "N=%d failed: %s\n", err.N, err.what.c_str());
  for (const auto& err : outcome.errors)
    if (err.convergence) return kExitNumerical;
  return kExitUsage;
}

void print_fit(const std::vector<ExperimentRecord>& recs, double target,
               const char* target_label) {
  if (recs.size() >= 3) {
    FitResult pure = fit_exponent(recs, FitModel::pure_power);
    std::printf("fit (pure power): alpha = %.4f, residual = %.2e\n", pure.exponent,
                pure.residual);
  }
  if (recs.size() >= 4) {
    FitResult withlog = fit_exponent(recs, FitModel::power_log);
    std::printf("fit (power * log): alpha = %.4f, residual = %.2e\n", withlog.exponent,
                withlog.residual);
  }
  std::printf("target %s = %.4f\n", target_label, target);
}

// --- subcommands -----------------------------------------------------------

int cmd_opnorm(const CommonOptions& opt) {
  QuantityRequest q{"opnorm", opt.k, std::nullopt};
  ScanOutcome outcome = run_scan(q, opt.Ns, opt.settings, !opt.no_timestamp);
  for (const auto& r : outcome.records)
    std::printf("opnorm k=%d N=%d B=%.10f\n", r.k, r.N, r.value);
  write_outputs(opt, outcome.records);
  if (opt.fit && outcome.records.size() >= 3) {
    double target = double(opt.k - 2) / (6.0 * double(opt.k - 1));
    print_fit(outcome.records, target, "(k-2)/(6(k-1))");
  }
  return scan_exit_code(outcome);
}

int cmd_lowerbound(const CommonOptions& opt, const std::string& quantity) {
  if (quantity == "interference") {
    PhaseSpec phase = PhaseSpec::monomial(opt.k, -1.0);
    QuantityRequest q{"ratio_window", opt.k, opt.p};
    ScanOutcome outcome = run_scan(q, opt.Ns, opt.settings, !opt.no_timestamp);
    for (const auto& r : outcome.records) {
      auto params = make_construction_params(phase, r.N, opt.settings.c_small);
      auto coeffs = interference_coefficients(params, phase);
      InterferenceSet set{1, {params.x_N, 0, 0}, {params.delta, 0, 0}};
      auto cert =
          interference_certificate(coeffs, phase, set, calib::kCertificateThreshold);
      std::printf(
          "interference k=%d N=%d p=%g ratio=%.8f certificate min|S|=%.2f (%s %d "
          "active)\n",
          r.k, r.N, *r.p, r.value, cert.min_abs, cert.pass ? "covers" : "BELOW",
          cert.active_count);
    }
    write_outputs(opt, outcome.records);
    if (opt.fit && outcome.records.size() >= 3) {
      double kk = double(opt.k);
      double target =
          (2.0 * kk - 1.0) / (6.0 * (kk - 1.0)) - (kk + 1.0) / (3.0 * opt.p * (kk - 1.0));
      print_fit(outcome.records, target, "(2k-1)/(6(k-1)) - (k+1)/(3p(k-1))");
    }
    return scan_exit_code(outcome);
  }
  if (quantity == "constant") {
    double p = opt.p_set ? opt.p : 4.0;
    QuantityRequest qw{"cc_window", opt.k, p};
    QuantityRequest qf{"cc_full", opt.k, p};
    ScanOutcome win = run_scan(qw, opt.Ns, opt.settings, !opt.no_timestamp);
    ScanOutcome full = run_scan(qf, opt.Ns, opt.settings, !opt.no_timestamp);
    for (std::size_t i = 0; i < full.records.size(); ++i)
      std::printf("constant-coefficients k=%d N=%d p=%g window=%.8f full=%.8f\n", opt.k,
                  full.records[i].N, p,
                  i < win.records.size() ? win.records[i].value : 0.0,
                  full.records[i].value);
    std::vector<ExperimentRecord> all = win.records;
    all.insert(all.end(), full.records.begin(), full.records.end());
    write_outputs(opt, all);
    if (opt.fit && full.records.size() >= 3)
      print_fit(full.records, 0.5 - 1.0 / p, "1/2 - 1/p");
    ScanOutcome merged;
    merged.errors = win.errors;
    merged.errors.insert(merged.errors.end(), full.errors.begin(), full.errors.end());
    return scan_exit_code(merged);
  }
  if (quantity == "lipschitz") {
    std::vector<ExperimentRecord> recs;
    for (int N : opt.Ns) {
      LipschitzFn zero{[](double) { return 0.0; }, 0.0};
      LipschitzFn ident{[](double x) { return x; }, 1.0};
      double r0 = lipschitz_ratio_check(zero, N, opt.trials, opt.settings.seed,
                                        opt.settings.rho);
      double r1 = lipschitz_ratio_check(ident, N, opt.trials, opt.settings.seed,
                                        opt.settings.rho);
      std::printf("lipschitz k=2 N=%d max-ratio phi=0: %.6f  phi=x: %.6f\n", N, r0, r1);
      ExperimentRecord rec;
      rec.quantity = "lipschitz_ratio";
      rec.N = N;
      rec.k = 2;
      rec.p = 2.0;
      rec.value = r1;
      rec.settings = opt.settings;
      rec.timestamp = opt.no_timestamp ? std::string() : iso_timestamp_now();
      recs.push_back(std::move(rec));
    }
    write_outputs(opt, recs);
    return kExitOk;
  }
  throw invalid_input("unknown lowerbound quantity: " + quantity +
                      " (expected interference, constant, or lipschitz)");
}

int cmd_cylinder(const CommonOptions& opt) {
  QuantityRequest q{"cylinder_ratio", 3, 2.0};
  ScanOutcome outcome = run_scan(q, opt.Ns, opt.settings, !opt.no_timestamp);
  for (const auto& r : outcome.records) {
    auto c = cylinder_interference(r.N, opt.settings.c_small);
    std::printf("cylinder N=%d ratio=%.8f active=%d min|AB|=%.1f\n", r.N, r.value,
                (2 * c.M + 1) * (2 * c.M + 1), c.min_product_abs);
  }
  write_outputs(opt, outcome.records);
  if (opt.fit && outcome.records.size() >= 3)
    print_fit(outcome.records, 1.0 / 12.0, "1/12");
  return scan_exit_code(outcome);
}

int cmd_moment(const CommonOptions& opt) {
  std::vector<ExperimentRecord> recs;
  bool all_certified = true;
  for (int N : opt.Ns) {
    auto m = moment_curve_interference(N, opt.settings.c_small,
                                       calib::kCertificateThreshold);
    std::printf(
        "moment-curve N=%d L6-ratio=%.8f theta_vn(v_N,n0)=%.3e certificate min=%.1f of "
        "%d (%s)\n",
        N, m.l6_ratio, m.theta_vn_at_center, m.certificate.min_abs,
        m.certificate.active_count, m.certificate.pass ? "pass" : "FAIL");
    all_certified = all_certified && m.certificate.pass;
    ExperimentRecord rec;
    rec.quantity = "moment_ratio";
    rec.N = N;
    rec.k = 3;
    rec.p = 6.0;
    rec.value = m.l6_ratio;
    rec.settings = opt.settings;
    rec.timestamp = opt.no_timestamp ? std::string() : iso_timestamp_now();
    recs.push_back(std::move(rec));
  }
  write_outputs(opt, recs);
  return all_certified ? kExitOk : kExitNumerical;
}

int cmd_kernels(const CommonOptions& opt, const std::string& check) {
  Settings s = opt.settings;
  if (check == "stationary") {
    bool ok = true;
    std::complex<double> prev{};
    for (int N : opt.Ns) {
      auto pairs = stationary_sample_pairs(N, opt.k, s.block_fraction, opt.trials,
                                           calib::kLambdaLo, calib::kLambdaHi);
      auto fit = fit_stationary_constant(N, opt.k, s.block_fraction, pairs,
                                         calib::kEtaDelta, s.rho);
      std::printf(
          "stationary fit k=%d N=%d: constant=%.6f%+.6fi |C|=%.6f residual*gap=%.4f "
          "(cap %.3f) samples=%d\n",
          opt.k, N, fit.constant.real(), fit.constant.imag(), std::abs(fit.constant),
          fit.max_scaled_residual, calib::kStationaryResidualCap, fit.samples);
      ok = ok && fit.max_scaled_residual <= calib::kStationaryResidualCap;
      if (prev != std::complex<double>{}) {
        double drift = std::abs(fit.constant - prev) / std::abs(prev);
        std::printf("  drift from previous N: %.3f%%\n", 100.0 * drift);
        ok = ok && drift <= 0.02;
      }
      prev = fit.constant;
    }
    return ok ? kExitOk : kExitNumerical;
  }
  if (check == "nonstationary") {
    bool ok = true;
    for (int N : opt.Ns) {
      StationaryModel model{opt.k, double(N), calib::kLeadingConstant, s.block_fraction};
      auto pairs = stationary_sample_pairs(N, opt.k, s.block_fraction, opt.trials,
                                           calib::kLambdaLo, calib::kLambdaHi);
      double worst = 0.0;
      for (auto [n, m] : pairs) {
        auto I = nonstationary_integral(n, m, opt.k, calib::kEtaDelta, s.rho);
        worst = std::max(worst, std::abs(I) * std::abs(n - m));
      }
      std::printf("nonstationary k=%d N=%d: max |I|*gap = %.4f (cap %.3f)\n", opt.k, N,
                  worst, calib::kNonstationaryCap);
      ok = ok && worst <= calib::kNonstationaryCap;
    }
    return ok ? kExitOk : kExitNumerical;
  }
  if (check == "near" || check == "far") {
    std::vector<double> values;
    for (int N : opt.Ns) {
      StationaryModel model{opt.k, double(N), calib::kLeadingConstant, s.block_fraction};
      auto summary = correlation_summary(model);
      double v = check == "near" ? summary.near_max_scaled : summary.far_max_scaled;
      if (check == "far" && summary.far_regime_empty) {
        std::printf("far regime empty at N=%d\n", N);
        return kExitUsage;
      }
      std::printf("%s k=%d N=%d normalized max = %.6f\n", check.c_str(), opt.k, N, v);
      values.push_back(v);
    }
    bool ok = true;
    for (std::size_t i = 1; i < values.size(); ++i) {
      double step = values[i] / values[i - 1];
      ok = ok && step <= calib::kCorrelationBandStep &&
           step >= 1.0 / calib::kCorrelationBandStep;
    }
    std::printf("band steps within factor %.1f: %s\n", calib::kCorrelationBandStep,
                ok ? "yes" : "NO");
    return ok ? kExitOk : kExitNumerical;
  }
  if (check == "rowsum") {
    QuantityRequest q{"row_sum", opt.k, std::nullopt};
    ScanOutcome outcome = run_scan(q, opt.Ns, s, !opt.no_timestamp);
    for (const auto& r : outcome.records)
      std::printf("row-sum k=%d N=%d max = %.6f\n", r.k, r.N, r.value);
    write_outputs(opt, outcome.records);
    if (outcome.records.size() < 3) return scan_exit_code(outcome);
    FitResult fit = fit_exponent(outcome.records, FitModel::pure_power);
    double target = 2.0 * double(opt.k - 2) / (3.0 * double(opt.k - 1));
    std::printf("row-sum exponent = %.4f target = %.4f (slack %.2f)\n", fit.exponent,
                target, calib::kRowSumExponentSlack);
    bool ok = std::abs(fit.exponent - target) <= calib::kRowSumExponentSlack;
    int ec = scan_exit_code(outcome);
    return ec != kExitOk ? ec : (ok ? kExitOk : kExitNumerical);
  }
  if (check == "profile") {
    double band_lo2 = 1e300, band_hi2 = 0.0, band_lo1 = 1e300, band_hi1 = 0.0;
    double worst_match = 0.0, worst_fd = 0.0;
    for (int N : opt.Ns) {
      for (double nf : {0.65, 0.75, 0.85}) {
        for (double gapf : {0.02, 0.05, 0.10}) {
          int n = int(nf * N);
          int m = n + std::max(2, int(gapf * N));
          if (m > N) continue;
          auto rep = phase_profile_report(n, m, opt.k, s.block_fraction, double(N));
          band_lo2 = std::min(band_lo2, rep.r2_min);
          band_hi2 = std::max(band_hi2, rep.r2_max);
          band_lo1 = std::min(band_lo1, rep.r1_min);
          band_hi1 = std::max(band_hi1, rep.r1_max);
          worst_match = std::max(worst_match, rep.f_match);
          worst_fd = std::max(worst_fd, std::max(rep.fp_fd_max_rel, rep.fpp_fd_max_rel));
        }
      }
    }
    std::printf("profile k=%d: r2 band [%.4f, %.4f] ratio %.2f; r1 band [%.4f, %.4f] "
                "ratio %.2f\n",
                opt.k, band_lo2, band_hi2, band_hi2 / band_lo2, band_lo1, band_hi1,
                band_hi1 / band_lo1);
    std::printf("profile f-match max %.2e; derivative fd max rel %.2e\n", worst_match,
                worst_fd);
    bool ok = band_hi2 / band_lo2 <= calib::kProfileBandRatioCap &&
              band_hi1 / band_lo1 <= calib::kProfileBandRatioCap &&
              worst_match <= 1e-12 && worst_fd <= 1e-6;
    return ok ? kExitOk : kExitNumerical;
  }
  if (check == "schur-witness") {
    for (int N : opt.Ns) {
      StationaryModel model{opt.k, double(N), calib::kLeadingConstant, s.block_fraction};
      double w = schur_row_sum_witness(model);
      double scale = std::pow(double(N), double(opt.k - 2) / (2.0 * double(opt.k - 1)));
      std::printf("schur witness k=%d N=%d: max row sum = %.6f, / N^{(k-2)/(2(k-1))} = "
                  "%.6f\n",
                  opt.k, N, w, w / scale);
    }
    return kExitOk;
  }
  throw invalid_input("unknown kernels check: " + check);
}

int cmd_tests(const CommonOptions& opt, const std::string& suite) {
  std::mt19937_64 rng(opt.settings.seed);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
  };
  bool ok = true;
  int trials = opt.trials;

  if (suite == "derivative" || suite == "all") {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      double alpha = uniform(0.004, 0.2);
      auto r1 = derivative_test_check(
          1, [alpha](double x) { return alpha * x; }, 1, 1000, alpha);
      if (r1.ratio > calib::kDerivativeTestRatioCap) ++bad;
      double T = uniform(2e3, 5e4);
      auto r2 = derivative_test_check(
          2, [T](double x) { return x * x / (2.0 * T); }, 1, 1000, 1.0 / T);
      if (r2.ratio > calib::kDerivativeTestRatioCap) ++bad;
    }
    std::printf("derivative tests: %d/%d trials within ratio %.0f\n", 2 * trials - bad,
                2 * trials, calib::kDerivativeTestRatioCap);
    ok = ok && bad == 0;
  }
  if (suite == "spectral-bounds" || suite == "all") {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      int dim = 2 + int(rng() % 14);
      KernelMatrix c(0, dim, KernelMatrix::Tag::gram);
      for (int i = 0; i < dim; ++i) {
        c.entry(i, i) = uniform(-2, 2);
        for (int j = i + 1; j < dim; ++j) {
          std::complex<double> z{uniform(-1, 1), uniform(-1, 1)};
          c.entry(i, j) = z;
          c.entry(j, i) = std::conj(z);
        }
      }
      double row_col = schur_bound(c);
      double tt = ttstar_bound(c);
      std::vector<std::complex<double>> a(static_cast<std::size_t>(dim));
      double na = 0;
      for (auto& z : a) {
        z = {uniform(-1, 1), uniform(-1, 1)};
        na += std::norm(z);
      }
      double form = std::abs(c.quadratic_form(a));
      if (form > row_col * na + 1e-12) ++bad;
      if (form > tt * na + 1e-12) ++bad;
    }
    std::printf("spectral bound tests: %d violations in %d trials\n", bad, trials);
    ok = ok && bad == 0;
  }
  if (suite == "partial-summation" || suite == "all") {
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
      std::size_t len = 4 + rng() % 60;
      std::vector<double> w(len), f(len);
      for (std::size_t i = 0; i < len; ++i) {
        w[i] = uniform(-3, 3);
        f[i] = uniform(-10, 10);
      }
      auto r = partial_summation_bound(w, f);
      if (r.lhs > r.rhs + 1e-12 * (1.0 + r.rhs)) ++bad;
    }
    std::printf("summation-by-parts tests: %d violations in %d trials\n", bad, trials);
    ok = ok && bad == 0;
  }
  if (suite != "derivative" && suite != "spectral-bounds" &&
      suite != "partial-summation" && suite != "all")
    throw invalid_input("unknown test suite: " + suite);
  return ok ? kExitOk : kExitNumerical;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"restrict_lab: numerical experiments for weighted character sums on "
               "zero-curvature monomial curves"};
  app.require_subcommand(1);
  app.set_config("--config", "", "plain key = value configuration file");
  app.get_config_formatter_base()->comment('#');

  CommonOptions opt_opnorm, opt_lower, opt_cyl, opt_moment, opt_kernels, opt_tests;
  std::string lower_quantity = "interference";
  std::string kernels_check = "rowsum";
  std::string tests_suite = "all";

  auto* c_opnorm = app.add_subcommand(
      "opnorm", "restriction constant scan via matrix-free power iteration");
  opt_opnorm.attach(c_opnorm, 1e-6);

  auto* c_lower = app.add_subcommand(
      "lowerbound", "constructive-interference lower bound experiments");
  opt_lower.attach(c_lower, 1e-6);
  c_lower->add_option("--quantity", lower_quantity,
                      "interference | constant | lipschitz")
      ->capture_default_str();

  auto* c_cyl = app.add_subcommand("cylinder",
                                   "two-dimensional zero-curvature cylinder ratios");
  opt_cyl.attach(c_cyl, 1e-6);
  opt_cyl.Ns = {256, 512, 1024, 2048};

  auto* c_moment =
      app.add_subcommand("moment", "moment-curve construction and certificate");
  opt_moment.attach(c_moment, 1e-6);
  opt_moment.Ns = {256, 512, 1024, 2048};

  auto* c_kernels = app.add_subcommand(
      "kernels", "stationary/correlation kernel checks and growth bands");
  opt_kernels.attach(c_kernels, 1e-6);
  opt_kernels.Ns = {128, 256, 512};
  opt_kernels.trials = 200;
  c_kernels->add_option("--check", kernels_check,
                        "stationary | nonstationary | near | far | rowsum | profile | "
                        "schur-witness")
      ->capture_default_str();

  auto* c_tests =
      app.add_subcommand("tests", "randomized property suites for the bound tools");
  opt_tests.attach(c_tests, 1e-6);
  opt_tests.trials = 1000;
  c_tests->add_option("--suite", tests_suite,
                      "derivative | spectral-bounds | partial-summation | all")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("restrict_lab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (c_opnorm->parsed()) {
      opt_opnorm.validate();
      opt_opnorm.apply_threads();
      return cmd_opnorm(opt_opnorm);
    }
    if (c_lower->parsed()) {
      opt_lower.validate();
      opt_lower.apply_threads();
      return cmd_lowerbound(opt_lower, lower_quantity);
    }
    if (c_cyl->parsed()) {
      opt_cyl.validate();
      opt_cyl.apply_threads();
      return cmd_cylinder(opt_cyl);
    }
    if (c_moment->parsed()) {
      opt_moment.validate();
      opt_moment.apply_threads();
      return cmd_moment(opt_moment);
    }
    if (c_kernels->parsed()) {
      opt_kernels.validate();
      opt_kernels.apply_threads();
      return cmd_kernels(opt_kernels, kernels_check);
    }
    if (c_tests->parsed()) {
      opt_tests.validate();
      opt_tests.apply_threads();
      return cmd_tests(opt_tests, tests_suite);
    }
    return kExitUsage;
  } catch (const convergence_error& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitNumerical;
  } catch (const invalid_input& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitUsage;
  } catch (const resource_error& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return kExitUsage;
  }
}

}  // namespace rlab
