#include "rlab/phase_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

double branch_f(double x, double t, int k) {
  return (x - t) * std::pow(x + t, -1.0 / double(k - 1));
}

double branch_fp(double x, double t, int k) {
  // d/dx of the f-branch times k: ((k-2)x + kt) / (x+t)^{k/(k-1)}
  return (double(k - 2) * x + double(k) * t) * std::pow(x + t, -double(k) / double(k - 1));
}

double branch_fpp(double x, double t, int k) {
  // ((2-k)x + (2-3k)t) / (x+t)^{(2k-1)/(k-1)}
  return (double(2 - k) * x + double(2 - 3 * k) * t) *
         std::pow(x + t, -double(2 * k - 1) / double(k - 1));
}

}  // namespace

double PhaseProfile::f(double x) const {
  return (double(k - 1) / double(k)) * (branch_f(x, n, k) - branch_f(x, m, k));
}

double PhaseProfile::fp(double x) const {
  return (branch_fp(x, n, k) - branch_fp(x, m, k)) / double(k);
}

double PhaseProfile::fpp(double x) const {
  return (branch_fpp(x, n, k) - branch_fpp(x, m, k)) / double(k * (k - 1));
}

ProfileReport phase_profile_report(int n, int m, int k, double block_fraction, double N,
                                   int x_samples) {
  if (!(n < m)) throw invalid_input("phase profile requires n < m");
  double blo = block_fraction * N;
  if (double(n) < blo || double(m) > N)
    throw invalid_input("pair outside the dyadic block");

  PhaseProfile prof{n, m, k};
  ProfileReport rep;
  rep.f_match = std::abs(prof.f(double(n)) - prof.f(double(m)));

  double scale2 = std::pow(N, double(2 * k - 1) / double(k - 1));
  double gap = double(m - n);

  rep.r2_min = std::numeric_limits<double>::infinity();
  rep.r1_min = std::numeric_limits<double>::infinity();

  auto fd_check = [&](double x) {
    double h = std::max(1e-3, 1e-7 * x);
    double fd1 = (prof.f(x + h) - prof.f(x - h)) / (2.0 * h);
    double fd2 = (prof.fp(x + h) - prof.fp(x - h)) / (2.0 * h);
    double e1 = std::abs(fd1 - prof.fp(x)) / std::max(std::abs(prof.fp(x)), 1e-300);
    double e2 = std::abs(fd2 - prof.fpp(x)) / std::max(std::abs(prof.fpp(x)), 1e-300);
    rep.fp_fd_max_rel = std::max(rep.fp_fd_max_rel, e1);
    rep.fpp_fd_max_rel = std::max(rep.fpp_fd_max_rel, e2);
  };

  for (int i = 0; i < x_samples; ++i) {
    double x = blo + (N - blo) * double(i) / double(x_samples - 1);
    double r2 = std::abs(prof.fpp(x)) * scale2 / gap;
    rep.r2_min = std::min(rep.r2_min, r2);
    rep.r2_max = std::max(rep.r2_max, r2);
  }
  // x near n and near m, offsets up to a tenth of the pair separation
  for (int side = 0; side < 2; ++side) {
    double center = side == 0 ? double(n) : double(m);
    for (int i = 0; i < x_samples; ++i) {
      double off = 0.1 * gap * (2.0 * double(i) / double(x_samples - 1) - 1.0);
      double x = center + off;
      if (x < blo || x > N) continue;
      double r1 = std::abs(prof.fp(x)) * scale2 / (gap * gap);
      rep.r1_min = std::min(rep.r1_min, r1);
      rep.r1_max = std::max(rep.r1_max, r1);
    }
  }
  // validate derivatives at a few interior points
  for (int i = 1; i <= 4; ++i) fd_check(blo + (N - blo) * double(i) / 5.0);
  return rep;
}

}  // namespace rlab
