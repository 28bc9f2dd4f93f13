#pragma once

namespace rlab {

// The scalar profile comparing the critical-point phases of two kernel rows:
//   f(x) = ((k-1)/k) [ (x-n)/(x+n)^{1/(k-1)} - (x-m)/(x+m)^{1/(k-1)} ],
// defined for x in the dyadic block; f(n) = f(m) exactly.
struct PhaseProfile {
  int n = 0;
  int m = 0;
  int k = 3;

  double f(double x) const;
  double fp(double x) const;   // closed-form first derivative
  double fpp(double x) const;  // closed-form second derivative
};

struct ProfileReport {
  // r2(x) = |f''(x)| N^{(2k-1)/(k-1)} / |m-n| over the block grid
  double r2_min = 0.0, r2_max = 0.0;
  // r1(x) = |f'(x)| N^{(2k-1)/(k-1)} / (m-n)^2 for x near n or near m
  double r1_min = 0.0, r1_max = 0.0;
  double f_match = 0.0;        // |f(n) - f(m)| (should vanish)
  double fp_fd_max_rel = 0.0;  // closed-form f' vs central differences of f
  double fpp_fd_max_rel = 0.0; // closed-form f'' vs central differences of f'
};

// Scans x over [block_fraction * N, N] (r2) and over |x - n|, |x - m| <=
// 0.1 (m - n) (r1), and validates the closed-form derivatives against
// finite differences at the sample points.
ProfileReport phase_profile_report(int n, int m, int k, double block_fraction,
                                   double N, int x_samples = 33);

}  // namespace rlab
