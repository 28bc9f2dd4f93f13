#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rlab {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// The character e(z) = exp(2*pi*i*z). All phases in this library are
// measured in these units ("cycles"), so a phase change of 1 is one full
// oscillation.
inline std::complex<double> e(double z) {
  return {std::cos(kTwoPi * z), std::sin(kTwoPi * z)};
}

// Phase polynomial in the integer summation index:
//   psi(n) = c1*n + c2*n^2 + c3*n^3   (cycles)
// Every sum family in the lab reduces to this form at a fixed point x:
// the monomial family nx + beta n^2 x^k has c1 = x, c2 = beta x^k, and the
// three-dimensional moment-curve sums add a cubic term.
struct PhasePoly {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator()(double n) const { return n * (c1 + n * (c2 + n * c3)); }
  bool cubic() const { return c3 != 0.0; }
};

// S = sum_{n=lo}^{hi} a_n e(psi(n)).  Direct summation via phase-difference
// recurrences (no transforms); one arbitrary-precision-verified code path
// for everything that evaluates a weighted character sum.
std::complex<double> char_sum(const PhasePoly& poly, int lo,
                              std::span<const std::complex<double>> a);

// Split-storage variant used by the hot loops. are/aim hold Re/Im of the
// coefficients for n = lo..lo+len-1, padded to a multiple of 8 with zeros.
std::complex<double> char_sum_split(const PhasePoly& poly, int lo, std::size_t len,
                                    const double* are, const double* aim);

// Writes e(psi(n)) for n = lo..lo+len-1 into cre/cim (padded length,
// multiples of 8; the tail beyond len is filled but meaningless) and returns
// the dot products S_j = sum_n a_j[n] e(psi(n)) for each coefficient column.
// Columns are optional (ncols may be 0 when only the characters are needed).
void char_block(const PhasePoly& poly, int lo, std::size_t padded_len,
                double* cre, double* cim, std::size_t ncols,
                const double* const* are, const double* const* aim,
                std::complex<double>* dots);

inline std::size_t padded_length(std::size_t len) { return (len + 7) / 8 * 8; }

// Re/Im coefficient planes padded to the kernel stride, zero-filled tail.
struct SplitCoefficients {
  std::vector<double> re, im;
  int lo = 0;
  std::size_t len = 0;
  std::size_t padded = 0;

  SplitCoefficients(int lo_index, std::span<const std::complex<double>> values)
      : lo(lo_index), len(values.size()), padded(padded_length(values.size())) {
    re.assign(padded, 0.0);
    im.assign(padded, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      re[i] = values[i].real();
      im[i] = values[i].imag();
    }
  }

  std::complex<double> sum_against(const PhasePoly& poly) const {
    return char_sum_split(poly, lo, len, re.data(), im.data());
  }
};

}  // namespace rlab
