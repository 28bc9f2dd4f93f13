#include "rlab/characters.hpp"

#include <algorithm>
#include <type_traits>

#include "stream_kernel.hpp"

namespace rlab {

std::complex<double> char_sum(const PhasePoly& poly, int lo,
                              std::span<const std::complex<double>> a) {
  // Scalar reference path; exact summation order n = lo..hi.
  double sr = 0, si = 0;
  std::size_t len = a.size();
  std::size_t done = 0;
  while (done < len) {
    std::size_t stop = std::min(len, done + detail::kResetSpan);
    double n0 = double(lo) + double(done);
    std::complex<double> c = e(poly(n0));
    std::complex<double> u = e(poly(n0 + 1) - poly(n0));
    std::complex<double> v = e(poly(n0 + 2) - 2 * poly(n0 + 1) + poly(n0));
    std::complex<double> w = e(6.0 * poly.c3);
    for (std::size_t i = done; i < stop; ++i) {
      sr += a[i].real() * c.real() - a[i].imag() * c.imag();
      si += a[i].real() * c.imag() + a[i].imag() * c.real();
      c *= u;
      u *= v;
      if (poly.cubic()) v *= w;
    }
    done = stop;
  }
  return {sr, si};
}

std::complex<double> char_sum_split(const PhasePoly& poly, int lo, std::size_t len,
                                    const double* are, const double* aim) {
  std::size_t padded = padded_length(len);
  if (poly.cubic()) return detail::single_dot<true>(poly, lo, padded, are, aim);
  return detail::single_dot<false>(poly, lo, padded, are, aim);
}

void char_block(const PhasePoly& poly, int lo, std::size_t padded_len, double* cre,
                double* cim, std::size_t ncols, const double* const* are,
                const double* const* aim, std::complex<double>* dots) {
  auto run = [&](auto cubic) {
    constexpr bool kCubic = decltype(cubic)::value;
    switch (ncols) {
      case 0:
        detail::single_chars_dots<0, kCubic>(poly, lo, padded_len, nullptr, nullptr,
                                             cre, cim, dots);
        break;
      case 1:
        detail::single_chars_dots<1, kCubic>(poly, lo, padded_len, are, aim, cre, cim,
                                             dots);
        break;
      case 2:
        detail::single_chars_dots<2, kCubic>(poly, lo, padded_len, are, aim, cre, cim,
                                             dots);
        break;
      default:
        detail::single_chars_dots<3, kCubic>(poly, lo, padded_len, are, aim, cre, cim,
                                             dots);
        break;
    }
  };
  if (poly.cubic())
    run(std::true_type{});
  else
    run(std::false_type{});
}

}  // namespace rlab
