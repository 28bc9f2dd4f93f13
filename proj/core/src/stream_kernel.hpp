#pragma once

// Internal character-stream kernels. Eight interleaved stride-8 recurrence
// streams per evaluation point keep the phase recurrences latency-friendly
// and the buffers contiguous; everything here is plain arithmetic the
// autovectorizer handles. Rounding drift is bounded by restarting the
// recurrences every kResetSpan indices (drift < 1e-12 cycles per span).

#include <algorithm>
#include <complex>
#include <cstddef>

#include "rlab/characters.hpp"

namespace rlab::detail {

constexpr int kW = 8;
constexpr std::size_t kResetSpan = 1024;

template <bool Cubic>
struct Streams {
  alignas(64) double cre[kW], cim[kW];
  alignas(64) double ure[kW], uim[kW];
  alignas(64) double vre[kW], vim[kW];
  double wr = 1.0, wi = 0.0;

  void init(const PhasePoly& p, double base) {
    for (int i = 0; i < kW; ++i) {
      double n = base + i;
      auto c = e(p(n));
      auto u = e(p(n + 8) - p(n));
      cre[i] = c.real();
      cim[i] = c.imag();
      ure[i] = u.real();
      uim[i] = u.imag();
      if constexpr (Cubic) {
        auto v = e(p(n + 16) - 2 * p(n + 8) + p(n));
        vre[i] = v.real();
        vim[i] = v.imag();
      }
    }
    if constexpr (Cubic) {
      auto w3 = e(3072.0 * p.c3);
      wr = w3.real();
      wi = w3.imag();
    } else {
      auto v = e(128.0 * p.c2);
      for (int i = 0; i < kW; ++i) {
        vre[i] = v.real();
        vim[i] = v.imag();
      }
    }
  }

  // one stride-8 step for all streams
  inline void advance() {
    if constexpr (Cubic) {
      for (int i = 0; i < kW; ++i) {
        double cr = cre[i], ci = cim[i];
        double nr = cr * ure[i] - ci * uim[i];
        double ni = cr * uim[i] + ci * ure[i];
        cre[i] = nr;
        cim[i] = ni;
        double pr = ure[i] * vre[i] - uim[i] * vim[i];
        double pi = ure[i] * vim[i] + uim[i] * vre[i];
        ure[i] = pr;
        uim[i] = pi;
        double qr = vre[i] * wr - vim[i] * wi;
        double qi = vre[i] * wi + vim[i] * wr;
        vre[i] = qr;
        vim[i] = qi;
      }
    } else {
      double vr = vre[0], vi = vim[0];
      for (int i = 0; i < kW; ++i) {
        double cr = cre[i], ci = cim[i];
        double nr = cr * ure[i] - ci * uim[i];
        double ni = cr * uim[i] + ci * ure[i];
        cre[i] = nr;
        cim[i] = ni;
        double pr = ure[i] * vr - uim[i] * vi;
        double pi = ure[i] * vi + uim[i] * vr;
        ure[i] = pr;
        uim[i] = pi;
      }
    }
  }
};

// Characters for two points plus per-column dot products, one sweep.
// Buffers (when Store) and coefficient arrays are padded to multiples of 8.
// Coefficient pointers are hoisted into locals so the column loop carries no
// double indirection into the hot path.
template <int NCols, bool Store, bool Cubic>
void pair_chars_dots(const PhasePoly& pa, const PhasePoly& pb, int lo,
                     std::size_t padded, const double* const* ar,
                     const double* const* ai, double* __restrict bra,
                     double* __restrict bia, double* __restrict brb,
                     double* __restrict bib, std::complex<double>* dots_a,
                     std::complex<double>* dots_b) {
  static_assert(NCols >= 0 && NCols <= 3);
  Streams<Cubic> sa, sb;
  alignas(64) double accra[NCols > 0 ? NCols : 1][kW] = {};
  alignas(64) double accia[NCols > 0 ? NCols : 1][kW] = {};
  alignas(64) double accrb[NCols > 0 ? NCols : 1][kW] = {};
  alignas(64) double accib[NCols > 0 ? NCols : 1][kW] = {};

  const double* __restrict a0r = NCols > 0 ? ar[0] : nullptr;
  const double* __restrict a0i = NCols > 0 ? ai[0] : nullptr;
  const double* __restrict a1r = NCols > 1 ? ar[1] : nullptr;
  const double* __restrict a1i = NCols > 1 ? ai[1] : nullptr;
  const double* __restrict a2r = NCols > 2 ? ar[2] : nullptr;
  const double* __restrict a2i = NCols > 2 ? ai[2] : nullptr;

  std::size_t t = 0;
  while (t < padded) {
    std::size_t stop = std::min(padded, t + kResetSpan);
    sa.init(pa, double(lo) + double(t));
    sb.init(pb, double(lo) + double(t));
    for (; t < stop; t += kW) {
      for (int i = 0; i < kW; ++i) {
        double car = sa.cre[i], cai = sa.cim[i];
        double cbr = sb.cre[i], cbi = sb.cim[i];
        if constexpr (Store) {
          bra[t + i] = car;
          bia[t + i] = cai;
          brb[t + i] = cbr;
          bib[t + i] = cbi;
        }
        if constexpr (NCols > 0) {
          double xr = a0r[t + i], xi = a0i[t + i];
          accra[0][i] += xr * car - xi * cai;
          accia[0][i] += xr * cai + xi * car;
          accrb[0][i] += xr * cbr - xi * cbi;
          accib[0][i] += xr * cbi + xi * cbr;
        }
        if constexpr (NCols > 1) {
          double xr = a1r[t + i], xi = a1i[t + i];
          accra[1][i] += xr * car - xi * cai;
          accia[1][i] += xr * cai + xi * car;
          accrb[1][i] += xr * cbr - xi * cbi;
          accib[1][i] += xr * cbi + xi * cbr;
        }
        if constexpr (NCols > 2) {
          double xr = a2r[t + i], xi = a2i[t + i];
          accra[2][i] += xr * car - xi * cai;
          accia[2][i] += xr * cai + xi * car;
          accrb[2][i] += xr * cbr - xi * cbi;
          accib[2][i] += xr * cbi + xi * cbr;
        }
      }
      sa.advance();
      sb.advance();
    }
  }
  for (int j = 0; j < NCols; ++j) {
    double ra = 0, ia = 0, rb = 0, ib = 0;
    for (int i = 0; i < kW; ++i) {
      ra += accra[j][i];
      ia += accia[j][i];
      rb += accrb[j][i];
      ib += accib[j][i];
    }
    dots_a[j] = {ra, ia};
    dots_b[j] = {rb, ib};
  }
}

// out_j[n] += ta_j conj(ca[n]) + tb_j conj(cb[n]) for the stored characters.
template <int NCols>
void pair_adjoint(std::size_t padded, const std::complex<double>* ta,
                  const std::complex<double>* tb, const double* __restrict bra,
                  const double* __restrict bia, const double* __restrict brb,
                  const double* __restrict bib, double* const* outr,
                  double* const* outi) {
  for (int j = 0; j < NCols; ++j) {
    double* __restrict orr = outr[j];
    double* __restrict oii = outi[j];
    double t0r = ta[j].real(), t0i = ta[j].imag();
    double t1r = tb[j].real(), t1i = tb[j].imag();
    for (std::size_t n = 0; n < padded; ++n) {
      double cra = bra[n], cia = bia[n], crb = brb[n], cib = bib[n];
      orr[n] += t0r * cra + t0i * cia + t1r * crb + t1i * cib;
      oii[n] += t0i * cra - t0r * cia + t1i * crb - t1r * cib;
    }
  }
}

// Characters for one point stored to a buffer, plus per-column dots.
template <int NCols, bool Cubic>
void single_chars_dots(const PhasePoly& p, int lo, std::size_t padded,
                       const double* const* ar, const double* const* ai,
                       double* __restrict br, double* __restrict bi,
                       std::complex<double>* dots) {
  Streams<Cubic> s;
  alignas(64) double accr[NCols > 0 ? NCols : 1][kW] = {};
  alignas(64) double acci[NCols > 0 ? NCols : 1][kW] = {};
  std::size_t t = 0;
  while (t < padded) {
    std::size_t stop = std::min(padded, t + kResetSpan);
    s.init(p, double(lo) + double(t));
    for (; t < stop; t += kW) {
      for (int i = 0; i < kW; ++i) {
        br[t + i] = s.cre[i];
        bi[t + i] = s.cim[i];
      }
      for (int j = 0; j < NCols; ++j) {
        const double* __restrict xr = ar[j] + t;
        const double* __restrict xi = ai[j] + t;
        for (int i = 0; i < kW; ++i) {
          accr[j][i] += xr[i] * s.cre[i] - xi[i] * s.cim[i];
          acci[j][i] += xr[i] * s.cim[i] + xi[i] * s.cre[i];
        }
      }
      s.advance();
    }
  }
  for (int j = 0; j < NCols; ++j) {
    double r = 0, im = 0;
    for (int i = 0; i < kW; ++i) {
      r += accr[j][i];
      im += acci[j][i];
    }
    dots[j] = {r, im};
  }
}

// Single-point fused characters + one dot, no buffer.
template <bool Cubic>
std::complex<double> single_dot(const PhasePoly& p, int lo, std::size_t padded,
                                const double* __restrict xr,
                                const double* __restrict xi) {
  Streams<Cubic> s;
  alignas(64) double accr[kW] = {}, acci[kW] = {};
  std::size_t t = 0;
  while (t < padded) {
    std::size_t stop = std::min(padded, t + kResetSpan);
    s.init(p, double(lo) + double(t));
    for (; t < stop; t += kW) {
      for (int i = 0; i < kW; ++i) {
        accr[i] += xr[t + i] * s.cre[i] - xi[t + i] * s.cim[i];
        acci[i] += xr[t + i] * s.cim[i] + xi[t + i] * s.cre[i];
      }
      s.advance();
    }
  }
  double r = 0, im = 0;
  for (int i = 0; i < kW; ++i) {
    r += accr[i];
    im += acci[i];
  }
  return {r, im};
}

}  // namespace rlab::detail
