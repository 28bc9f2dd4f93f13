#include "rlab/spectral.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"
#include "stream_kernel.hpp"

namespace rlab {
namespace {

constexpr int kBlockCols = 3;          // simultaneous-iteration block
constexpr std::int64_t kSuperPanels = 4096;  // nodes per reduction block / 16

double entry_variation(int n, int m, const PhaseSpec& phase, double lo, double hi) {
  // total variation bound for e(psi(.,n) - psi(.,m)) in cycles
  double r = std::abs(double(n) - double(m));
  double s = std::abs(double(n) * n - double(m) * m);
  int k = phase.k();
  auto F = [&](double x) {
    double p = std::abs(x);
    double xk = 1.0;
    for (int i = 0; i < k; ++i) xk *= p;
    return std::copysign(xk, x);
  };
  return r * (hi - lo) + std::abs(phase.beta()) * s * (F(hi) - F(lo));
}

// Direct quadrature of e(delta_psi) on a per-entry uniform grid.
std::complex<double> entry_integral(int n, int m, const PhaseSpec& phase, double lo,
                                    double hi, double rho) {
  double variation = entry_variation(n, m, phase, lo, hi);
  bool symmetric = (phase.kind() != PhaseKind::general_scalar) && (phase.k() % 2 == 1) &&
                   (lo == -hi);
  double r = double(n) - double(m);
  double s2 = double(n) * n - double(m) * m;
  double beta = phase.beta();
  int k = phase.k();
  auto delta_phase = [&](double x) {
    double xk = 1.0;
    for (int i = 0; i < k; ++i) xk *= x;
    return r * x + beta * s2 * xk;
  };
  if (symmetric) {
    // odd k on [-L, L]: the integrand pairs to 2 cos(2 pi delta_psi) on [0, L]
    QuadratureGrid g = build_grid_for_variation(0.0, hi, 0.5 * variation, rho, 64);
    double acc = 0.0;
    for (std::int64_t i = 0; i < g.node_count(); ++i)
      acc += g.weight(i) * std::cos(kTwoPi * delta_phase(g.node(i)));
    return {2.0 * acc, 0.0};
  }
  if (phase.kind() == PhaseKind::general_scalar) {
    double sup = std::abs(r);
    const int samples = 256;
    for (int i = 0; i <= samples; ++i) {
      double x = lo + (hi - lo) * i / samples;
      sup = std::max(sup, std::abs(r) + std::abs(s2) * std::abs(phase.phi_deriv(x, 1)));
    }
    QuadratureGrid g = build_grid_for_variation(lo, hi, sup * (hi - lo), rho, 64);
    double sr = 0, si = 0;
    for (std::int64_t i = 0; i < g.node_count(); ++i) {
      double x = g.node(i);
      auto c = e(phase.psi(x, n) - phase.psi(x, m));
      sr += g.weight(i) * c.real();
      si += g.weight(i) * c.imag();
    }
    return {sr, si};
  }
  QuadratureGrid g = build_grid_for_variation(lo, hi, variation, rho, 64);
  double sr = 0, si = 0;
  for (std::int64_t i = 0; i < g.node_count(); ++i) {
    auto c = e(delta_phase(g.node(i)));
    sr += g.weight(i) * c.real();
    si += g.weight(i) * c.imag();
  }
  return {sr, si};
}

// --- block operator ------------------------------------------------------

// Split-complex column storage padded to a stride-8 boundary.
struct Columns {
  std::size_t len;
  std::size_t padded;
  std::vector<double> re, im;  // [col * padded + i]
  int ncols;

  Columns(std::size_t n, int cols)
      : len(n), padded(padded_length(n)), re(padded * std::size_t(cols), 0.0),
        im(padded * std::size_t(cols), 0.0), ncols(cols) {}

  double* col_re(int j) { return re.data() + std::size_t(j) * padded; }
  double* col_im(int j) { return im.data() + std::size_t(j) * padded; }
  const double* col_re(int j) const { return re.data() + std::size_t(j) * padded; }
  const double* col_im(int j) const { return im.data() + std::size_t(j) * padded; }

  void clear() {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
  }
};

// y_j = G x_j for up to 3 columns at once: per node, characters are built
// once, paired against every column, and the weighted sums are scattered
// back through the conjugate characters. Work is split into fixed panel
// super-blocks whose partial outputs are reduced in order, so results do not
// depend on the worker count.
void gram_apply_block(const PhaseSpec& phase, const QuadratureGrid& grid, int lo_index,
                      const Columns& x, Columns& y) {
  y.clear();
  const std::size_t padded = x.padded;
  const int ncols = x.ncols;
  std::int64_t supers = (grid.panel_count() + kSuperPanels - 1) / kSuperPanels;

  std::vector<Columns> partials(std::size_t(supers), Columns(x.len, ncols));
  const double* ar[kBlockCols];
  const double* ai[kBlockCols];
  for (int j = 0; j < ncols; ++j) {
    ar[j] = x.col_re(j);
    ai[j] = x.col_im(j);
  }

  parallel_blocks(supers, [&](std::int64_t sb) {
    Columns& local = partials[std::size_t(sb)];
    std::vector<double> bra(padded), bia(padded), brb(padded), bib(padded);
    double* outr[kBlockCols];
    double* outi[kBlockCols];
    for (int j = 0; j < ncols; ++j) {
      outr[j] = local.col_re(j);
      outi[j] = local.col_im(j);
    }
    std::int64_t p0 = sb * kSuperPanels;
    std::int64_t p1 = std::min(p0 + kSuperPanels, grid.panel_count());
    std::int64_t i0 = 16 * p0, i1 = 16 * p1;
    for (std::int64_t i = i0; i < i1; i += 2) {
      double xa = grid.node(i);
      bool have_b = i + 1 < i1;
      double xb = have_b ? grid.node(i + 1) : xa;
      PhasePoly pa = phase.poly_at(xa);
      PhasePoly pb = phase.poly_at(xb);
      std::complex<double> da[kBlockCols], db[kBlockCols];
      switch (ncols) {
        case 1:
          detail::pair_chars_dots<1, true, false>(pa, pb, lo_index, padded, ar, ai,
                                                  bra.data(), bia.data(), brb.data(),
                                                  bib.data(), da, db);
          break;
        case 2:
          detail::pair_chars_dots<2, true, false>(pa, pb, lo_index, padded, ar, ai,
                                                  bra.data(), bia.data(), brb.data(),
                                                  bib.data(), da, db);
          break;
        default:
          detail::pair_chars_dots<3, true, false>(pa, pb, lo_index, padded, ar, ai,
                                                  bra.data(), bia.data(), brb.data(),
                                                  bib.data(), da, db);
          break;
      }
      double wa = grid.weight(i);
      double wb = have_b ? grid.weight(i + 1) : 0.0;
      std::complex<double> ta[kBlockCols], tb[kBlockCols];
      for (int j = 0; j < ncols; ++j) {
        ta[j] = wa * da[j];
        tb[j] = wb * db[j];
      }
      switch (ncols) {
        case 1:
          detail::pair_adjoint<1>(padded, ta, tb, bra.data(), bia.data(), brb.data(),
                                  bib.data(), outr, outi);
          break;
        case 2:
          detail::pair_adjoint<2>(padded, ta, tb, bra.data(), bia.data(), brb.data(),
                                  bib.data(), outr, outi);
          break;
        default:
          detail::pair_adjoint<3>(padded, ta, tb, bra.data(), bia.data(), brb.data(),
                                  bib.data(), outr, outi);
          break;
      }
    }
  });

  for (std::int64_t sb = 0; sb < supers; ++sb) {
    const Columns& local = partials[std::size_t(sb)];
    for (int j = 0; j < ncols; ++j) {
      double* yr = y.col_re(j);
      double* yi = y.col_im(j);
      const double* pr = local.col_re(j);
      const double* pi = local.col_im(j);
      for (std::size_t i = 0; i < padded; ++i) {
        yr[i] += pr[i];
        yi[i] += pi[i];
      }
    }
  }
  // the padding indices carry no coefficients; keep them identically zero
  for (int j = 0; j < ncols; ++j)
    for (std::size_t i = y.len; i < padded; ++i) {
      y.col_re(j)[i] = 0.0;
      y.col_im(j)[i] = 0.0;
    }
}

// --- small dense helpers --------------------------------------------------

std::complex<double> col_dot(const Columns& a, int ja, const Columns& b, int jb) {
  // <a_ja, b_jb> = sum conj(a) b
  const double* arr = a.col_re(ja);
  const double* ari = a.col_im(ja);
  const double* brr = b.col_re(jb);
  const double* bri = b.col_im(jb);
  double r = 0, im = 0;
  for (std::size_t i = 0; i < a.len; ++i) {
    r += arr[i] * brr[i] + ari[i] * bri[i];
    im += arr[i] * bri[i] - ari[i] * brr[i];
  }
  return {r, im};
}

double col_norm(const Columns& a, int j) {
  const double* r = a.col_re(j);
  const double* im = a.col_im(j);
  double s = 0;
  for (std::size_t i = 0; i < a.len; ++i) s += r[i] * r[i] + im[i] * im[i];
  return std::sqrt(s);
}

void col_axpy(Columns& y, int jy, std::complex<double> alpha, const Columns& x, int jx) {
  double ar = alpha.real(), ai = alpha.imag();
  double* yr = y.col_re(jy);
  double* yi = y.col_im(jy);
  const double* xr = x.col_re(jx);
  const double* xi = x.col_im(jx);
  for (std::size_t i = 0; i < y.len; ++i) {
    yr[i] += ar * xr[i] - ai * xi[i];
    yi[i] += ar * xi[i] + ai * xr[i];
  }
}

void col_scale(Columns& y, int j, double s) {
  double* yr = y.col_re(j);
  double* yi = y.col_im(j);
  for (std::size_t i = 0; i < y.len; ++i) {
    yr[i] *= s;
    yi[i] *= s;
  }
}

// Modified Gram-Schmidt, two passes; deterministic re-seed on rank collapse.
void orthonormalize(Columns& x, std::mt19937_64& rng) {
  for (int j = 0; j < x.ncols; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) {
        std::complex<double> proj = col_dot(x, i, x, j);
        col_axpy(x, j, -proj, x, i);
      }
    double norm = col_norm(x, j);
    if (norm < 1e-290) {
      double* r = x.col_re(j);
      double* im = x.col_im(j);
      for (std::size_t i = 0; i < x.len; ++i) {
        r[i] = 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
        im[i] = 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
      }
      --j;  // redo this column
      continue;
    }
    col_scale(x, j, 1.0 / norm);
  }
}

// Eigen-decomposition of a b x b Hermitian matrix (b <= 3) by Jacobi with
// accumulated rotations. Returns eigenvalues ascending and the unitary V.
void small_hermitian_eig(int b, std::complex<double> h[kBlockCols][kBlockCols],
                         double eig[kBlockCols],
                         std::complex<double> v[kBlockCols][kBlockCols]) {
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < b; ++p)
      for (int q = p + 1; q < b; ++q) off += std::norm(h[p][q]);
    if (off < 1e-30) break;
    for (int p = 0; p < b - 1; ++p) {
      for (int q = p + 1; q < b; ++q) {
        double mag = std::abs(h[p][q]);
        if (mag < 1e-300) continue;
        // same rotation convention as jacobi_eigenvalues
        std::complex<double> eiphi = h[p][q] / mag;
        double tau = (h[q][q].real() - h[p][p].real()) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        std::complex<double> se_conj = s * std::conj(eiphi);
        std::complex<double> ce_conj = c * std::conj(eiphi);
        for (int i = 0; i < b; ++i) {
          std::complex<double> hip = h[i][p], hiq = h[i][q];
          h[i][p] = c * hip - se_conj * hiq;
          h[i][q] = s * hip + ce_conj * hiq;
        }
        for (int j = 0; j < b; ++j) {
          std::complex<double> hpj = h[p][j], hqj = h[q][j];
          h[p][j] = c * hpj - std::conj(se_conj) * hqj;
          h[q][j] = s * hpj + std::conj(ce_conj) * hqj;
        }
        for (int i = 0; i < b; ++i) {
          std::complex<double> vip = v[i][p], viq = v[i][q];
          v[i][p] = c * vip - se_conj * viq;
          v[i][q] = s * vip + ce_conj * viq;
        }
      }
    }
  }
  // sort ascending by diagonal
  int order[kBlockCols];
  for (int i = 0; i < b; ++i) order[i] = i;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (h[order[j]][order[j]].real() < h[order[i]][order[i]].real())
        std::swap(order[i], order[j]);
  std::complex<double> vt[kBlockCols][kBlockCols];
  double et[kBlockCols];
  for (int j = 0; j < b; ++j) {
    et[j] = h[order[j]][order[j]].real();
    for (int i = 0; i < b; ++i) vt[i][j] = v[i][order[j]];
  }
  for (int j = 0; j < b; ++j) {
    eig[j] = et[j];
    for (int i = 0; i < b; ++i) v[i][j] = vt[i][j];
  }
}

}  // namespace

std::complex<double> gram_entry(int n, int m, const PhaseSpec& phase, double lo,
                                double hi, const QuadratureGrid& grid) {
  if (!grid.covers(lo, hi)) throw invalid_input("quadrature grid does not cover the interval");
  double sr = 0, si = 0;
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    double x = grid.node(i);
    if (x < lo || x > hi) continue;
    auto c = e(phase.psi(x, n) - phase.psi(x, m));
    sr += grid.weight(i) * c.real();
    si += grid.weight(i) * c.imag();
  }
  return {sr, si};
}

KernelMatrix dense_gram(int N, const PhaseSpec& phase, double lo, double hi, double rho,
                        int size_cap) {
  if (N < 0) throw invalid_input("dense_gram requires N >= 0");
  int size = 2 * N + 1;
  if (size > size_cap)
    throw resource_error("dense Gram size " + std::to_string(size) +
                             " exceeds the cap of " + std::to_string(size_cap),
                         size);
  KernelMatrix g(-N, size, KernelMatrix::Tag::gram);
  // entries depend on (n - m, n^2 - m^2); fill the upper triangle and mirror
  parallel_blocks(size, [&](std::int64_t row) {
    int n = -N + int(row);
    for (int m = n; m <= N; ++m) g.at(n, m) = entry_integral(n, m, phase, lo, hi, rho);
  });
  for (int n = -N; n <= N; ++n)
    for (int m = n + 1; m <= N; ++m) g.at(m, n) = std::conj(g.at(n, m));
  return g;
}

OpNormResult opnorm_dense(const KernelMatrix& gram) {
  double off = 0;
  int sweeps = 0;
  auto eig = jacobi_eigenvalues(gram, 50, &off, &sweeps);
  double top = eig.empty() ? 0.0 : eig.back();
  OpNormResult r;
  r.value = std::sqrt(std::max(top, 0.0));
  r.iterations = sweeps;
  double fro = 0;
  for (const auto& z : gram.data()) fro += std::norm(z);
  r.residual = off / std::sqrt(std::max(fro, 1e-300));
  r.method = OpNormResult::Method::dense;
  return r;
}

std::vector<std::complex<double>> gram_apply(const PhaseSpec& phase,
                                             const QuadratureGrid& grid, int lo_index,
                                             const std::vector<std::complex<double>>& a) {
  Columns x(a.size(), 1), y(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    x.col_re(0)[i] = a[i].real();
    x.col_im(0)[i] = a[i].imag();
  }
  gram_apply_block(phase, grid, lo_index, x, y);
  std::vector<std::complex<double>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = {y.col_re(0)[i], y.col_im(0)[i]};
  return out;
}

OpNormResult opnorm_iterative(int N, const PhaseSpec& phase, double lo, double hi,
                              double tol, int max_iter, std::uint64_t seed, double rho,
                              GridLimits limits) {
  if (N < 0) throw invalid_input("opnorm_iterative requires N >= 0");
  if (!(tol > 0.0)) throw invalid_input("opnorm_iterative requires tol > 0");
  QuadratureGrid grid = build_adaptive_grid(phase, N, lo, hi, rho, limits);

  const std::size_t dim = std::size_t(2 * N + 1);
  const int b = int(std::min<std::size_t>(kBlockCols, dim));
  std::mt19937_64 rng(seed);
  Columns x(dim, b), z(dim, b);
  for (int j = 0; j < b; ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      x.col_re(j)[i] = 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
      x.col_im(j)[i] = 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
    }
  orthonormalize(x, rng);

  double last_residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    gram_apply_block(phase, grid, -N, x, z);

    std::complex<double> h[kBlockCols][kBlockCols];
    std::complex<double> v[kBlockCols][kBlockCols];
    double eig[kBlockCols];
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) h[i][j] = col_dot(x, i, z, j);
    for (int i = 0; i < b; ++i) {
      h[i][i] = h[i][i].real();
      for (int j = i + 1; j < b; ++j) {
        std::complex<double> avg = 0.5 * (h[i][j] + std::conj(h[j][i]));
        h[i][j] = avg;
        h[j][i] = std::conj(avg);
      }
    }
    small_hermitian_eig(b, h, eig, v);
    double theta = eig[b - 1];

    // top Ritz pair: w = X v_top, G w = Z v_top; r = ||G w - theta w|| / theta
    double rnorm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      std::complex<double> wi = 0, gi = 0;
      for (int j = 0; j < b; ++j) {
        std::complex<double> c = v[j][b - 1];
        wi += c * std::complex<double>(x.col_re(j)[i], x.col_im(j)[i]);
        gi += c * std::complex<double>(z.col_re(j)[i], z.col_im(j)[i]);
      }
      rnorm2 += std::norm(gi - theta * wi);
    }
    last_residual = std::sqrt(rnorm2) / std::max(theta, 1e-300);
    if (last_residual <= tol) {
      OpNormResult r;
      r.value = std::sqrt(std::max(theta, 0.0));
      r.iterations = it;
      r.residual = last_residual;
      r.method = OpNormResult::Method::power_iteration;
      return r;
    }

    // shifted update: span((G - sigma) X) = span(Z - sigma X); sigma stays
    // below half the top eigenvalue so the dominant eigenvalue keeps winning
    double sigma = std::min(0.45 * theta, 0.5 * std::max(eig[0], 0.0));
    for (int j = 0; j < b; ++j) col_axpy(z, j, -sigma, x, j);
    std::swap(x, z);
    orthonormalize(x, rng);
  }
  throw convergence_error("power iteration did not reach tolerance " +
                              std::to_string(tol) + " in " + std::to_string(max_iter) +
                              " iterations (last residual " +
                              std::to_string(last_residual) + ")",
                          last_residual, max_iter);
}

}  // namespace rlab
