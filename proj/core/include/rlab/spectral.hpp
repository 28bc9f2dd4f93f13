#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rlab/coefficients.hpp"
#include "rlab/kernel_matrix.hpp"
#include "rlab/phase.hpp"
#include "rlab/quadrature.hpp"

namespace rlab {

struct OpNormResult {
  enum class Method { dense, power_iteration };
  double value = 0.0;  // the restriction constant, sqrt of the top eigenvalue
  int iterations = 0;
  double residual = 0.0;  // relative Rayleigh residual (dense: off-diagonal norm)
  Method method = Method::dense;
};

// Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps.
std::vector<double> jacobi_eigenvalues(KernelMatrix matrix, int max_sweeps = 50,
                                       double* off_norm = nullptr, int* sweeps = nullptr);

// integral over [lo, hi] of e(psi(x, n) - psi(x, m)) dx on the given grid.
std::complex<double> gram_entry(int n, int m, const PhaseSpec& phase, double lo,
                                double hi, const QuadratureGrid& grid);

// Full (2N+1)-point Gram kernel on [-N, N], Hermitian by construction.
// Each entry is integrated on its own grid certified for that entry's
// oscillation. size_cap guards the O(size^3) dense eigensolve downstream.
KernelMatrix dense_gram(int N, const PhaseSpec& phase, double lo, double hi,
                        double rho = 8.0, int size_cap = 513);

// sqrt(largest eigenvalue) via cyclic Jacobi. Eigenvalues are clamped at 0
// when reporting (quadrature noise may leave a tiny negative floor).
OpNormResult opnorm_dense(const KernelMatrix& gram);

// Matrix-free power iteration for the restriction constant on [-N, N].
// The operator a -> G a is applied as the quadrature pairing of
// S(x) = sum_n a_n e(psi(x, n)) against e(psi(x, m)): two passes per node,
// cost O(Q N) per iteration, no Q x N storage. A small simultaneous-iteration
// block (3 columns) with a Rayleigh-Ritz step absorbs the near-degenerate
// top pairs that mirror-symmetric phases produce. Deterministic given seed.
OpNormResult opnorm_iterative(int N, const PhaseSpec& phase, double lo, double hi,
                              double tol = 1e-9, int max_iter = 10000,
                              std::uint64_t seed = 1, double rho = 8.0,
                              GridLimits limits = {});

// One application y = G a of the quadrature Gram operator (exposed for
// cross-checks; same kernel the power iteration uses).
std::vector<std::complex<double>> gram_apply(const PhaseSpec& phase,
                                             const QuadratureGrid& grid, int lo_index,
                                             const std::vector<std::complex<double>>& a);

}  // namespace rlab
