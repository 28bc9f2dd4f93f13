#include <algorithm>
#include <cmath>

#include "rlab/errors.hpp"
#include "rlab/spectral.hpp"

namespace rlab {
namespace {

double off_diagonal_norm(const KernelMatrix& a) {
  double s = 0.0;
  int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a.entry(i, j));
  return std::sqrt(s);
}

double frobenius_norm(const KernelMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(KernelMatrix a, int max_sweeps, double* off_norm,
                                       int* sweeps_out) {
  if (a.hermitian_defect() > 1e-9 * (1.0 + frobenius_norm(a)))
    throw invalid_input("jacobi_eigenvalues requires a Hermitian matrix");
  a.symmetrize();
  const int n = a.size();
  const double fro = frobenius_norm(a);
  const double stop = 1e-14 * (fro > 0 ? fro : 1.0);

  int sweeps = 0;
  while (sweeps < max_sweeps && off_diagonal_norm(a) > stop) {
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        std::complex<double> apq = a.entry(p, q);
        double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Unitary rotation J annihilating (p, q):
        //   J_pp = c, J_pq = s, J_qp = -s e^{-i phi}, J_qq = c e^{-i phi},
        // the complex lift of the real Jacobi rotation applied after
        // rephasing a_pq = |a_pq| e^{i phi} to a real pivot.
        std::complex<double> eiphi = apq / mag;
        double app = a.entry(p, p).real();
        double aqq = a.entry(q, q).real();
        double tau = (aqq - app) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        std::complex<double> se_conj = s * std::conj(eiphi);  // s e^{-i phi}
        std::complex<double> ce_conj = c * std::conj(eiphi);  // c e^{-i phi}

        for (int i = 0; i < n; ++i) {  // A <- A J
          std::complex<double> aip = a.entry(i, p);
          std::complex<double> aiq = a.entry(i, q);
          a.entry(i, p) = c * aip - se_conj * aiq;
          a.entry(i, q) = s * aip + ce_conj * aiq;
        }
        for (int j = 0; j < n; ++j) {  // A <- J^H A
          std::complex<double> apj = a.entry(p, j);
          std::complex<double> aqj = a.entry(q, j);
          a.entry(p, j) = c * apj - std::conj(se_conj) * aqj;
          a.entry(q, j) = s * apj + std::conj(ce_conj) * aqj;
        }
      }
    }
  }
  if (off_norm != nullptr) *off_norm = off_diagonal_norm(a);
  if (sweeps_out != nullptr) *sweeps_out = sweeps;

  auto un = std::size_t(n);
  std::vector<double> eig(un);
  for (int i = 0; i < n; ++i) eig[std::size_t(i)] = a.entry(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace rlab
