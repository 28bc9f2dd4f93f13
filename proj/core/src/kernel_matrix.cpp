#include "rlab/kernel_matrix.hpp"

#include <cmath>

#include "rlab/errors.hpp"

namespace rlab {

KernelMatrix::KernelMatrix(int offset, int size, Tag tag)
    : offset_(offset), size_(size), tag_(tag) {
  if (size <= 0) throw invalid_input("kernel matrix size must be positive");
  data_.assign(std::size_t(size) * std::size_t(size), 0.0);
}

double KernelMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (int i = 0; i < size_; ++i)
    for (int j = i; j < size_; ++j)
      worst = std::max(worst, std::abs(entry(i, j) - std::conj(entry(j, i))));
  return worst;
}

void KernelMatrix::symmetrize() {
  for (int i = 0; i < size_; ++i) {
    entry(i, i) = entry(i, i).real();
    for (int j = i + 1; j < size_; ++j) {
      std::complex<double> v = 0.5 * (entry(i, j) + std::conj(entry(j, i)));
      entry(i, j) = v;
      entry(j, i) = std::conj(v);
    }
  }
}

std::vector<std::complex<double>> KernelMatrix::apply(
    const std::vector<std::complex<double>>& x) const {
  if (int(x.size()) != size_) throw invalid_input("vector size does not match matrix");
  std::vector<std::complex<double>> y(std::size_t(size_), 0.0);
  for (int i = 0; i < size_; ++i) {
    std::complex<double> acc = 0.0;
    const std::complex<double>* row = &data_[std::size_t(i) * std::size_t(size_)];
    for (int j = 0; j < size_; ++j) acc += row[j] * x[std::size_t(j)];
    y[std::size_t(i)] = acc;
  }
  return y;
}

double KernelMatrix::quadratic_form(const std::vector<std::complex<double>>& x) const {
  auto y = apply(x);
  std::complex<double> acc = 0.0;
  for (int i = 0; i < size_; ++i) acc += std::conj(x[std::size_t(i)]) * y[std::size_t(i)];
  return acc.real();
}

double schur_bound(const KernelMatrix& matrix) {
  int n = matrix.size();
  double max_row = 0.0, max_col = 0.0;
  std::vector<double> col(std::size_t(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      double v = std::abs(matrix.entry(i, j));
      row += v;
      col[std::size_t(j)] += v;
    }
    max_row = std::max(max_row, row);
  }
  for (double v : col) max_col = std::max(max_col, v);
  return max_row + max_col;
}

double ttstar_bound(const KernelMatrix& matrix) {
  int n = matrix.size();
  if (matrix.hermitian_defect() > 1e-10)
    throw invalid_input("ttstar_bound requires a Hermitian matrix");
  double max_row = 0.0;
  auto un = std::size_t(n);
  std::vector<std::complex<double>> prod_row(un);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0.0;
      for (int x = 0; x < n; ++x) acc += matrix.entry(i, x) * matrix.entry(x, j);
      prod_row[std::size_t(j)] = acc;
    }
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(prod_row[std::size_t(j)]);
    max_row = std::max(max_row, row);
  }
  return std::sqrt(max_row);
}

}  // namespace rlab
