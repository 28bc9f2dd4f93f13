#pragma once

#include <complex>
#include <vector>

namespace rlab {

// Dense Hermitian complex matrix with an index offset: entry (n, m) of the
// mathematical kernel lives at [n - offset][m - offset].
class KernelMatrix {
 public:
  enum class Tag { gram, stationary_model, correlation };

  KernelMatrix(int offset, int size, Tag tag);

  int offset() const { return offset_; }
  int size() const { return size_; }
  Tag tag() const { return tag_; }

  std::complex<double>& at(int n, int m) {
    return data_[std::size_t(n - offset_) * std::size_t(size_) + std::size_t(m - offset_)];
  }
  const std::complex<double>& at(int n, int m) const {
    return data_[std::size_t(n - offset_) * std::size_t(size_) + std::size_t(m - offset_)];
  }
  std::complex<double>& entry(int i, int j) {
    return data_[std::size_t(i) * std::size_t(size_) + std::size_t(j)];
  }
  const std::complex<double>& entry(int i, int j) const {
    return data_[std::size_t(i) * std::size_t(size_) + std::size_t(j)];
  }

  const std::vector<std::complex<double>>& data() const { return data_; }

  // max over entries of |A - A^H|
  double hermitian_defect() const;
  // overwrite with (A + A^H)/2
  void symmetrize();

  // y = A x
  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& x) const;
  // x^H A x (real part; the form is real for Hermitian A)
  double quadratic_form(const std::vector<std::complex<double>>& x) const;

 private:
  int offset_;
  int size_;
  Tag tag_;
  std::vector<std::complex<double>> data_;
};

// max_n sum_m |A_nm| + max_m sum_n |A_nm|; bounds the spectral norm.
double schur_bound(const KernelMatrix& matrix);

// sqrt(max_n sum_m |(A A)_nm|) for Hermitian A; bounds the spectral norm.
// Throws invalid_input if the matrix is not Hermitian.
double ttstar_bound(const KernelMatrix& matrix);

}  // namespace rlab
