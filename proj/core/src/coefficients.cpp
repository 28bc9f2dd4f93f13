#include "rlab/coefficients.hpp"

#include <cmath>

#include "rlab/errors.hpp"

namespace rlab {

CoefficientVector::CoefficientVector(int lo, std::vector<std::complex<double>> values)
    : lo_(lo), values_(std::move(values)) {
  if (values_.empty()) throw invalid_input("coefficient vector must be nonempty");
  for (const auto& z : values_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw invalid_input("coefficient vector must be finite");
}

CoefficientVector CoefficientVector::zeros(int lo, int hi) {
  if (hi < lo) throw invalid_input("coefficient range is empty");
  return CoefficientVector(lo, std::vector<std::complex<double>>(hi - lo + 1, 0.0));
}

CoefficientVector CoefficientVector::delta(int lo, int hi, int index,
                                           std::complex<double> value) {
  CoefficientVector v = zeros(lo, hi);
  v.set(index, value);
  return v;
}

CoefficientVector CoefficientVector::ones(int lo, int hi) {
  if (hi < lo) throw invalid_input("coefficient range is empty");
  return CoefficientVector(lo, std::vector<std::complex<double>>(hi - lo + 1, 1.0));
}

std::complex<double> CoefficientVector::at(int n) const {
  if (n < lo_ || n > hi()) return 0.0;
  return values_[n - lo_];
}

void CoefficientVector::set(int n, std::complex<double> z) {
  if (n < lo_ || n > hi()) throw invalid_input("coefficient index out of range");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw invalid_input("coefficient must be finite");
  values_[n - lo_] = z;
  l2_cache_ = -1.0;
}

double CoefficientVector::l2_norm() const {
  if (l2_cache_ < 0.0) {
    double s = 0.0;
    for (const auto& z : values_) s += std::norm(z);
    l2_cache_ = std::sqrt(s);
  }
  return l2_cache_;
}

int CoefficientVector::nonzero_count() const {
  int c = 0;
  for (const auto& z : values_)
    if (z != std::complex<double>(0.0)) ++c;
  return c;
}

}  // namespace rlab
