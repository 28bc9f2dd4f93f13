#pragma once

#include <complex>
#include <vector>

namespace rlab {

// Complex weights a_n on a contiguous integer index range [lo, hi].
// The l2 norm is computed once and cached; mutation through set() refreshes it
// lazily.
class CoefficientVector {
 public:
  CoefficientVector(int lo, std::vector<std::complex<double>> values);

  static CoefficientVector zeros(int lo, int hi);
  // All-zero except a_index = value.
  static CoefficientVector delta(int lo, int hi, int index,
                                 std::complex<double> value = 1.0);
  static CoefficientVector ones(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return lo_ + int(values_.size()) - 1; }
  int size() const { return int(values_.size()); }

  std::complex<double> at(int n) const;  // 0 outside [lo, hi]
  void set(int n, std::complex<double> z);

  const std::vector<std::complex<double>>& values() const { return values_; }

  double l2_norm() const;
  int nonzero_count() const;

 private:
  int lo_;
  std::vector<std::complex<double>> values_;
  mutable double l2_cache_ = -1.0;
};

}  // namespace rlab
