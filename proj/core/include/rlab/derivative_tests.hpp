#pragma once

#include <functional>
#include <span>

namespace rlab {

struct DerivativeTestResult {
  double lhs = 0.0;    // |sum over integer points of e(f(x))|
  double rhs = 0.0;    // the derivative-test bound
  double ratio = 0.0;  // lhs / rhs
};

// Complete exponential-sum derivative tests over the integer points of
// [a, b]. order 1: f' monotone with |f'| ~ lambda = o(1), bound lambda^{-1};
// order 2: |f''| ~ lambda, bound lambda^{1/2} |I| + lambda^{-1/2}.
// Preconditions are measured on the integer samples (first and second
// differences standing in for f' and f''); violations raise invalid_input.
DerivativeTestResult derivative_test_check(int order,
                                           const std::function<double(double)>& f,
                                           long a, long b, double lambda);

struct PartialSummationResult {
  double lhs = 0.0;      // |sum w_x e(f(x))|
  double rhs = 0.0;      // V1 norm times the largest partial character sum
  double v1_norm = 0.0;  // |w_b| + total variation of w
  double max_partial = 0.0;
};

// Summation-by-parts bound for weighted character sums over the integer
// interval {a+1, ..., b}: w and fvals are indexed in that order.
PartialSummationResult partial_summation_bound(std::span<const double> w,
                                               std::span<const double> fvals);

}  // namespace rlab
