#include "rlab/derivative_tests.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "rlab/characters.hpp"
#include "rlab/errors.hpp"

namespace rlab {
namespace {

std::complex<double> integer_char_sum(const std::function<double(double)>& f, long a,
                                      long b) {
  double sr = 0.0, si = 0.0;
  for (long x = a; x <= b; ++x) {
    auto c = e(f(double(x)));
    sr += c.real();
    si += c.imag();
  }
  return {sr, si};
}

}  // namespace

DerivativeTestResult derivative_test_check(int order,
                                           const std::function<double(double)>& f,
                                           long a, long b, double lambda) {
  if (order != 1 && order != 2) throw invalid_input("derivative test order must be 1 or 2");
  if (b - a < 1) throw invalid_input("interval must have length at least one");
  if (!(lambda > 0.0)) throw invalid_input("lambda must be positive");

  // measure the preconditions on integer samples
  long len = b - a;
  std::vector<double> d1(static_cast<std::size_t>(len));
  for (long x = a; x < b; ++x) d1[std::size_t(x - a)] = f(double(x + 1)) - f(double(x));
  if (order == 1) {
    if (lambda > 0.25) throw invalid_input("order-1 test requires lambda = o(1)");
    bool up = true, down = true;
    double slack = 1e-9 * lambda;  // rounding wobble of the sampled differences
    for (std::size_t i = 0; i + 1 < d1.size(); ++i) {
      if (d1[i + 1] < d1[i] - slack) up = false;
      if (d1[i + 1] > d1[i] + slack) down = false;
    }
    if (!up && !down) throw invalid_input("f' is not monotone on the interval");
    for (double d : d1)
      if (std::abs(d) < lambda / 5.0 || std::abs(d) > 5.0 * lambda)
        throw invalid_input("|f'| is not comparable to lambda on the interval");
  } else {
    if (d1.size() >= 2) {
      for (std::size_t i = 0; i + 1 < d1.size(); ++i) {
        double dd = std::abs(d1[i + 1] - d1[i]);
        if (dd < lambda / 5.0 || dd > 5.0 * lambda)
          throw invalid_input("|f''| is not comparable to lambda on the interval");
      }
    }
  }

  DerivativeTestResult r;
  r.lhs = std::abs(integer_char_sum(f, a, b));
  if (order == 1) {
    r.rhs = 1.0 / lambda;
  } else {
    r.rhs = std::sqrt(lambda) * double(b - a) + 1.0 / std::sqrt(lambda);
  }
  r.ratio = r.lhs / r.rhs;
  return r;
}

PartialSummationResult partial_summation_bound(std::span<const double> w,
                                               std::span<const double> fvals) {
  if (w.size() != fvals.size() || w.empty())
    throw invalid_input("weights and phases must be nonempty and equal length");
  std::size_t len = w.size();

  PartialSummationResult r;
  double sr = 0.0, si = 0.0;   // weighted sum
  double pr = 0.0, pi = 0.0;   // running character partial sum
  for (std::size_t i = 0; i < len; ++i) {
    auto c = e(fvals[i]);
    sr += w[i] * c.real();
    si += w[i] * c.imag();
    pr += c.real();
    pi += c.imag();
    r.max_partial = std::max(r.max_partial, std::hypot(pr, pi));
  }
  r.lhs = std::hypot(sr, si);

  r.v1_norm = std::abs(w[len - 1]);
  for (std::size_t i = 0; i + 1 < len; ++i) r.v1_norm += std::abs(w[i + 1] - w[i]);
  r.rhs = r.v1_norm * r.max_partial;
  return r;
}

}  // namespace rlab
