#pragma once

#include <functional>
#include <optional>

#include "rlab/characters.hpp"

namespace rlab {

enum class PhaseKind { monomial_curve, general_scalar, cylinder_2d, moment_curve_2d };

// Smooth scalar function with derivative oracles, for phase families that
// are not monomials. deriv(x, 0) is the function itself.
struct SmoothFn {
  std::function<double(double x, int order)> deriv;
  int max_order = 0;
};

// A one-parameter family of phases psi(x, n).
//   monomial_curve:  psi(x, n) = n x + beta n^2 x^k
//   general_scalar:  psi(x, n) = n x - n^2 phi(x)
//   cylinder_2d / moment_curve_2d: tags for the two- and three-dimensional
//   constructions; their per-coordinate pieces are the k = 3 monomial with
//   beta = -1.
class PhaseSpec {
 public:
  static PhaseSpec monomial(int k, double beta);
  static PhaseSpec general(int k, SmoothFn phi);
  static PhaseSpec cylinder();      // k = 3, beta = -1 per coordinate
  static PhaseSpec moment_curve();  // k = 3, beta = -1 substituted variables

  PhaseKind kind() const { return kind_; }
  int k() const { return k_; }
  double beta() const { return beta_; }

  double psi(double x, double n) const;
  PhasePoly poly_at(double x) const;  // psi(x, .) as a polynomial in n

  // phi and derivatives: x^k closed form for monomials, oracle otherwise.
  double phi(double x) const { return phi_deriv(x, 0); }
  double phi_deriv(double x, int order) const;

  // sup over n in [-N, N] and x in [lo, hi] of |d/dx psi(x, n)|, in cycles.
  double max_frequency(double lo, double hi, double N) const;
  // integral over [lo, hi] of sup_n |d/dx psi(x, n)| dx (total variation bound).
  double total_variation(double lo, double hi, double N) const;

  // Points accepted by eval_sum and the quadrature builders.
  static bool admissible(double x) { return std::abs(x) <= 2.0; }

 private:
  PhaseSpec(PhaseKind kind, int k, double beta) : kind_(kind), k_(k), beta_(beta) {}

  PhaseKind kind_;
  int k_;
  double beta_;
  std::optional<SmoothFn> phi_;
};

}  // namespace rlab
