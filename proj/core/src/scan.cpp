#include "rlab/scan.hpp"

#include <functional>
#include <map>

#include "rlab/construction.hpp"
#include "rlab/errors.hpp"
#include "rlab/spectral.hpp"
#include "rlab/stationary.hpp"

namespace rlab {
namespace {

using QuantityFn =
    std::function<double(int N, const QuantityRequest&, const Settings&)>;

double opnorm_quantity(int N, const QuantityRequest& q, const Settings& s) {
  PhaseSpec phase = PhaseSpec::monomial(q.k, -1.0);
  auto r = opnorm_iterative(N, phase, -1.0, 1.0, s.tol, 10000, s.seed, s.rho);
  return r.value;
}

double ratio_window_quantity(int N, const QuantityRequest& q, const Settings& s) {
  PhaseSpec phase = PhaseSpec::monomial(q.k, -1.0);
  auto params = make_construction_params(phase, N, s.c_small);
  auto coeffs = interference_coefficients(params, phase);
  InterferenceSet set{1, {params.x_N, 0, 0}, {params.delta, 0, 0}};
  return lower_bound_ratio(coeffs, phase, q.p.value_or(2.0), set);
}

double cylinder_quantity(int N, const QuantityRequest&, const Settings& s) {
  return cylinder_interference(N, s.c_small).l2_ratio;
}

double moment_quantity(int N, const QuantityRequest&, const Settings& s) {
  return moment_curve_interference(N, s.c_small).l6_ratio;
}

double cc_window_quantity(int N, const QuantityRequest& q, const Settings& s) {
  return constant_coefficient_ratio(N, q.k, q.p.value_or(4.0), s.rho).window_ratio;
}

double cc_full_quantity(int N, const QuantityRequest& q, const Settings& s) {
  return constant_coefficient_ratio(N, q.k, q.p.value_or(4.0), s.rho).full_ratio;
}

double row_sum_quantity(int N, const QuantityRequest& q, const Settings& s) {
  StationaryModel model{q.k, double(N), {0.63, 0.63}, s.block_fraction};
  return correlation_summary(model).max_row_sum;
}

double schur_witness_quantity(int N, const QuantityRequest& q, const Settings& s) {
  StationaryModel model{q.k, double(N), {0.63, 0.63}, s.block_fraction};
  return schur_row_sum_witness(model);
}

const std::map<std::string, QuantityFn>& registry() {
  static const std::map<std::string, QuantityFn> table = {
      {"opnorm", opnorm_quantity},
      {"ratio_window", ratio_window_quantity},
      {"cylinder_ratio", cylinder_quantity},
      {"moment_ratio", moment_quantity},
      {"cc_window", cc_window_quantity},
      {"cc_full", cc_full_quantity},
      {"row_sum", row_sum_quantity},
      {"schur_witness", schur_witness_quantity},
  };
  return table;
}

}  // namespace

std::vector<std::string> scan_quantities() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

ScanOutcome run_scan(const QuantityRequest& quantity, const std::vector<int>& Ns,
                     const Settings& settings, bool with_timestamp) {
  auto it = registry().find(quantity.name);
  if (it == registry().end())
    throw invalid_input("unknown scan quantity: " + quantity.name);
  for (std::size_t i = 1; i < Ns.size(); ++i)
    if (Ns[i] <= Ns[i - 1]) throw invalid_input("scan N list must be strictly increasing");

  ScanOutcome out;
  for (int N : Ns) {
    try {
      double value = it->second(N, quantity, settings);
      ExperimentRecord rec;
      rec.quantity = quantity.name;
      rec.N = N;
      rec.k = quantity.k;
      rec.p = quantity.p;
      rec.value = value;
      rec.settings = settings;
      rec.timestamp = with_timestamp ? iso_timestamp_now() : std::string();
      out.records.push_back(std::move(rec));
    } catch (const convergence_error& ex) {
      out.errors.push_back({N, ex.what(), true});
    } catch (const std::exception& ex) {
      out.errors.push_back({N, ex.what(), false});
    }
  }
  return out;
}

}  // namespace rlab
