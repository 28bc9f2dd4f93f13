#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rlab/errors.hpp"
#include "rlab/fitting.hpp"
#include "rlab/records.hpp"
#include "rlab/scan.hpp"

using namespace rlab;
using doctest::Approx;

namespace {

std::vector<ExperimentRecord> synthetic(const std::vector<int>& Ns,
                                        double (*fn)(double)) {
  std::vector<ExperimentRecord> out;
  for (int N : Ns) {
    ExperimentRecord r;
    r.quantity = "synthetic";
    r.N = N;
    r.k = 3;
    r.value = fn(double(N));
    out.push_back(r);
  }
  return out;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("scaling") {

TEST_CASE("pure power law is recovered exactly") {
  auto recs = synthetic({64, 128, 256, 512, 1024},
                        [](double N) { return 7.0 * std::pow(N, 0.25); });
  auto fit = fit_exponent(recs, FitModel::pure_power);
  CHECK(fit.exponent == Approx(0.25).epsilon(1e-10));
  CHECK(fit.amplitude == Approx(7.0).epsilon(1e-10));
  CHECK(fit.residual < 1e-10);
}

TEST_CASE("log-corrected model recovers the power under a log factor") {
  auto recs = synthetic({64, 128, 256, 512, 1024, 2048, 4096}, [](double N) {
    return std::pow(N, 1.0 / 12.0) * std::log(N);
  });
  auto fit = fit_exponent(recs, FitModel::power_log);
  CHECK(std::abs(fit.exponent - 1.0 / 12.0) < 0.005);
  CHECK(fit.log_power.value() == 1.0);

  auto fit_free = fit_exponent(recs, FitModel::power_log, /*free_log_power=*/true);
  CHECK(std::abs(fit_free.exponent - 1.0 / 12.0) < 0.01);
  CHECK(std::abs(fit_free.log_power.value() - 1.0) < 0.05);
}

TEST_CASE("fit preconditions") {
  auto two = synthetic({64, 128}, [](double N) { return N; });
  CHECK_THROWS_AS(fit_exponent(two, FitModel::pure_power), invalid_input);
  auto three = synthetic({64, 128, 256}, [](double N) { return N; });
  CHECK_THROWS_AS(fit_exponent(three, FitModel::power_log), invalid_input);
  auto bad = synthetic({64, 128, 256}, [](double) { return -1.0; });
  CHECK_THROWS_AS(fit_exponent(bad, FitModel::pure_power), invalid_input);
}

TEST_CASE("fit is scale-equivariant and order-invariant") {
  auto recs = synthetic({64, 96, 128, 256, 700},
                        [](double N) { return 3.0 * std::pow(N, 0.4) * (1.0 + 0.01 * std::sin(N)); });
  auto fit1 = fit_exponent(recs, FitModel::pure_power);
  auto scaled = recs;
  for (auto& r : scaled) r.value *= 13.7;
  auto fit2 = fit_exponent(scaled, FitModel::pure_power);
  CHECK(std::abs(fit1.exponent - fit2.exponent) < 1e-12);
  CHECK(fit2.amplitude == Approx(13.7 * fit1.amplitude).epsilon(1e-10));

  std::swap(recs[0], recs[3]);
  std::swap(recs[1], recs[4]);
  auto fit3 = fit_exponent(recs, FitModel::pure_power);
  CHECK(std::abs(fit1.exponent - fit3.exponent) < 1e-12);
}

TEST_CASE("records round trip losslessly") {
  std::string path = temp_path("rlab_records_test.csv");
  std::vector<ExperimentRecord> recs;
  for (int i = 0; i < 3; ++i) {
    ExperimentRecord r;
    r.quantity = "opnorm";
    r.N = 64 << i;
    r.k = 3;
    if (i != 1) r.p = 2.0 + 0.1 * i;
    r.value = std::sqrt(2.0) * (1 + i) + 1e-16 * i;
    r.settings.tol = 3.25e-7;
    r.settings.seed = 42;
    r.timestamp = "2026-08-09T12:00:00Z";
    recs.push_back(r);
  }
  persist(recs, path);
  auto loaded = load_records(path);
  REQUIRE(loaded.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(loaded[i].quantity == recs[i].quantity);
    CHECK(loaded[i].N == recs[i].N);
    CHECK(loaded[i].k == recs[i].k);
    CHECK(loaded[i].p.has_value() == recs[i].p.has_value());
    if (recs[i].p) CHECK(*loaded[i].p == *recs[i].p);
    CHECK(loaded[i].value == recs[i].value);  // bit-exact round trip
    CHECK(loaded[i].settings.tol == recs[i].settings.tol);
    CHECK(loaded[i].settings.seed == recs[i].settings.seed);
    CHECK(loaded[i].timestamp == recs[i].timestamp);
  }
  // appending keeps the existing rows
  persist({recs[0]}, path, /*append=*/true);
  CHECK(load_records(path).size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("empty and malformed record files") {
  std::string path = temp_path("rlab_records_empty.csv");
  { std::ofstream out(path); }
  CHECK(load_records(path).empty());

  {
    std::ofstream out(path);
    out << "quantity,N,k,p,value,c_small,C_k,rho,tol,seed,timestamp\n";
    out << "opnorm,64,3,,1.5,0.1,0.5,8,1e-9,1,\n";
    out << "broken,row,with,bad,number,x,y,z,w,v,\n";
  }
  try {
    load_records(path);
    FAIL("expected invalid_input");
  } catch (const invalid_input& ex) {
    CHECK(std::string(ex.what()).find("line 3") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("json export carries the same fields") {
  ExperimentRecord r;
  r.quantity = "opnorm";
  r.N = 64;
  r.k = 3;
  r.value = 2.25;
  r.timestamp = "T";
  auto s = records_to_json({r});
  CHECK(s.find("\"quantity\":\"opnorm\"") != std::string::npos);
  CHECK(s.find("\"p\":null") != std::string::npos);
  CHECK(s.find("\"value\":2.25") != std::string::npos);
}

TEST_CASE("scan: empty list, monotone opnorm records, determinism") {
  QuantityRequest q{"opnorm", 3, std::nullopt};
  Settings s;
  s.tol = 1e-5;
  s.rho = 4.0;
  auto empty = run_scan(q, {}, s);
  CHECK(empty.records.empty());
  CHECK(empty.errors.empty());

  auto out1 = run_scan(q, {16, 32}, s, /*with_timestamp=*/false);
  REQUIRE(out1.records.size() == 2);
  CHECK(out1.records[1].value > out1.records[0].value);

  auto out2 = run_scan(q, {16, 32}, s, /*with_timestamp=*/false);
  CHECK(out1.records[0].value == out2.records[0].value);
  CHECK(out1.records[1].value == out2.records[1].value);

  CHECK_THROWS_AS(run_scan(q, {32, 16}, s), invalid_input);
  CHECK_THROWS_AS(run_scan(QuantityRequest{"nope", 3, {}}, {16}, s), invalid_input);
}

TEST_CASE("scan records per-N failures and continues") {
  QuantityRequest q{"cylinder_ratio", 3, std::nullopt};
  Settings s;
  auto out = run_scan(q, {8, 128}, s, false);  // N = 8 is below the cylinder floor
  CHECK(out.records.size() == 1);
  CHECK(out.records[0].N == 128);
  REQUIRE(out.errors.size() == 1);
  CHECK(out.errors[0].N == 8);
  CHECK_FALSE(out.errors[0].convergence);
}

}  // TEST_SUITE
