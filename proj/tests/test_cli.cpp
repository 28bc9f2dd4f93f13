#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rlab/cli.hpp"

using namespace rlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validation failures exit with code 2") {
  CHECK(run_cli({"opnorm", "--k", "1", "--n", "8"}) == 2);
  CHECK(run_cli({"opnorm", "--k", "3", "--n", "8", "--rho", "2"}) == 2);
  CHECK(run_cli({"nonsense"}) == 2);
  CHECK(run_cli({"kernels", "--check", "bogus", "--n", "128"}) == 2);
  CHECK(run_cli({"lowerbound", "--quantity", "bogus", "--n", "128"}) == 2);
}

TEST_CASE("non-convergence exits with code 3") {
  CHECK(run_cli({"opnorm", "--k", "3", "--n", "16", "--tol", "1e-14", "--max-iter",
                 "2"}) == 3);
}

TEST_CASE("small opnorm run writes records and exits 0") {
  std::string out = temp_path("rlab_cli_records.csv");
  std::filesystem::remove(out);
  CHECK(run_cli({"opnorm", "--k", "3", "--n", "8,16", "--tol", "1e-5", "--rho", "4",
                 "--out", out, "--no-timestamp"}) == 0);
  auto text = slurp(out);
  CHECK(text.find("quantity,N,k,p,value") != std::string::npos);
  CHECK(text.find("opnorm,8,3,") != std::string::npos);
  CHECK(text.find("opnorm,16,3,") != std::string::npos);
  std::filesystem::remove(out);
}

TEST_CASE("identical settings reproduce identical record bytes") {
  std::string out1 = temp_path("rlab_cli_a.csv");
  std::string out2 = temp_path("rlab_cli_b.csv");
  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
  std::vector<std::string> base{"opnorm", "--k", "3", "--n",  "8,16",
                                "--tol",  "1e-5", "--rho", "4", "--no-timestamp"};
  auto run1 = base;
  run1.push_back("--out");
  run1.push_back(out1);
  auto run2 = base;
  run2.push_back("--out");
  run2.push_back(out2);
  CHECK(run_cli(run1) == 0);
  CHECK(run_cli(run2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
}

TEST_CASE("config file supplies defaults and flags override") {
  std::string conf = temp_path("rlab_cli_conf.ini");
  std::string out = temp_path("rlab_cli_conf_records.csv");
  std::filesystem::remove(out);
  {
    std::ofstream f(conf);
    f << "# scan configuration\n";
    f << "k = 3\n";
    f << "n = 8\n";
    f << "tol = 1e-5\n";
    f << "rho = 4\n";
    f << "no-timestamp = true\n";
  }
  CHECK(run_cli({"opnorm", "--config", conf, "--out", out}) == 0);
  auto text = slurp(out);
  CHECK(text.find("opnorm,8,3,") != std::string::npos);
  // flag overrides the config file N
  std::filesystem::remove(out);
  CHECK(run_cli({"opnorm", "--config", conf, "--n", "16", "--out", out}) == 0);
  text = slurp(out);
  CHECK(text.find("opnorm,16,3,") != std::string::npos);
  CHECK(text.find("opnorm,8,3,") == std::string::npos);
  std::filesystem::remove(out);
  std::filesystem::remove(conf);
}

TEST_CASE("help lists the configuration keys") {
  CHECK(run_cli({"opnorm", "--help"}) == 0);
  CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("property suites run clean") {
  CHECK(run_cli({"tests", "--suite", "partial-summation", "--trials", "50"}) == 0);
  CHECK(run_cli({"tests", "--suite", "bogus"}) == 2);
}

TEST_CASE("json export is written alongside csv") {
  std::string out = temp_path("rlab_cli_json.json");
  std::filesystem::remove(out);
  CHECK(run_cli({"opnorm", "--k", "3", "--n", "8", "--tol", "1e-5", "--rho", "4",
                 "--json-out", out, "--no-timestamp"}) == 0);
  auto text = slurp(out);
  CHECK(text.find("\"quantity\":\"opnorm\"") != std::string::npos);
  std::filesystem::remove(out);
}

}  // TEST_SUITE
