#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rlab {

// Bad arguments or violated preconditions. CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured budget (memory, matrix size).
// CLI maps this to exit code 2 as well: the request was not serviceable.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_(required) {}
  std::int64_t required() const { return required_; }

 private:
  std::int64_t required_;
};

// An iteration ran out of budget before meeting its tolerance.
// CLI maps this to exit code 3.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last_residual, int iterations)
      : std::runtime_error(what), residual_(last_residual), iterations_(iterations) {}
  double last_residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace rlab
