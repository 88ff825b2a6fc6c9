// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ternlab {

using Cx = std::complex<double>;

// All failures carry a short machine-readable code ("dim-mismatch",
// "parse-error", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

// Two-sided tolerance: a residual r measured against a problem scale s is
// acceptable iff r <= atol + rtol * s.
struct TolerancePolicy {
  double atol = 1e-12;
  double rtol = 1e-9;

  double bound(double scale) const { return atol + rtol * scale; }
  bool admits(double residual, double scale) const {
    return residual <= bound(scale);
  }
  // Criterion for laws that are supposed to break: the violation must be
  // an order of magnitude beyond anything attributable to roundoff.
  bool clearly_violates(double residual, double scale) const {
    return residual > 10.0 * bound(scale);
  }
};

}  // namespace ternlab
