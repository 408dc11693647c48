#ifndef SWIPTRELAY_ERRORS_HPP
#define SWIPTRELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swiptrelay {

// Numerical failures (quadrature budget exhausted, series divergence, ...).
// The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct QuadratureError : NumericalError {
  explicit QuadratureError(const std::string& msg) : NumericalError(msg) {}
};

struct SeriesError : NumericalError {
  explicit SeriesError(const std::string& msg) : NumericalError(msg) {}
};

// Bad configs, bad manifests, violated preconditions. Exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace swiptrelay

#endif
