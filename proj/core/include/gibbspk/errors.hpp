#ifndef GIBBSPK_ERRORS_HPP
#define GIBBSPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gibbspk {

// Numerical failure (non-convergence, invalid intermediate result).
// Parameter validation uses std::invalid_argument; range/bounds violations
// use std::out_of_range.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class QuadratureError : public NumericalError {
public:
  QuadratureError(const std::string& what, double achieved_error)
      : NumericalError(what), achieved_error_(achieved_error) {}

  // Absolute error estimate reached before giving up.
  double achieved_error() const { return achieved_error_; }

private:
  double achieved_error_;
};

}  // namespace gibbspk

#endif  // GIBBSPK_ERRORS_HPP
