#pragma once

#include <stdexcept>
#include <string>

namespace casorati {

/// Bad argument: singular basis matrix, h = 0, parity mismatch, malformed input.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point outside a function's declared domain (e.g. ln at x <= 0).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Division by zero, or a NaN/inf produced on the float path.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation not defined for this kind (exact derivative of a tabulated
/// function, exact evaluation of a transcendental one, ...).
class unsupported_operation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every grid point of a ratio sweep fell under the degeneracy floor.
class degenerate_sweep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sample data that cannot come from a solution of the difference equation.
class inconsistent_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casorati
