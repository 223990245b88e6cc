#pragma once

#include <stdexcept>
#include <string>

namespace heisenkep {

/// Division by an exact zero (scalar, polynomial or rational function).
class ZeroDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole of a potential or at a collision (rho = 0).
class SingularEvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace heisenkep
