#pragma once

#include <stdexcept>
#include <string>

namespace intgeo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Inverse requested for a Scalar with more than one pi-power term, or for a
// matrix whose entries do not factor as pi^(r_i + c_j) * rational.
class UnsupportedInverse : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Two routes to the same quantity disagreed. Never recoverable.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace intgeo
