#pragma once

#include <stdexcept>
#include <string>

namespace alcs {

// Malformed input text (anything other than '0'/'1' plus one trailing '\n').
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A witness does not certify a common subsequence of the pair it claims.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside the domain an operation accepts.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by an edit-distance estimator that cannot honour its contract.
class EstimatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alcs
