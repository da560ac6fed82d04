#ifndef EQPARSE_ERROR_H_
#define EQPARSE_ERROR_H_

#include <stdexcept>
#include <string>

namespace eqparse {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (corpus lines, annotations, model
// files). The CLI maps this to exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace eqparse

#endif  // EQPARSE_ERROR_H_
