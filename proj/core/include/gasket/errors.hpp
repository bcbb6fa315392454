#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CellValidationError : Error {
  using Error::Error;
};

struct InvalidForestError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct DisconnectedError : Error {
  using Error::Error;
};

struct ConsistencyError : Error {
  using Error::Error;
};

struct DegreeCapError : Error {
  using Error::Error;
};

struct WalkCapError : Error {
  using Error::Error;
};

}  // namespace gasket
