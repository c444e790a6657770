#pragma once

#include <stdexcept>
#include <string>

namespace latscale {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& what = "matrix is singular") : Error(what) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct ZeroConstantTermError : Error {
  explicit ZeroConstantTermError(const std::string& what = "constant coefficient is zero") : Error(what) {}
};

struct NonDiagonalInputError : Error {
  explicit NonDiagonalInputError(const std::string& what = "generators must be diagonal") : Error(what) {}
};

struct InsufficientDataError : Error {
  explicit InsufficientDataError(const std::string& what = "not enough data points") : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace latscale
