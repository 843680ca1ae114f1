#pragma once

#include <stdexcept>
#include <string>

namespace apostol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// A rational function was evaluated at a root of its denominator, or a
/// computation was requested at a parameter value where the kernel has a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Operands of a field operation belong to different coefficient fields.
class VariantMismatch : public Error {
 public:
  explicit VariantMismatch(const std::string& what = "mixed field variants") : Error(what) {}
};

class NonInvertibleSeries : public Error {
 public:
  explicit NonInvertibleSeries(const std::string& what = "series has zero constant term")
      : Error(what) {}
};

class OrderMismatch : public Error {
 public:
  explicit OrderMismatch(const std::string& what = "series truncation orders differ")
      : Error(what) {}
};

class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid suite configuration, grid or identity selection.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace apostol
